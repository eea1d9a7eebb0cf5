"""Exact derived functors and derived limits over extension categories."""

try:
    from ._extlim import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - in-tree builds put _extlim on sys.path
    from _extlim import *  # noqa: F401,F403

__all__ = [
    "group",
    "hnf",
    "snf",
    "kernel_basis",
    "solve",
    "tor",
    "derived",
    "lim",
    "extcat_lim",
    "verify",
    "suites",
    "InputError",
    "SizeGuardError",
]
