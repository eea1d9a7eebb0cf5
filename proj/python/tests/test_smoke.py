import json
import os
import sys

import pytest

module_dir = os.environ.get("EXTLIM_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)
source_dir = os.environ.get("EXTLIM_SOURCE_DIR")
if source_dir:
    sys.path.insert(0, os.path.join(source_dir, "python"))

extlim = pytest.importorskip("extlim")


def test_group():
    g = extlim.group("Z/4+Z/6")
    assert g["free_rank"] == 0
    assert g["torsion"] == [2, 12]
    assert g["expr"] == "Z/2+Z/12"


def test_group_rejects_bad_input():
    with pytest.raises(extlim.InputError):
        extlim.group("Z/0")


def test_normal_forms():
    assert extlim.hnf([[6, 4]]) == [[2]]
    s = extlim.snf([[2, 0], [0, 3]])
    assert s["D"] == [[1, 0], [0, 6]]
    assert extlim.kernel_basis([[1, 1]]) == [[1], [-1]]
    assert extlim.solve([[2]], [4]) == [2]
    assert extlim.solve([[2]], [3]) is None


def test_tor_methods_agree():
    for method in ("resolution", "intersection", "equalizer", "kunneth"):
        g = extlim.tor(["Z/2"], arity=3, method=method)
        assert g["expr"] == "Z/2", method
    assert extlim.tor(["Z/4", "Z/6"])["expr"] == "Z/2"
    assert extlim.tor(["Z"], arity=2)["expr"] == "0"


def test_derived_functors():
    assert extlim.derived("lambda", 2, 1, "Z/2")["expr"] == "Z/2"
    assert extlim.derived("sp", 2, 1, "Z/2")["expr"] == "0"
    assert extlim.derived("sp", 2, 0, "Z/2")["expr"] == "Z/2"
    assert extlim.derived("lambda", 2, 1, "Z/2", via="kernel")["expr"] == "Z/2"


def test_lim_of_parallel_pair():
    diagram = {
        "objects": [{"id": "x", "group": "Z"}, {"id": "y", "group": "Z"}],
        "morphisms": [
            {"id": "u", "src": "x", "dst": "y", "matrix": [[1]]},
            {"id": "v", "src": "x", "dst": "y", "matrix": [[-1]]},
        ],
        "compositions": [],
    }
    text = json.dumps(diagram)
    assert extlim.lim(text, degree=0)["expr"] == "0"
    assert extlim.lim(text, degree=1)["expr"] == "Z/2"


def test_extcat_recipe():
    recipe = {
        "base": "Z/6",
        "objects": ["canonical", "double(0)"],
        "morphisms": ["f1(0)", "f2(0)"],
        "functor": {"kind": "tensor_quot", "n": 2},
    }
    assert extlim.extcat_lim(json.dumps(recipe))["expr"] == "Z/6"


def test_verify_single_suite():
    results = extlim.verify("gamma-duality")
    assert len(results) == 1
    assert results[0]["passed"]
