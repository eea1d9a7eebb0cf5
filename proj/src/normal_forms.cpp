#include "extlim/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "extlim/error.hpp"

namespace extlim {

std::size_t SmithDecomposition::diagonal_length() const {
    return std::min(D.rows(), D.cols());
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < diagonal_length(); ++i)
        if (D(i, i) != 0) ++r;
    return r;
}

ColumnEchelon column_echelon(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix t = IntMatrix::identity(m.cols());
    std::vector<std::size_t> pivot_rows;
    std::size_t c = 0;  // next output column
    for (std::size_t r = 0; r < a.rows() && c < a.cols(); ++r) {
        // pick the column with minimal |entry| at row r among columns >= c
        std::size_t best = a.cols();
        for (std::size_t j = c; j < a.cols(); ++j) {
            if (a(r, j) == 0) continue;
            if (best == a.cols() || abs(a(r, j)) < abs(a(r, best))) best = j;
        }
        if (best == a.cols()) continue;
        a.swap_cols(c, best);
        t.swap_cols(c, best);
        // gcd-combine the remaining columns into column c at row r
        for (std::size_t j = c + 1; j < a.cols(); ++j) {
            if (a(r, j) == 0) continue;
            const Int x = a(r, c), y = a(r, j);
            XgcdResult e = xgcd(x, y);
            // [col_c col_j] <- [col_c col_j] * [[p, -y/g],[q, x/g]], det = 1
            Int xg = x / e.g, yg = y / e.g;
            for (std::size_t i = 0; i < a.rows(); ++i) {
                Int ac = a(i, c), aj = a(i, j);
                a(i, c) = e.p * ac + e.q * aj;
                a(i, j) = xg * aj - yg * ac;
            }
            for (std::size_t i = 0; i < t.rows(); ++i) {
                Int tc = t(i, c), tj = t(i, j);
                t(i, c) = e.p * tc + e.q * tj;
                t(i, j) = xg * tj - yg * tc;
            }
        }
        if (a(r, c) < 0) {
            a.negate_col(c);
            t.negate_col(c);
        }
        pivot_rows.push_back(r);
        ++c;
    }
    // Reduce off-pivot entries in each pivot row into [0, pivot).
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
        std::size_t r = pivot_rows[j];
        for (std::size_t l = 0; l < j; ++l) {
            Int q = floor_div(a(r, l), a(r, j));
            if (q != 0) {
                a.add_col_multiple(l, j, -q);
                t.add_col_multiple(l, j, -q);
            }
        }
    }
    ColumnEchelon res;
    res.echelon = std::move(a);
    res.transform = std::move(t);
    res.pivot_rows = std::move(pivot_rows);
    return res;
}

HermiteBasis hnf(const IntMatrix& m) {
    ColumnEchelon e = column_echelon(m);
    std::vector<std::size_t> keep(e.rank());
    for (std::size_t j = 0; j < keep.size(); ++j) keep[j] = j;
    return HermiteBasis{e.echelon.columns(keep)};
}

HermiteBasis kernel_basis(const IntMatrix& m) {
    ColumnEchelon e = column_echelon(m);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = e.rank(); j < m.cols(); ++j) free_cols.push_back(j);
    return hnf(e.transform.columns(free_cols));
}

std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
    ColumnEchelon e = column_echelon(m);
    std::vector<Int> res = b;
    std::vector<Int> y(m.cols());
    for (std::size_t j = 0; j < e.rank(); ++j) {
        std::size_t r = e.pivot_rows[j];
        const Int& piv = e.echelon(r, j);
        if (res[r] % piv != 0) return std::nullopt;
        y[j] = res[r] / piv;
        if (y[j] != 0)
            for (std::size_t i = 0; i < m.rows(); ++i) res[i] -= y[j] * e.echelon(i, j);
    }
    for (const Int& v : res)
        if (v != 0) return std::nullopt;
    return e.transform.apply(y);
}

std::optional<std::vector<Int>> EchelonSolver::solve(const std::vector<Int>& b) const {
    if (b.size() != rows_) throw InputError("solve: right-hand side length mismatch");
    std::vector<Int> res = b;
    std::vector<Int> y(e_.transform.rows());
    for (std::size_t j = 0; j < e_.rank(); ++j) {
        std::size_t r = e_.pivot_rows[j];
        const Int& piv = e_.echelon(r, j);
        if (res[r] % piv != 0) return std::nullopt;
        y[j] = res[r] / piv;
        if (y[j] != 0)
            for (std::size_t i = 0; i < rows_; ++i) res[i] -= y[j] * e_.echelon(i, j);
    }
    for (const Int& v : res)
        if (v != 0) return std::nullopt;
    return e_.transform.apply(y);
}

std::optional<std::vector<Int>> solve_hermite(const IntMatrix& hermite,
                                              const std::vector<Int>& b) {
    if (b.size() != hermite.rows()) throw InputError("solve_hermite: length mismatch");
    std::vector<Int> res = b;
    std::vector<Int> y(hermite.cols());
    for (std::size_t j = 0; j < hermite.cols(); ++j) {
        std::size_t r = 0;
        while (r < hermite.rows() && hermite(r, j) == 0) ++r;
        if (r == hermite.rows()) throw InputError("solve_hermite: zero column in basis");
        if (res[r] % hermite(r, j) != 0) return std::nullopt;
        y[j] = res[r] / hermite(r, j);
        if (y[j] != 0)
            for (std::size_t i = r; i < res.size(); ++i) res[i] -= y[j] * hermite(i, j);
    }
    for (const Int& v : res)
        if (v != 0) return std::nullopt;
    return y;
}

SmithDecomposition snf(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < lim; ++t) {
        // pivot: minimal |entry| in the trailing block
        std::size_t pi = a.rows(), pj = a.cols();
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                if (pi == a.rows() || abs(a(i, j)) < abs(a(pi, pj))) { pi = i; pj = j; }
            }
        if (pi == a.rows()) break;
        a.swap_rows(t, pi); u.swap_rows(t, pi);
        a.swap_cols(t, pj); v.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) {  // remainder becomes the smaller pivot
                    a.swap_rows(t, i); u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j); v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block for the chain to hold
            for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
                for (std::size_t j = t + 1; j < a.cols() && clean; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        clean = false;
                    }
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return SmithDecomposition{std::move(u), std::move(a), std::move(v)};
}

HermiteBasis image_intersection(const IntMatrix& m1, const IntMatrix& m2) {
    if (m1.rows() != m2.rows()) throw InputError("image_intersection: row count mismatch");
    HermiteBasis k = kernel_basis(hstack(m1, -m2));
    IntMatrix x = k.basis.first_rows(m1.cols());
    return hnf(m1 * x);
}

bool in_column_span(const IntMatrix& m, const std::vector<Int>& v) {
    return solve(m, v).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return hnf(a).basis == hnf(b).basis;
}

bool lattice_contained(const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!in_column_span(b, a.col(j))) return false;
    return true;
}

std::vector<Int> reduce_mod_lattice(const HermiteBasis& h, std::vector<Int> v) {
    if (v.size() != h.ambient_rank()) throw InputError("reduce_mod_lattice: length mismatch");
    // pivot row of column j is the topmost nonzero entry
    for (std::size_t j = 0; j < h.rank(); ++j) {
        std::size_t r = 0;
        while (r < h.ambient_rank() && h.basis(r, j) == 0) ++r;
        Int q = floor_div(v[r], h.basis(r, j));
        if (q != 0)
            for (std::size_t i = r; i < v.size(); ++i) v[i] -= q * h.basis(i, j);
    }
    return v;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("unimodular_inverse: not square");
    IntMatrix inv(u.rows(), u.cols());
    for (std::size_t j = 0; j < u.cols(); ++j) {
        std::vector<Int> e(u.rows());
        e[j] = 1;
        auto x = solve(u, e);
        if (!x) throw std::logic_error("unimodular_inverse: matrix is not unimodular");
        for (std::size_t i = 0; i < u.rows(); ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

}  // namespace extlim
