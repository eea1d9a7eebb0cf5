#include "extlim/poly_functors.hpp"

#include <algorithm>
#include <stdexcept>

#include "extlim/error.hpp"
#include "extlim/size_guard.hpp"

namespace extlim {

namespace {

void enumerate_tensor(std::size_t rank, std::size_t degree,
                      std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> t(degree, 0);
    if (degree == 0) {
        out.push_back(t);
        return;
    }
    if (rank == 0) return;
    while (true) {
        out.push_back(t);
        std::size_t i = degree;
        while (i > 0 && t[i - 1] + 1 == rank) t[--i] = 0;
        if (i == 0) break;
        ++t[i - 1];
    }
}

void enumerate_subsets(std::size_t rank, std::size_t degree,
                       std::vector<unsigned> cur, unsigned from,
                       std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == degree) {
        out.push_back(cur);
        return;
    }
    for (unsigned v = from; v < rank; ++v) {
        cur.push_back(v);
        enumerate_subsets(rank, degree, cur, v + 1, out);
        cur.pop_back();
    }
}

void enumerate_exponents(std::size_t rank, std::size_t degree,
                         std::vector<std::vector<unsigned>>& out) {
    if (rank == 0) {
        if (degree == 0) out.push_back({});
        return;
    }
    // lexicographic enumeration of compositions of `degree` into `rank` parts
    std::vector<unsigned> cur(rank, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i + 1 == rank) {
            cur[i] = remaining;
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            cur[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, static_cast<unsigned>(degree));
}

std::size_t checked_size(FunctorKind kind, std::size_t rank, std::size_t degree) {
    Int s;
    switch (kind) {
        case FunctorKind::Tensor: {
            s = 1;
            for (std::size_t i = 0; i < degree; ++i) s *= static_cast<unsigned long>(rank);
            break;
        }
        case FunctorKind::Ext: s = binomial(rank, degree); break;
        default: s = rank == 0 ? (degree == 0 ? 1 : 0) : binomial(rank + degree - 1, degree);
    }
    if (s > Int(size_guard_limit()))
        throw SizeGuardError("functor basis of size " + s.str() + " exceeds guard " +
                             std::to_string(size_guard_limit()));
    return static_cast<std::size_t>(s);
}

}  // namespace

BasisIndexer::BasisIndexer(FunctorKind kind, std::size_t rank, std::size_t degree)
    : kind_(kind), rank_(rank), degree_(degree) {
    checked_size(kind, rank, degree);
    switch (kind) {
        case FunctorKind::Tensor: enumerate_tensor(rank, degree, tuples_); break;
        case FunctorKind::Ext: enumerate_subsets(rank, degree, {}, 0, tuples_); break;
        default: enumerate_exponents(rank, degree, tuples_); break;
    }
    for (std::size_t i = 0; i < tuples_.size(); ++i) pos_[tuples_[i]] = i;
}

std::size_t BasisIndexer::position(const std::vector<unsigned>& t) const {
    auto it = pos_.find(t);
    if (it == pos_.end()) throw std::logic_error("basis tuple not found");
    return it->second;
}

IntMatrix tensor_power_map(const IntMatrix& m, std::size_t n) {
    if (n == 0) return IntMatrix::identity(1);
    checked_size(FunctorKind::Tensor, std::max(m.rows(), m.cols()), n);
    IntMatrix r = m;
    for (std::size_t i = 1; i < n; ++i) r = kronecker(r, m);
    return r;
}

IntMatrix sigma_action(const std::vector<std::size_t>& sigma, std::size_t rank) {
    const std::size_t n = sigma.size();
    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma[i] >= n) throw InputError("sigma_action: not a permutation");
        inverse[sigma[i]] = i;
    }
    BasisIndexer idx(FunctorKind::Tensor, rank, n);
    IntMatrix m(idx.size(), idx.size());
    std::vector<unsigned> image(n);
    for (std::size_t c = 0; c < idx.size(); ++c) {
        const auto& t = idx.tuple(c);
        for (std::size_t k = 0; k < n; ++k) image[k] = t[inverse[k]];
        m(idx.position(image), c) = 1;
    }
    return m;
}

namespace {

/// Shared contingency-matrix walk for SP and Γ. For each source exponent
/// vector a, enumerates nonnegative integer matrices C with column sums a;
/// the row-sum vector b names the target basis element. `row_multinomials`
/// selects the Γ weight ∏_j b_j!/∏_i c_ji! over the SP weight
/// ∏_i a_i!/∏_j c_ji!.
IntMatrix divided_or_symmetric_map(const IntMatrix& m, std::size_t n, bool row_multinomials) {
    BasisIndexer src(FunctorKind::Sym, m.cols(), n);
    BasisIndexer dst(FunctorKind::Sym, m.rows(), n);
    IntMatrix res(dst.size(), src.size());
    const std::size_t rt = m.rows(), rs = m.cols();
    std::vector<unsigned> b(rt, 0);
    std::vector<std::vector<unsigned>> c(rt, std::vector<unsigned>(rs, 0));

    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto& a = src.tuple(col);
        // walk source indices, distributing a_i over target indices
        auto rec = [&](auto&& self, std::size_t i, Int coeff) -> void {
            if (i == rs) {
                Int w = coeff;
                if (row_multinomials) {
                    for (std::size_t j = 0; j < rt; ++j) {
                        w *= factorial(b[j]);
                        for (std::size_t ii = 0; ii < rs; ++ii) w /= factorial(c[j][ii]);
                    }
                }
                res(dst.position(b), col) += w;
                return;
            }
            // compositions of a[i] into rt parts
            auto dist = [&](auto&& dself, std::size_t j, unsigned remaining, Int acc) -> void {
                if (j + 1 == rt || rt == 0) {
                    if (rt == 0) {
                        if (remaining == 0) self(self, i + 1, coeff * acc);
                        return;
                    }
                    if (remaining > 0 && m(j, i) == 0) return;
                    Int term = acc;
                    for (unsigned k = 0; k < remaining; ++k) term *= m(j, i);
                    if (!row_multinomials) term /= factorial(remaining);
                    b[j] += remaining;
                    c[j][i] = remaining;
                    self(self, i + 1, coeff * term);
                    b[j] -= remaining;
                    c[j][i] = 0;
                    return;
                }
                for (unsigned v = 0; v <= remaining; ++v) {
                    if (v > 0 && m(j, i) == 0) break;
                    Int term = acc;
                    for (unsigned k = 0; k < v; ++k) term *= m(j, i);
                    if (!row_multinomials) term /= factorial(v);
                    b[j] += v;
                    c[j][i] = v;
                    dself(dself, j + 1, remaining - v, term);
                    b[j] -= v;
                    c[j][i] = 0;
                }
            };
            if (rt == 0 && a[i] > 0) return;
            Int mul = row_multinomials ? Int(1) : factorial(a[i]);
            dist(dist, 0, a[i], mul);
        };
        rec(rec, 0, 1);
    }
    return res;
}

}  // namespace

IntMatrix sp_map(const IntMatrix& m, std::size_t n) {
    return divided_or_symmetric_map(m, n, false);
}

IntMatrix gamma_map(const IntMatrix& m, std::size_t n) {
    return divided_or_symmetric_map(m, n, true);
}

IntMatrix lambda_map(const IntMatrix& m, std::size_t n) {
    BasisIndexer src(FunctorKind::Ext, m.cols(), n);
    BasisIndexer dst(FunctorKind::Ext, m.rows(), n);
    IntMatrix res(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto& s = src.tuple(col);
        for (std::size_t row = 0; row < dst.size(); ++row) {
            const auto& t = dst.tuple(row);
            // n×n minor det(m[t, s]) by cofactor expansion (n is small)
            IntMatrix sub(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) sub(i, j) = m(t[i], s[j]);
            auto det = [&](auto&& self, std::vector<std::size_t> rows,
                           std::vector<std::size_t> cols) -> Int {
                if (rows.empty()) return 1;
                Int d = 0;
                Int sign = 1;
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    if (sub(rows[k], cols[0]) != 0) {
                        std::vector<std::size_t> r2, c2(cols.begin() + 1, cols.end());
                        for (std::size_t l = 0; l < rows.size(); ++l)
                            if (l != k) r2.push_back(rows[l]);
                        d += sign * sub(rows[k], cols[0]) * self(self, r2, c2);
                    }
                    sign = -sign;
                }
                return d;
            };
            std::vector<std::size_t> ri(n), ci(n);
            for (std::size_t i = 0; i < n; ++i) ri[i] = i, ci[i] = i;
            Int d = det(det, ri, ci);
            if (d != 0) res(row, col) = d;
        }
    }
    return res;
}

IntMatrix kind_map(FunctorKind kind, const IntMatrix& m, std::size_t n) {
    switch (kind) {
        case FunctorKind::Tensor: return tensor_power_map(m, n);
        case FunctorKind::Sym: return sp_map(m, n);
        case FunctorKind::Ext: return lambda_map(m, n);
        case FunctorKind::Gamma: return gamma_map(m, n);
    }
    throw std::logic_error("unknown functor kind");
}

IntMatrix gamma_to_invariants(std::size_t rank, std::size_t n) {
    BasisIndexer gamma(FunctorKind::Gamma, rank, n);
    BasisIndexer tens(FunctorKind::Tensor, rank, n);
    IntMatrix res(tens.size(), gamma.size());
    for (std::size_t c = 0; c < gamma.size(); ++c) {
        const auto& a = gamma.tuple(c);
        for (std::size_t r = 0; r < tens.size(); ++r) {
            const auto& t = tens.tuple(r);
            std::vector<unsigned> content(rank, 0);
            for (unsigned v : t) ++content[v];
            if (content == a) res(r, c) = 1;
        }
    }
    return res;
}

HermiteBasis invariants_subgroup(std::size_t rank, std::size_t n) {
    BasisIndexer tens(FunctorKind::Tensor, rank, n);
    if (n <= 1) return hnf(IntMatrix::identity(tens.size()));
    IntMatrix stacked(0, tens.size());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::size_t> s(n);
        for (std::size_t k = 0; k < n; ++k) s[k] = k;
        std::swap(s[i], s[i + 1]);
        IntMatrix diff = sigma_action(s, rank) - IntMatrix::identity(tens.size());
        stacked = stacked.rows() ? vstack(stacked, diff) : diff;
    }
    return kernel_basis(stacked);
}

InducedInclusion functor_on_inclusion(const FreePresentation& p, FunctorKind kind,
                                      std::size_t n) {
    IntMatrix k = kind_map(kind, p.inclusion(), n);
    FgAbGroup src = FgAbGroup::free_group(k.cols());
    FgAbGroup dst = FgAbGroup::free_group(k.rows());
    AbHom map(src, dst, k);
    FgAbGroup quot(k.rows(), k);
    return InducedInclusion{std::move(map), std::move(quot)};
}

}  // namespace extlim
