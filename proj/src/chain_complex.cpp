#include "extlim/chain_complex.hpp"

#include <stdexcept>

#include "extlim/error.hpp"

namespace extlim {

ChainComplexZ::ChainComplexZ(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
    if (ranks_.empty()) throw InputError("complex needs at least one degree");
    if (differentials_.size() + 1 != ranks_.size())
        throw InputError("complex needs one differential per positive degree");
    for (std::size_t i = 0; i < differentials_.size(); ++i) {
        if (differentials_[i].rows() != ranks_[i] || differentials_[i].cols() != ranks_[i + 1])
            throw InputError("differential " + std::to_string(i + 1) + " has wrong shape");
        if (i > 0 && !(differentials_[i - 1] * differentials_[i]).is_zero())
            throw InputError("d∘d != 0 at degree " + std::to_string(i + 1));
    }
}

FgAbGroup homology_at(const ChainComplexZ& c, std::size_t degree) {
    if (degree > c.top_degree()) return FgAbGroup::zero();
    std::size_t r = c.rank(degree);
    IntMatrix cycles = degree == 0 ? IntMatrix::identity(r)
                                   : kernel_basis(c.differential(degree)).basis;
    IntMatrix boundaries =
        degree == c.top_degree() ? IntMatrix(r, 0) : c.differential(degree + 1);
    return subquotient(r, cycles, boundaries);
}

ChainComplexZ tensor_complexes(const ChainComplexZ& c1, const ChainComplexZ& c2) {
    const std::size_t m1 = c1.top_degree(), m2 = c2.top_degree();
    const std::size_t m = m1 + m2;
    // offsets[k][i] = starting index of component (i, k - i) within degree k
    std::vector<std::size_t> ranks(m + 1, 0);
    std::vector<std::vector<std::size_t>> offset(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        offset[k].assign(m1 + 1, 0);
        std::size_t acc = 0;
        for (std::size_t i = 0; i <= m1; ++i) {
            offset[k][i] = acc;
            std::size_t j = k - i;
            if (i <= k && j <= m2) acc += c1.rank(i) * c2.rank(j);
        }
        ranks[k] = acc;
    }
    std::vector<IntMatrix> diffs;
    for (std::size_t k = 1; k <= m; ++k) {
        IntMatrix d(ranks[k - 1], ranks[k]);
        for (std::size_t i = 0; i <= m1 && i <= k; ++i) {
            std::size_t j = k - i;
            if (j > m2) continue;
            std::size_t src = offset[k][i];
            if (i >= 1) {  // d1_i ⊗ id : (i, j) -> (i-1, j)
                const IntMatrix& d1 = c1.differential(i);
                std::size_t dst = offset[k - 1][i - 1];
                for (std::size_t a = 0; a < d1.rows(); ++a)
                    for (std::size_t b = 0; b < d1.cols(); ++b) {
                        if (d1(a, b) == 0) continue;
                        for (std::size_t e = 0; e < c2.rank(j); ++e)
                            d(dst + a * c2.rank(j) + e, src + b * c2.rank(j) + e) = d1(a, b);
                    }
            }
            if (j >= 1) {  // (-1)^i id ⊗ d2_j : (i, j) -> (i, j-1)
                const IntMatrix& d2 = c2.differential(j);
                std::size_t dst = offset[k - 1][i];
                Int sign = (i % 2 == 0) ? 1 : -1;
                for (std::size_t a = 0; a < c1.rank(i); ++a)
                    for (std::size_t e = 0; e < d2.rows(); ++e)
                        for (std::size_t f = 0; f < d2.cols(); ++f)
                            if (d2(e, f) != 0)
                                d(dst + a * d2.rows() + e, src + a * d2.cols() + f) =
                                    sign * d2(e, f);
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplexZ(std::move(ranks), std::move(diffs));
}

}  // namespace extlim
