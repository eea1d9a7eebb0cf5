#pragma once
#include <vector>

#include "extlim/group.hpp"

namespace extlim {

/// Finite complex of free abelian groups; the differential d_i has shape
/// ranks[i-1] x ranks[i] and lowers degree by one. d_i ∘ d_{i+1} = 0 is
/// checked at construction.
class ChainComplexZ {
  public:
    ChainComplexZ(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

    /// Top degree m (ranks are indexed 0..m).
    std::size_t top_degree() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t degree) const { return ranks_[degree]; }
    /// d_i for 1 <= i <= top_degree().
    const IntMatrix& differential(std::size_t i) const { return differentials_[i - 1]; }

  private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> differentials_;
};

/// H_i = ker(d_i) / im(d_{i+1}); d_0 and d_{m+1} are zero maps.
FgAbGroup homology_at(const ChainComplexZ& c, std::size_t degree);

/// Total complex of the double complex, with the Koszul sign rule
/// d(x ⊗ y) = dx ⊗ y + (-1)^{|x|} x ⊗ dy. Components of degree k are the
/// pairs (i, j), i + j = k, ordered by ascending i.
ChainComplexZ tensor_complexes(const ChainComplexZ& c1, const ChainComplexZ& c2);

}  // namespace extlim
