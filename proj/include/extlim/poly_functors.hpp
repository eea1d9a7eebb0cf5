#pragma once
#include <map>
#include <vector>

#include "extlim/presentation.hpp"

namespace extlim {

enum class FunctorKind { Tensor, Sym, Ext, Gamma };

/// Ordered basis of the value of ⊗^n / SP^n / Λ^n / Γ_n on Z^r.
/// Tensor: all functions [n] → [r] lexicographically (size r^n).
/// Ext: strictly increasing n-subsets (size C(r, n)).
/// Sym, Gamma: exponent vectors a ∈ Z^r_{>=0}, Σ a_i = n, lexicographic
/// (size C(r+n-1, n)). Index order is part of the public contract.
class BasisIndexer {
  public:
    BasisIndexer(FunctorKind kind, std::size_t rank, std::size_t degree);

    FunctorKind kind() const { return kind_; }
    std::size_t rank() const { return rank_; }
    std::size_t degree() const { return degree_; }
    std::size_t size() const { return tuples_.size(); }
    const std::vector<unsigned>& tuple(std::size_t i) const { return tuples_[i]; }
    std::size_t position(const std::vector<unsigned>& t) const;

  private:
    FunctorKind kind_;
    std::size_t rank_, degree_;
    std::vector<std::vector<unsigned>> tuples_;
    std::map<std::vector<unsigned>, std::size_t> pos_;
};

/// n-fold Kronecker power of the matrix of a map between free groups.
IntMatrix tensor_power_map(const IntMatrix& m, std::size_t n);

/// Place-permutation action on the Tensor basis of Z^r: the basis tensor
/// with index tuple t maps to the tuple t ∘ σ^{-1}. sigma is given as the
/// image list (0-based); the assignment σ ↦ matrix is a group homomorphism.
IntMatrix sigma_action(const std::vector<std::size_t>& sigma, std::size_t rank);

IntMatrix sp_map(const IntMatrix& m, std::size_t n);
IntMatrix lambda_map(const IntMatrix& m, std::size_t n);
IntMatrix gamma_map(const IntMatrix& m, std::size_t n);

IntMatrix kind_map(FunctorKind kind, const IntMatrix& m, std::size_t n);

/// γ_a ↦ sum of the distinct permutations of the multiset a inside the
/// Tensor basis; its column lattice equals the Σ_n-invariants.
IntMatrix gamma_to_invariants(std::size_t rank, std::size_t n);

/// Kernel of the stacked (sigma_action(s_i) - I) over adjacent transpositions.
HermiteBasis invariants_subgroup(std::size_t rank, std::size_t n);

struct InducedInclusion {
    AbHom map;          // kind(H) → kind(F) between free groups
    FgAbGroup quotient; // kind(F) / image
};

/// Applies the kind-map to the inclusion H ↪ F of a presentation.
InducedInclusion functor_on_inclusion(const FreePresentation& p, FunctorKind kind,
                                      std::size_t n);

}  // namespace extlim
