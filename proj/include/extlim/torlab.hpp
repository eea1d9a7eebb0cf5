#pragma once
#include "extlim/chain_complex.hpp"
#include "extlim/presentation.hpp"

namespace extlim {

/// Two-term free resolution F1 ↪ F0 ↠ G; the differential is the Hermite
/// basis of the relation lattice, hence injective.
struct FreeResolution {
    FgAbGroup group;
    ChainComplexZ complex;
};

FreeResolution free_resolution(const FgAbGroup& g);

/// i-th homology of the tensor product of free resolutions of the listed
/// groups; zero for i ≥ number of groups.
FgAbGroup tor_multi(const std::vector<FgAbGroup>& groups, std::size_t degree);

/// Tor^[n](A) = Tor_{n-1}(A, ..., A) with n arguments, n ≥ 2.
FgAbGroup tor_bracket(const FgAbGroup& a, std::size_t n);

/// Iterated pairwise Tor: T_2 = Tor_1(A, A), T_k = Tor_1(T_{k-1}, A).
FgAbGroup kunneth_iterate(const FgAbGroup& a, std::size_t n);

/// Tor(A, B) as ((H1⊗F2) ∩ (F1⊗H2)) / (H1⊗H2) inside F1⊗F2.
FgAbGroup tor_pair_intersection(const FreePresentation& p1, const FreePresentation& p2);

struct BracketIntersection {
    FgAbGroup group;
    HermiteBasis numerator;  // ∩_i H^{⊗ i-1} ⊗ F ⊗ H^{⊗ n-i} inside F^{⊗n}
};

/// Tor^[n](A) as the slot-lattice intersection modulo H^{⊗n}.
BracketIntersection tor_bracket_intersection(const FreePresentation& p, std::size_t n);

struct EqualizerRealization {
    FgAbGroup group;
    AbHom inclusion;     // into F^{⊗n} / H^{⊗n}
    IntMatrix preimage;  // canonical preimage lattice inside F^{⊗n}
};

/// Tor^[n](A) as the equalizer of the maps induced by g ↦ (0,g) and
/// g ↦ (g,g) on F^{⊗n}/H^{⊗n} → (F⊕F)^{⊗n}/(F⊕H)^{⊗n}.
EqualizerRealization equalizer_realization(const FreePresentation& p, std::size_t n);

}  // namespace extlim
