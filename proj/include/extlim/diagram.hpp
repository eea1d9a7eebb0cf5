#pragma once
#include <array>

#include "extlim/fincat.hpp"
#include "extlim/group.hpp"

namespace extlim {

/// Abelian-group-valued functor on a finite category. Construction checks
/// functoriality exhaustively: identities map to identity homs and every
/// table entry to the composed hom.
class AbDiagram {
  public:
    AbDiagram(FinCategory cat, std::vector<FgAbGroup> values, std::vector<AbHom> maps);

    const FinCategory& category() const { return cat_; }
    const FgAbGroup& value(std::size_t object) const { return values_[object]; }
    const AbHom& map(std::size_t morphism) const { return maps_[morphism]; }

  private:
    FinCategory cat_;
    std::vector<FgAbGroup> values_;
    std::vector<AbHom> maps_;
};

/// A composable m-chain i_0 ← i_1 ← ... ← i_m; arrows[j] points from i_{j+1}
/// to i_j, head is i_0. Degree-0 chains have no arrows.
struct Chain {
    std::size_t head;
    std::vector<std::size_t> arrows;
};

/// The cosimplicial-replacement cochain complex through `max_degree`.
/// Chains are enumerated depth-first in lexicographic morphism order; in the
/// normalized complex only non-identity arrows appear and coboundary faces
/// whose inner composite is an identity are dropped.
struct CochainComplex {
    std::vector<std::vector<Chain>> chains;        // per degree
    std::vector<FgAbGroup> groups;                 // per degree
    std::vector<std::vector<std::size_t>> offsets; // generator offset per chain
    std::vector<AbHom> deltas;                     // deltas[m]: groups[m] → groups[m+1]
};

CochainComplex build_cochain_complex(const AbDiagram& d, std::size_t max_degree,
                                     bool normalized = true);

struct LimResult {
    FgAbGroup group;
    AbHom inclusion;                // into the degree-0 cochain group ∏ F(c)
    std::vector<AbHom> projections; // one per object
};

/// lim(D) = kernel of δ⁰, the subgroup of compatible families.
LimResult lim(const AbDiagram& d);

/// lim^n(D) for n ≤ 2 as cochain cohomology (chains through degree n+1).
FgAbGroup lim_n(const AbDiagram& d, std::size_t n, bool normalized = true);

/// Objectwise short exact sequence of diagrams over one category.
struct DiagramSES {
    AbDiagram sub, middle, quot;
    std::vector<AbHom> incl;  // per object: sub → middle
    std::vector<AbHom> proj;  // per object: middle → quot
};

struct SixTermReport {
    std::array<FgAbGroup, 6> groups;  // lim sub, lim middle, lim quot, lim¹ …
    bool head_injective = false;
    std::array<bool, 4> exact_at{};   // lim middle, lim quot, lim¹ sub, lim¹ middle
    bool ok() const;
};

/// Computes the six groups and the connecting map and asserts exactness.
SixTermReport six_term_check(const DiagramSES& s);

struct QuasiInitialEmbedding {
    std::size_t c0;
    AbHom to_value;                 // lim(D) → F(c0)
    bool injective;
    IntMatrix image_preimage;       // lattice of the image in the generators of F(c0)
    IntMatrix equalizer_preimage;   // intersection of equalizers of parallel pairs out of c0
    bool image_equals_equalizers;
};

QuasiInitialEmbedding quasi_initial_embedding(const AbDiagram& d);

/// Checks the coequalizer hypothesis (every parallel pair admits a
/// coequalizing arrow with injective value); when it holds, lim¹ = 0 is
/// asserted and true is returned, otherwise false.
bool coequalizer_vanishing_check(const AbDiagram& d);

}  // namespace extlim
