#pragma once
#include "extlim/diagram.hpp"

namespace extlim {

/// Natural 4-term exact data 0 → H2 → F1(α) → F2(α) → H1 → 0 over a finite
/// category, with constant ends. Construction-time verification covers
/// objectwise exactness and the naturality squares.
struct FourTermWitness {
    AbDiagram f1, f2;          // share one category
    FgAbGroup h2, h1;
    std::vector<AbHom> iota;   // per object: H2 → F1(α)
    std::vector<AbHom> pi;     // per object: F1(α) → F2(α)
    std::vector<AbHom> rho;    // per object: F2(α) → H1
};

struct ObstructionResult {
    /// Per H1 generator, the 2-cocycle value on each normalized 2-chain,
    /// as H2 coordinates (chain order of the normalized cochain complex).
    std::vector<std::vector<std::vector<Int>>> cocycle;
    bool cocycle_condition = false;   // δ² a² = 0 for every generator
    std::vector<bool> class_is_zero;  // a² is a coboundary, i.e. f(a) = 0 in lim² H2
};

/// Builds the obstruction 2-cocycle from canonical solve-based sections;
/// `perturb_sections` shifts every section value by a fixed kernel element
/// to exercise section-independence.
ObstructionResult obstruction_cocycle(const FourTermWitness& w, bool perturb_sections = false);

/// Difference of two 2-cocycles is a coboundary of the constant-H2 complex.
bool cocycles_differ_by_coboundary(const FourTermWitness& w,
                                   const std::vector<std::vector<Int>>& a,
                                   const std::vector<std::vector<Int>>& b);

}  // namespace extlim
