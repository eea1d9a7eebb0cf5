#pragma once
#include <optional>
#include <string>

#include "extlim/diagram.hpp"
#include "extlim/presentation.hpp"

namespace extlim {

/// Morphism of free extensions over the identity of A: a matrix F_src → F_tgt
/// carrying H_src into H_tgt and inducing the identity on the common base.
class ExtMorphism {
  public:
    ExtMorphism(FreePresentation source, FreePresentation target, IntMatrix matrix);

    const FreePresentation& source() const { return source_; }
    const FreePresentation& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

  private:
    FreePresentation source_, target_;
    IntMatrix matrix_;
};

/// F = Z^{r+t} with H spanned by f_i · e_{r+i}; the projection is the
/// identity onto the invariant-factor copy of A.
FreePresentation canonical_presentation(const FgAbGroup& a);

/// F ⊕ Z^k with H ⊕ Z^k; same quotient.
FreePresentation stabilize(const FreePresentation& p, std::size_t k);

/// Canonical solve-based lift F1 → F2 over the identity of A.
ExtMorphism lift(const FreePresentation& p1, const FreePresentation& p2);

struct CoproductResult {
    FreePresentation object;
    ExtMorphism iota1, iota2;
};

/// F1 ⊕ F2 with projection (x, y) ↦ π1 x + π2 y and H the kernel lattice.
CoproductResult coproduct(const FreePresentation& p1, const FreePresentation& p2);

struct DoubledPair {
    FreePresentation target;  // F ⊕ F ↠ A by the second coordinate
    ExtMorphism f1;           // g ↦ (0, g)
    ExtMorphism f2;           // g ↦ (g, g)
};

DoubledPair f1f2_pair(const FreePresentation& p);

/// The functors evaluated on extensions: F^{⊗n}/H^{⊗n}, Λ^n(F)/Λ^n(H),
/// Γ_n(F)/Γ_n(H), and A0 ⊗ F^{⊗k}.
struct FunctorTag {
    enum class Kind { TensorQuot, ExtQuot, GammaQuot, TensorWithFree };
    Kind kind;
    std::size_t n = 0;                  // degree for the quotient functors
    std::optional<FgAbGroup> base;      // the fixed A0 for TensorWithFree
    std::size_t k = 0;                  // tensor exponent for TensorWithFree

    static FunctorTag tensor_quot(std::size_t n) { return {Kind::TensorQuot, n, {}, 0}; }
    static FunctorTag ext_quot(std::size_t n) { return {Kind::ExtQuot, n, {}, 0}; }
    static FunctorTag gamma_quot(std::size_t n) { return {Kind::GammaQuot, n, {}, 0}; }
    static FunctorTag tensor_with_free(FgAbGroup a0, std::size_t k) {
        return {Kind::TensorWithFree, 0, std::move(a0), k};
    }
};

FgAbGroup evaluate(const FunctorTag& tag, const FreePresentation& p);
AbHom evaluate_on(const FunctorTag& tag, const ExtMorphism& m);

/// Finite truncation recipe: objects built from the canonical presentation
/// by stabilization, coproduct and doubling; morphisms from lifts, the
/// coproduct injections and the f1/f2 pair; closed under composition.
struct Recipe {
    struct ObjectSpec {
        enum class Kind { Canonical, Stabilize, Coproduct, Double } kind;
        std::size_t arg1 = 0;  // stabilize amount, or object index
        std::size_t arg2 = 0;  // second coproduct index
    };
    struct MorphismSpec {
        enum class Kind { Lift, Iota1, Iota2, F1, F2 } kind;
        std::size_t arg1 = 0;  // source object index (lift), or object index
        std::size_t arg2 = 0;  // target object index (lift)
    };
    std::vector<ObjectSpec> objects;
    std::vector<MorphismSpec> morphisms;
    std::size_t bound = 64;
};

struct TruncatedDiagram {
    std::vector<FreePresentation> presentations;
    std::vector<ExtMorphism> arrows;  // aligned with the non-identity morphisms
    AbDiagram diagram;
};

TruncatedDiagram truncated_diagram(const FgAbGroup& a, const FunctorTag& tag,
                                   const Recipe& recipe);

struct Lemma21Report {
    bool applicable;          // hypothesis (ii) holds on the instance
    bool component_vanishes;  // every compatible family has zero p-component
    std::string detail;
};

/// Checks the coproduct-monomorphism hypothesis on a recipe containing some
/// p with p ⋆ p and both injections, then verifies the vanishing of the
/// p-component of lim over the truncation.
Lemma21Report lemma21_vanishing_probe(const FgAbGroup& a, const FunctorTag& tag,
                                      const Recipe& recipe);

/// Recipe JSON format:
///   {"base": "Z/2", "objects": ["canonical", {"stabilize": 1},
///    "coproduct(0,1)", "double(0)"],
///    "morphisms": ["lift(0,1)", "iota1(2)", "iota2(2)", "f1(0)", "f2(0)"],
///    "functor": {"kind": "tensor_quot", "n": 2}}
struct ParsedRecipe {
    FgAbGroup base;
    FunctorTag tag;
    Recipe recipe;
};
ParsedRecipe parse_recipe_json(const std::string& text);
ParsedRecipe parse_recipe_file(const std::string& path);

}  // namespace extlim
