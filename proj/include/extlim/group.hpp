#pragma once
#include <string>
#include <vector>

#include "extlim/normal_forms.hpp"

namespace extlim {

/// Finitely generated abelian group presented as Z^g / colspan(relations).
/// Invariant factors (free rank plus the torsion chain f1 | f2 | ... , each
/// > 1) are computed once at construction.
class FgAbGroup {
  public:
    FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}
    FgAbGroup(std::size_t generators, IntMatrix relations);

    static FgAbGroup zero() { return FgAbGroup(); }
    static FgAbGroup free_group(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }
    static FgAbGroup cyclic(const Int& order);
    static FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Int>& torsion);

    std::size_t generators() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    const HermiteBasis& relation_basis() const { return relation_basis_; }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    /// Number of elements; only for finite groups.
    Int order() const;

    /// Unique coset representative of a generator-coordinate vector.
    std::vector<Int> normal_form(const std::vector<Int>& coords) const;
    bool is_zero_element(const std::vector<Int>& coords) const;

    /// Same generator count and same relation lattice.
    bool same_presentation(const FgAbGroup& other) const;

  private:
    std::size_t generators_;
    IntMatrix relations_;
    HermiteBasis relation_basis_;
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);

/// Element of a presented group, stored in canonical normal form.
class Element {
  public:
    Element(const FgAbGroup& group, std::vector<Int> coords);

    const FgAbGroup& group() const { return group_; }
    const std::vector<Int>& coords() const { return coords_; }
    bool is_zero() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a);
    friend bool operator==(const Element& a, const Element& b);

  private:
    FgAbGroup group_;
    std::vector<Int> coords_;
};

/// Homomorphism between presented groups, given by a matrix on generators.
/// Construction verifies the matrix maps the source relation lattice into
/// the target relation lattice.
class AbHom {
  public:
    AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static AbHom identity(const FgAbGroup& g);
    static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& coords) const;
    Element apply(const Element& e) const;
    bool is_zero_hom() const;
    /// Equal as maps (matrices congruent modulo target relations).
    bool equals(const AbHom& other) const;

    friend AbHom operator+(const AbHom& a, const AbHom& b);
    friend AbHom operator-(const AbHom& a, const AbHom& b);

  private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

AbHom compose(const AbHom& second, const AbHom& first);

/// A subgroup of an ambient presented group: the abstract group, the monic
/// inclusion, and the full preimage lattice in the ambient generator space
/// (relations included). Two subgroups coincide iff the preimages coincide.
struct Subgroup {
    FgAbGroup group;
    AbHom inclusion;
    IntMatrix preimage;  // canonical hermite basis
};

struct Quotient {
    FgAbGroup group;
    AbHom projection;
};

Subgroup kernel(const AbHom& h);
Subgroup image(const AbHom& h);
Quotient cokernel(const AbHom& h);
Subgroup equalizer(const AbHom& h1, const AbHom& h2);

struct DirectSum {
    FgAbGroup group;
    std::vector<AbHom> injections;
    std::vector<AbHom> projections;
};

DirectSum direct_sum(const std::vector<FgAbGroup>& parts);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);

/// The group U/V for lattices colspan(V) ⊆ colspan(U) ⊆ Z^N; rejects inputs
/// with a V-column outside U, naming the column.
FgAbGroup subquotient(std::size_t ambient, const IntMatrix& u, const IntMatrix& v);

/// Subgroup of Z^N/rel generated by the columns of `lattice` (rel added in).
Subgroup span_subgroup(const FgAbGroup& ambient, const IntMatrix& lattice);

/// Factor φ: X → C through a subgroup inclusion ι: K → C; requires the image
/// of φ to lie in the subgroup. Returns ψ with ι∘ψ = φ.
AbHom factor_through(const Subgroup& sub, const AbHom& phi);

/// Canonical set-level preimage of an element coordinate vector under an
/// epimorphism (solve-based; deterministic).
std::vector<Int> preimage_vector(const AbHom& h, const std::vector<Int>& target_coords);

}  // namespace extlim
