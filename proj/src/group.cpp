#include "extlim/group.hpp"

#include <stdexcept>

#include "extlim/error.hpp"

namespace extlim {

FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
    if (relations_.rows() != generators_)
        throw InputError("group relations must have one row per generator");
    relation_basis_ = hnf(relations_);
    SmithDecomposition s = snf(relation_basis_.basis);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < s.diagonal_length(); ++i) {
        if (s.diagonal(i) == 0) continue;
        ++rank;
        if (s.diagonal(i) > 1) torsion_.push_back(s.diagonal(i));
    }
    free_rank_ = generators_ - rank;
}

FgAbGroup FgAbGroup::cyclic(const Int& order) {
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return FgAbGroup(1, r);
}

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, const std::vector<Int>& torsion) {
    std::size_t g = free_rank + torsion.size();
    IntMatrix r(g, torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) r(free_rank + i, i) = torsion[i];
    return FgAbGroup(g, r);
}

Int FgAbGroup::order() const {
    if (!is_finite()) throw std::logic_error("order() on an infinite group");
    Int n = 1;
    for (const Int& f : torsion_) n *= f;
    return n;
}

std::vector<Int> FgAbGroup::normal_form(const std::vector<Int>& coords) const {
    return reduce_mod_lattice(relation_basis_, coords);
}

bool FgAbGroup::is_zero_element(const std::vector<Int>& coords) const {
    for (const Int& v : normal_form(coords))
        if (v != 0) return false;
    return true;
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
    return generators_ == other.generators_ &&
           relation_basis_.basis == other.relation_basis_.basis;
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) {
    return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

Element::Element(const FgAbGroup& group, std::vector<Int> coords) : group_(group) {
    if (coords.size() != group.generators())
        throw InputError("element coordinate length mismatch");
    coords_ = group_.normal_form(coords);
}

bool Element::is_zero() const {
    for (const Int& v : coords_)
        if (v != 0) return false;
    return true;
}

Element operator+(const Element& a, const Element& b) {
    if (!a.group_.same_presentation(b.group_))
        throw InputError("element sum across different groups");
    std::vector<Int> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return Element(a.group_, std::move(c));
}

Element operator-(const Element& a) {
    std::vector<Int> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords_[i];
    return Element(a.group_, std::move(c));
}

bool operator==(const Element& a, const Element& b) {
    return a.group_.same_presentation(b.group_) && a.coords_ == b.coords_;
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
        throw InputError("hom matrix shape mismatch");
    const IntMatrix& rel = source_.relations();
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        if (!target_.is_zero_element(matrix_.apply(rel.col(j))))
            throw InputError("ill-defined map: source relator " + std::to_string(j) +
                             " is not sent into the target relation lattice");
    }
}

AbHom AbHom::identity(const FgAbGroup& g) {
    return AbHom(g, g, IntMatrix::identity(g.generators()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return AbHom(source, target, IntMatrix(target.generators(), source.generators()));
}

std::vector<Int> AbHom::apply(const std::vector<Int>& coords) const {
    return target_.normal_form(matrix_.apply(coords));
}

Element AbHom::apply(const Element& e) const {
    if (!e.group().same_presentation(source_)) throw InputError("apply: element not in source");
    return Element(target_, matrix_.apply(e.coords()));
}

bool AbHom::is_zero_hom() const {
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!target_.is_zero_element(matrix_.col(j))) return false;
    return true;
}

bool AbHom::equals(const AbHom& other) const {
    if (!source_.same_presentation(other.source_) || !target_.same_presentation(other.target_))
        return false;
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
        std::vector<Int> d = matrix_.col(j);
        std::vector<Int> o = other.matrix_.col(j);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o[i];
        if (!target_.is_zero_element(d)) return false;
    }
    return true;
}

AbHom operator+(const AbHom& a, const AbHom& b) {
    return AbHom(a.source_, a.target_, a.matrix_ + b.matrix_);
}

AbHom operator-(const AbHom& a, const AbHom& b) {
    return AbHom(a.source_, a.target_, a.matrix_ - b.matrix_);
}

AbHom compose(const AbHom& second, const AbHom& first) {
    if (!first.target().same_presentation(second.source()))
        throw InputError("compose: middle groups differ");
    return AbHom(first.source(), second.target(), second.matrix() * first.matrix());
}

namespace {

/// Coordinates of each column of `cols` in a Hermite basis.
IntMatrix coordinates_in_basis(const IntMatrix& basis, const IntMatrix& cols,
                               const char* what) {
    IntMatrix res(basis.cols(), cols.cols());
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        auto x = solve_hermite(basis, cols.col(j));
        if (!x)
            throw InputError(std::string(what) + ": column " + std::to_string(j) +
                             " lies outside the lattice");
        for (std::size_t i = 0; i < basis.cols(); ++i) res(i, j) = (*x)[i];
    }
    return res;
}

Subgroup subgroup_from_lattice(const FgAbGroup& ambient, const IntMatrix& lattice_with_rel) {
    HermiteBasis pre = hnf(lattice_with_rel);
    IntMatrix relcoords =
        coordinates_in_basis(pre.basis, ambient.relation_basis().basis, "subgroup");
    FgAbGroup grp(pre.rank(), relcoords);
    AbHom incl(grp, ambient, pre.basis);
    return Subgroup{std::move(grp), std::move(incl), pre.basis};
}

}  // namespace

Subgroup kernel(const AbHom& h) {
    // pairs (x, y) with M x = R_tgt y, projected to x
    const IntMatrix& rtgt = h.target().relation_basis().basis;
    HermiteBasis pairs = kernel_basis(hstack(h.matrix(), -rtgt));
    IntMatrix lattice = pairs.basis.first_rows(h.source().generators());
    // the source relation lattice is always contained in the kernel
    return subgroup_from_lattice(h.source(),
                                 hstack(lattice, h.source().relation_basis().basis));
}

Subgroup image(const AbHom& h) {
    return subgroup_from_lattice(
        h.target(), hstack(h.matrix(), h.target().relation_basis().basis));
}

Quotient cokernel(const AbHom& h) {
    FgAbGroup grp(h.target().generators(),
                  hstack(h.target().relations(), h.matrix()));
    AbHom proj(h.target(), grp, IntMatrix::identity(h.target().generators()));
    return Quotient{std::move(grp), std::move(proj)};
}

Subgroup equalizer(const AbHom& h1, const AbHom& h2) {
    if (!h1.source().same_presentation(h2.source()) ||
        !h1.target().same_presentation(h2.target()))
        throw InputError("equalizer: maps are not parallel");
    return kernel(h1 - h2);
}

DirectSum direct_sum(const std::vector<FgAbGroup>& parts) {
    std::size_t gens = 0, rels = 0;
    for (const FgAbGroup& g : parts) {
        gens += g.generators();
        rels += g.relations().cols();
    }
    IntMatrix r(gens, rels);
    std::size_t go = 0, ro = 0;
    for (const FgAbGroup& g : parts) {
        for (std::size_t i = 0; i < g.generators(); ++i)
            for (std::size_t j = 0; j < g.relations().cols(); ++j)
                r(go + i, ro + j) = g.relations()(i, j);
        go += g.generators();
        ro += g.relations().cols();
    }
    FgAbGroup total(gens, std::move(r));
    DirectSum res{total, {}, {}};
    go = 0;
    for (const FgAbGroup& g : parts) {
        IntMatrix in(gens, g.generators());
        IntMatrix pr(g.generators(), gens);
        for (std::size_t i = 0; i < g.generators(); ++i) {
            in(go + i, i) = 1;
            pr(i, go + i) = 1;
        }
        res.injections.emplace_back(g, total, std::move(in));
        res.projections.emplace_back(total, g, std::move(pr));
        go += g.generators();
    }
    return res;
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    std::size_t g = a.generators() * b.generators();
    IntMatrix r1 = kronecker(a.relation_basis().basis, IntMatrix::identity(b.generators()));
    IntMatrix r2 = kronecker(IntMatrix::identity(a.generators()), b.relation_basis().basis);
    return FgAbGroup(g, hstack(r1, r2));
}

FgAbGroup subquotient(std::size_t ambient, const IntMatrix& u, const IntMatrix& v) {
    if (u.rows() != ambient || v.rows() != ambient)
        throw InputError("subquotient: lattice ambient rank mismatch");
    HermiteBasis ub = hnf(u);
    IntMatrix w = coordinates_in_basis(ub.basis, v, "subquotient: numerator does not contain denominator");
    return FgAbGroup(ub.rank(), w);
}

Subgroup span_subgroup(const FgAbGroup& ambient, const IntMatrix& lattice) {
    return subgroup_from_lattice(ambient, hstack(lattice, ambient.relation_basis().basis));
}

AbHom factor_through(const Subgroup& sub, const AbHom& phi) {
    if (!phi.target().same_presentation(sub.inclusion.target()))
        throw InputError("factor_through: ambient groups differ");
    const IntMatrix& incl = sub.inclusion.matrix();
    const IntMatrix& rel = phi.target().relation_basis().basis;
    EchelonSolver solver(hstack(incl, rel));
    IntMatrix psi(sub.group.generators(), phi.source().generators());
    for (std::size_t j = 0; j < phi.source().generators(); ++j) {
        auto x = solver.solve(phi.matrix().col(j));
        if (!x)
            throw InputError("factor_through: image of generator " + std::to_string(j) +
                             " is outside the subgroup");
        for (std::size_t i = 0; i < sub.group.generators(); ++i) psi(i, j) = (*x)[i];
    }
    return AbHom(phi.source(), sub.group, std::move(psi));
}

std::vector<Int> preimage_vector(const AbHom& h, const std::vector<Int>& target_coords) {
    IntMatrix stacked = hstack(h.matrix(), h.target().relation_basis().basis);
    auto x = solve(stacked, target_coords);
    if (!x) throw InputError("preimage_vector: element is not in the image");
    x->resize(h.source().generators());
    return *x;
}

}  // namespace extlim
