#include "extlim/torlab.hpp"

#include "extlim/error.hpp"
#include "extlim/poly_functors.hpp"
#include "extlim/size_guard.hpp"

namespace extlim {

FreeResolution free_resolution(const FgAbGroup& g) {
    const IntMatrix& h = g.relation_basis().basis;
    ChainComplexZ c({g.generators(), h.cols()}, {h});
    return FreeResolution{g, std::move(c)};
}

FgAbGroup tor_multi(const std::vector<FgAbGroup>& groups, std::size_t degree) {
    if (groups.empty()) throw InputError("tor_multi: needs at least one group");
    if (degree >= groups.size()) return FgAbGroup::zero();
    ChainComplexZ total = free_resolution(groups[0]).complex;
    for (std::size_t i = 1; i < groups.size(); ++i) {
        check_size_guard(total.rank(0) * groups[i].generators(), "tor_multi");
        total = tensor_complexes(total, free_resolution(groups[i]).complex);
    }
    return homology_at(total, degree);
}

FgAbGroup tor_bracket(const FgAbGroup& a, std::size_t n) {
    if (n < 2) throw InputError("tor_bracket: n must be at least 2");
    return tor_multi(std::vector<FgAbGroup>(n, a), n - 1);
}

FgAbGroup kunneth_iterate(const FgAbGroup& a, std::size_t n) {
    if (n < 2) throw InputError("kunneth_iterate: n must be at least 2");
    FgAbGroup t = tor_multi({a, a}, 1);
    for (std::size_t k = 3; k <= n; ++k) t = tor_multi({t, a}, 1);
    return t;
}

FgAbGroup tor_pair_intersection(const FreePresentation& p1, const FreePresentation& p2) {
    const std::size_t n1 = p1.ambient_rank(), n2 = p2.ambient_rank();
    check_size_guard(n1 * n2, "tor_pair_intersection");
    IntMatrix l1 = kronecker(p1.inclusion(), IntMatrix::identity(n2));
    IntMatrix l2 = kronecker(IntMatrix::identity(n1), p2.inclusion());
    HermiteBasis numerator = image_intersection(l1, l2);
    IntMatrix denominator = kronecker(p1.inclusion(), p2.inclusion());
    return subquotient(n1 * n2, numerator.basis, denominator);
}

namespace {

/// H^{⊗ slot-1} ⊗ F ⊗ H^{⊗ n-slot} as a sublattice of F^{⊗n}, slot in 1..n.
IntMatrix slot_lattice(const FreePresentation& p, std::size_t n, std::size_t slot) {
    IntMatrix acc = IntMatrix::identity(1);
    for (std::size_t i = 1; i <= n; ++i)
        acc = kronecker(acc, i == slot ? IntMatrix::identity(p.ambient_rank())
                                       : p.inclusion());
    return acc;
}

}  // namespace

BracketIntersection tor_bracket_intersection(const FreePresentation& p, std::size_t n) {
    if (n < 2) throw InputError("tor_bracket_intersection: n must be at least 2");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p.ambient_rank();
        check_size_guard(total, "tor_bracket_intersection");
    }
    HermiteBasis numerator = hnf(slot_lattice(p, n, 1));
    for (std::size_t slot = 2; slot <= n; ++slot)
        numerator = image_intersection(numerator.basis, slot_lattice(p, n, slot));
    IntMatrix denominator = tensor_power_map(p.inclusion(), n);
    FgAbGroup grp = subquotient(numerator.ambient_rank(), numerator.basis, denominator);
    return BracketIntersection{std::move(grp), std::move(numerator)};
}

EqualizerRealization equalizer_realization(const FreePresentation& p, std::size_t n) {
    if (n < 2) throw InputError("equalizer_realization: n must be at least 2");
    const std::size_t N = p.ambient_rank();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= 2 * N;
        check_size_guard(total, "equalizer_realization");
    }
    // doubled extension F⊕H ↪ F⊕F ↠ A
    IntMatrix doubled_h(2 * N, N + p.sub_rank());
    for (std::size_t i = 0; i < N; ++i) doubled_h(i, i) = 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < p.sub_rank(); ++j)
            doubled_h(N + i, N + j) = p.inclusion()(i, j);

    IntMatrix f1(2 * N, N), f2(2 * N, N);
    for (std::size_t i = 0; i < N; ++i) {
        f1(N + i, i) = 1;
        f2(i, i) = 1;
        f2(N + i, i) = 1;
    }

    std::size_t qn = 1, qdn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        qn *= N;
        qdn *= 2 * N;
    }
    FgAbGroup q(qn, tensor_power_map(p.inclusion(), n));
    FgAbGroup qd(qdn, tensor_power_map(doubled_h, n));
    AbHom f1star(q, qd, tensor_power_map(f1, n));
    AbHom f2star(q, qd, tensor_power_map(f2, n));
    Subgroup eq = equalizer(f1star, f2star);
    return EqualizerRealization{eq.group, eq.inclusion, eq.preimage};
}

}  // namespace extlim
