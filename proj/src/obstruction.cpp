#include "extlim/obstruction.hpp"

#include <stdexcept>

#include "extlim/error.hpp"

namespace extlim {

namespace {

struct SectionData {
    std::vector<EchelonSolver> rho_sect;   // per object: section of ρ
    std::vector<EchelonSolver> pi_sect;    // per object: section of π on ker ρ
    std::vector<EchelonSolver> iota_pull;  // per object: pull back along ι
    std::vector<std::vector<Int>> rho_shift;  // ∈ ker ρ, zero unless perturbing
    std::vector<std::vector<Int>> pi_shift;   // ∈ ker π
};

std::vector<Int> section_apply(const EchelonSolver& solver, std::size_t out_gens,
                               const std::vector<Int>& value,
                               const std::vector<Int>& shift) {
    auto x = solver.solve(value);
    if (!x) throw std::logic_error("obstruction: section solve failed");
    x->resize(out_gens);
    for (std::size_t i = 0; i < out_gens; ++i) (*x)[i] += shift[i];
    return *x;
}

void validate_witness(const FourTermWitness& w) {
    const FinCategory& cat = w.f1.category();
    if (cat.object_count() != w.f2.category().object_count() ||
        cat.morphism_count() != w.f2.category().morphism_count())
        throw InputError("obstruction: F1 and F2 live on different categories");
    if (w.iota.size() != cat.object_count() || w.pi.size() != cat.object_count() ||
        w.rho.size() != cat.object_count())
        throw InputError("obstruction: need iota, pi, rho at every object");
    for (std::size_t o = 0; o < cat.object_count(); ++o) {
        const std::string& name = cat.object_name(o);
        if (!w.iota[o].source().same_presentation(w.h2) ||
            !w.iota[o].target().same_presentation(w.f1.value(o)) ||
            !w.pi[o].source().same_presentation(w.f1.value(o)) ||
            !w.pi[o].target().same_presentation(w.f2.value(o)) ||
            !w.rho[o].source().same_presentation(w.f2.value(o)) ||
            !w.rho[o].target().same_presentation(w.h1))
            throw InputError("obstruction: witness maps at object '" + name +
                             "' have wrong endpoints");
        if (!kernel(w.iota[o]).group.is_trivial())
            throw InputError("obstruction: iota not injective at '" + name + "'");
        if (!cokernel(w.rho[o]).group.is_trivial())
            throw InputError("obstruction: rho not surjective at '" + name + "'");
        if (image(w.iota[o]).preimage != kernel(w.pi[o]).preimage)
            throw InputError("obstruction: 4-term sequence not exact at F1 of '" + name + "'");
        if (image(w.pi[o]).preimage != kernel(w.rho[o]).preimage)
            throw InputError("obstruction: 4-term sequence not exact at F2 of '" + name + "'");
    }
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(m);
        if (!compose(w.f1.map(m), w.iota[mor.src]).equals(w.iota[mor.tgt]))
            throw InputError("obstruction: naturality of iota fails at '" + mor.id + "'");
        if (!compose(w.rho[mor.tgt], w.f2.map(m)).equals(w.rho[mor.src]))
            throw InputError("obstruction: naturality of rho fails at '" + mor.id + "'");
        if (!compose(w.pi[mor.tgt], w.f1.map(m)).equals(compose(w.f2.map(m), w.pi[mor.src])))
            throw InputError("obstruction: naturality of pi fails at '" + mor.id + "'");
    }
}

SectionData build_sections(const FourTermWitness& w, bool perturb) {
    const FinCategory& cat = w.f1.category();
    SectionData s;
    for (std::size_t o = 0; o < cat.object_count(); ++o) {
        s.rho_sect.emplace_back(
            hstack(w.rho[o].matrix(), w.h1.relation_basis().basis));
        s.pi_sect.emplace_back(
            hstack(w.pi[o].matrix(), w.f2.value(o).relation_basis().basis));
        s.iota_pull.emplace_back(
            hstack(w.iota[o].matrix(), w.f1.value(o).relation_basis().basis));
        std::vector<Int> rs(w.f2.value(o).generators());
        std::vector<Int> ps(w.f1.value(o).generators());
        if (perturb) {
            Subgroup kr = kernel(w.rho[o]);
            if (kr.group.generators() > 0) rs = kr.inclusion.matrix().col(0);
            Subgroup kp = kernel(w.pi[o]);
            if (kp.group.generators() > 0) ps = kp.inclusion.matrix().col(0);
        }
        s.rho_shift.push_back(std::move(rs));
        s.pi_shift.push_back(std::move(ps));
    }
    return s;
}

AbDiagram constant_diagram(const FinCategory& cat, const FgAbGroup& g) {
    std::vector<FgAbGroup> values(cat.object_count(), g);
    std::vector<AbHom> maps(cat.morphism_count(), AbHom::identity(g));
    return AbDiagram(cat, std::move(values), std::move(maps));
}

}  // namespace

ObstructionResult obstruction_cocycle(const FourTermWitness& w, bool perturb_sections) {
    validate_witness(w);
    const FinCategory& cat = w.f1.category();
    SectionData sect = build_sections(w, perturb_sections);
    AbDiagram const_h2 = constant_diagram(cat, w.h2);
    CochainComplex cx = build_cochain_complex(const_h2, 3);
    const std::vector<Chain>& two_chains = cx.chains[2];

    ObstructionResult res;
    res.cocycle_condition = true;
    for (std::size_t gen = 0; gen < w.h1.generators(); ++gen) {
        std::vector<Int> a(w.h1.generators());
        a[gen] = 1;
        std::vector<std::vector<Int>> values;
        for (const Chain& ch : two_chains) {
            std::size_t a1 = ch.arrows[0], a2 = ch.arrows[1];
            std::size_t alpha = ch.head;
            std::size_t beta = cat.morphism(a1).src;
            std::size_t gamma = cat.morphism(a2).src;
            // u = F2(γ→β) s_γ(a) - s_β(a), a canonical element of ker ρ_β
            std::vector<Int> s_gamma = section_apply(
                sect.rho_sect[gamma], w.f2.value(gamma).generators(), a, sect.rho_shift[gamma]);
            std::vector<Int> s_beta = section_apply(
                sect.rho_sect[beta], w.f2.value(beta).generators(), a, sect.rho_shift[beta]);
            std::vector<Int> u = w.f2.map(a2).matrix().apply(s_gamma);
            for (std::size_t i = 0; i < u.size(); ++i) u[i] -= s_beta[i];
            u = w.f2.value(beta).normal_form(u);
            // a² = F1(β→α) t_β(u) - t_α(F2(β→α) u)
            std::vector<Int> t_beta = section_apply(
                sect.pi_sect[beta], w.f1.value(beta).generators(), u, sect.pi_shift[beta]);
            std::vector<Int> term1 = w.f1.map(a1).matrix().apply(t_beta);
            std::vector<Int> v = w.f2.value(alpha).normal_form(w.f2.map(a1).matrix().apply(u));
            std::vector<Int> term2 = section_apply(
                sect.pi_sect[alpha], w.f1.value(alpha).generators(), v, sect.pi_shift[alpha]);
            for (std::size_t i = 0; i < term1.size(); ++i) term1[i] -= term2[i];
            auto pulled = sect.iota_pull[alpha].solve(term1);
            if (!pulled)
                throw std::logic_error("obstruction: a² value fell outside the image of iota");
            pulled->resize(w.h2.generators());
            values.push_back(w.h2.normal_form(*pulled));
        }
        // δ² a² = 0 in the constant-H2 complex
        std::vector<Int> vec(cx.groups[2].generators());
        for (std::size_t c = 0; c < two_chains.size(); ++c)
            for (std::size_t i = 0; i < w.h2.generators(); ++i)
                vec[cx.offsets[2][c] + i] = values[c][i];
        std::vector<Int> d2 = cx.deltas[2].matrix().apply(vec);
        if (!cx.groups[3].is_zero_element(d2)) res.cocycle_condition = false;
        // class vanishes iff a² = δ¹ b for some 1-cochain b
        EchelonSolver bound(hstack(cx.deltas[1].matrix(),
                                   cx.groups[2].relation_basis().basis));
        res.class_is_zero.push_back(bound.solve(vec).has_value());
        res.cocycle.push_back(std::move(values));
    }
    return res;
}

bool cocycles_differ_by_coboundary(const FourTermWitness& w,
                                   const std::vector<std::vector<Int>>& a,
                                   const std::vector<std::vector<Int>>& b) {
    AbDiagram const_h2 = constant_diagram(w.f1.category(), w.h2);
    CochainComplex cx = build_cochain_complex(const_h2, 2);
    if (a.size() != cx.chains[2].size() || b.size() != cx.chains[2].size())
        throw InputError("cocycles_differ_by_coboundary: wrong chain count");
    std::vector<Int> vec(cx.groups[2].generators());
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t i = 0; i < w.h2.generators(); ++i)
            vec[cx.offsets[2][c] + i] = a[c][i] - b[c][i];
    EchelonSolver bound(hstack(cx.deltas[1].matrix(), cx.groups[2].relation_basis().basis));
    return bound.solve(vec).has_value();
}

}  // namespace extlim
