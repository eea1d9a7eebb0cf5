#include "extlim/diagram.hpp"

#include <stdexcept>

#include "extlim/error.hpp"
#include "extlim/size_guard.hpp"

namespace extlim {

AbDiagram::AbDiagram(FinCategory cat, std::vector<FgAbGroup> values, std::vector<AbHom> maps)
    : cat_(std::move(cat)), values_(std::move(values)), maps_(std::move(maps)) {
    if (values_.size() != cat_.object_count() || maps_.size() != cat_.morphism_count())
        throw InputError("diagram: one group per object and one hom per morphism required");
    for (std::size_t m = 0; m < maps_.size(); ++m) {
        const auto& mor = cat_.morphism(m);
        if (!maps_[m].source().same_presentation(values_[mor.src]) ||
            !maps_[m].target().same_presentation(values_[mor.tgt]))
            throw InputError("diagram: hom at '" + mor.id + "' has wrong endpoints");
        if (mor.is_identity && !maps_[m].equals(AbHom::identity(values_[mor.src])))
            throw InputError("diagram: identity '" + mor.id + "' is not the identity hom");
    }
    for (std::size_t g = 0; g < maps_.size(); ++g)
        for (std::size_t f = 0; f < maps_.size(); ++f) {
            if (!cat_.composable(g, f)) continue;
            if (!compose(maps_[g], maps_[f]).equals(maps_[cat_.compose(g, f)]))
                throw InputError("diagram: functoriality fails at '" + cat_.morphism(g).id +
                                 "' ∘ '" + cat_.morphism(f).id + "'");
        }
}

namespace {

void enumerate_chains(const FinCategory& cat, std::size_t max_degree, bool normalized,
                      std::vector<std::vector<Chain>>& out) {
    out.assign(max_degree + 1, {});
    for (std::size_t o = 0; o < cat.object_count(); ++o)
        out[0].push_back(Chain{o, {}});
    for (std::size_t m = 1; m <= max_degree; ++m) {
        for (const Chain& c : out[m - 1]) {
            // extend by one arrow on the inside: arrows[m-1] into the tail
            std::size_t tail = c.arrows.empty() ? c.head : cat.morphism(c.arrows.back()).src;
            for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
                if (cat.morphism(a).tgt != tail) continue;
                if (normalized && cat.morphism(a).is_identity) continue;
                Chain next = c;
                next.arrows.push_back(a);
                out[m].push_back(std::move(next));
            }
        }
    }
    // depth-first lexicographic order: sort each degree by the arrow tuple
    for (auto& level : out)
        std::sort(level.begin(), level.end(), [](const Chain& a, const Chain& b) {
            if (a.arrows.empty()) return a.head < b.head;
            return a.arrows < b.arrows;
        });
}

std::size_t find_chain(const std::vector<Chain>& level, std::size_t head,
                       const std::vector<std::size_t>& arrows) {
    for (std::size_t i = 0; i < level.size(); ++i)
        if (level[i].head == head && level[i].arrows == arrows) return i;
    throw std::logic_error("cochain face chain not found");
}

}  // namespace

CochainComplex build_cochain_complex(const AbDiagram& d, std::size_t max_degree,
                                     bool normalized) {
    const FinCategory& cat = d.category();
    CochainComplex cx;
    enumerate_chains(cat, max_degree, normalized, cx.chains);

    for (std::size_t m = 0; m <= max_degree; ++m) {
        std::vector<std::size_t> offs;
        std::size_t gens = 0, rels = 0;
        for (const Chain& c : cx.chains[m]) {
            offs.push_back(gens);
            gens += d.value(c.head).generators();
            rels += d.value(c.head).relations().cols();
        }
        check_size_guard(gens, "cochain group");
        IntMatrix relations(gens, rels);
        std::size_t ro = 0;
        for (std::size_t ci = 0; ci < cx.chains[m].size(); ++ci) {
            const IntMatrix& r = d.value(cx.chains[m][ci].head).relations();
            for (std::size_t i = 0; i < r.rows(); ++i)
                for (std::size_t j = 0; j < r.cols(); ++j)
                    relations(offs[ci] + i, ro + j) = r(i, j);
            ro += r.cols();
        }
        cx.offsets.push_back(std::move(offs));
        cx.groups.emplace_back(gens, std::move(relations));
    }

    for (std::size_t m = 0; m + 1 <= max_degree; ++m) {
        IntMatrix delta(cx.groups[m + 1].generators(), cx.groups[m].generators());
        for (std::size_t vi = 0; vi < cx.chains[m + 1].size(); ++vi) {
            const Chain& v = cx.chains[m + 1][vi];
            std::size_t row0 = cx.offsets[m + 1][vi];
            std::size_t head_gens = d.value(v.head).generators();
            // face 0: apply F(arrows[0]) to the chain with the outer arrow dropped
            {
                const auto& a1 = cat.morphism(v.arrows[0]);
                std::vector<std::size_t> rest(v.arrows.begin() + 1, v.arrows.end());
                std::size_t src = find_chain(cx.chains[m], a1.src, rest);
                const IntMatrix& f = d.map(v.arrows[0]).matrix();
                for (std::size_t i = 0; i < f.rows(); ++i)
                    for (std::size_t j = 0; j < f.cols(); ++j)
                        if (f(i, j) != 0)
                            delta(row0 + i, cx.offsets[m][src] + j) += f(i, j);
            }
            // inner faces: compose adjacent arrows
            for (std::size_t j = 1; j <= m; ++j) {
                std::size_t comp = cat.compose(v.arrows[j - 1], v.arrows[j]);
                if (normalized && cat.morphism(comp).is_identity) continue;
                std::vector<std::size_t> arrows;
                for (std::size_t l = 0; l < v.arrows.size(); ++l) {
                    if (l == j - 1) arrows.push_back(comp);
                    else if (l != j) arrows.push_back(v.arrows[l]);
                }
                std::size_t src = find_chain(cx.chains[m], v.head, arrows);
                Int sign = (j % 2 == 0) ? 1 : -1;
                for (std::size_t i = 0; i < head_gens; ++i)
                    delta(row0 + i, cx.offsets[m][src] + i) += sign;
            }
            // last face: drop the innermost arrow
            {
                std::vector<std::size_t> arrows(v.arrows.begin(), v.arrows.end() - 1);
                std::size_t src = find_chain(cx.chains[m], v.head, arrows);
                Int sign = ((m + 1) % 2 == 0) ? 1 : -1;
                for (std::size_t i = 0; i < head_gens; ++i)
                    delta(row0 + i, cx.offsets[m][src] + i) += sign;
            }
        }
        cx.deltas.emplace_back(cx.groups[m], cx.groups[m + 1], std::move(delta));
    }
    for (std::size_t m = 0; m + 1 < cx.deltas.size(); ++m)
        if (!compose(cx.deltas[m + 1], cx.deltas[m]).is_zero_hom())
            throw std::logic_error("cochain complex: δ∘δ != 0");
    return cx;
}

LimResult lim(const AbDiagram& d) {
    CochainComplex cx = build_cochain_complex(d, 1);
    Subgroup k = kernel(cx.deltas[0]);
    LimResult res{k.group, k.inclusion, {}};
    for (std::size_t o = 0; o < d.category().object_count(); ++o) {
        IntMatrix pr(d.value(o).generators(), cx.groups[0].generators());
        for (std::size_t i = 0; i < pr.rows(); ++i) pr(i, cx.offsets[0][o] + i) = 1;
        res.projections.push_back(
            compose(AbHom(cx.groups[0], d.value(o), pr), k.inclusion));
    }
    return res;
}

FgAbGroup lim_n(const AbDiagram& d, std::size_t n, bool normalized) {
    if (n > 2) throw InputError("lim_n: degree must be at most 2");
    CochainComplex cx = build_cochain_complex(d, n + 1, normalized);
    Subgroup cocycles = kernel(cx.deltas[n]);
    if (n == 0) return cocycles.group;
    AbHom lifted = factor_through(cocycles, cx.deltas[n - 1]);
    return cokernel(lifted).group;
}

bool SixTermReport::ok() const {
    return head_injective && exact_at[0] && exact_at[1] && exact_at[2] && exact_at[3];
}

namespace {

/// Blockwise hom between cochain groups induced by an objectwise natural map.
AbHom blockwise(const CochainComplex& from, const CochainComplex& to, std::size_t degree,
                const std::vector<AbHom>& per_object) {
    IntMatrix m(to.groups[degree].generators(), from.groups[degree].generators());
    for (std::size_t ci = 0; ci < from.chains[degree].size(); ++ci) {
        const IntMatrix& b = per_object[from.chains[degree][ci].head].matrix();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(i, j) != 0)
                    m(to.offsets[degree][ci] + i, from.offsets[degree][ci] + j) = b(i, j);
    }
    return AbHom(from.groups[degree], to.groups[degree], std::move(m));
}

bool subgroups_coincide(const Subgroup& a, const Subgroup& b) {
    return a.preimage == b.preimage;
}

}  // namespace

SixTermReport six_term_check(const DiagramSES& s) {
    const FinCategory& cat = s.sub.category();
    if (cat.morphism_count() != s.middle.category().morphism_count() ||
        cat.morphism_count() != s.quot.category().morphism_count())
        throw InputError("six_term_check: diagrams live on different categories");
    if (s.incl.size() != cat.object_count() || s.proj.size() != cat.object_count())
        throw InputError("six_term_check: need one inclusion and projection per object");
    // objectwise exactness
    for (std::size_t o = 0; o < cat.object_count(); ++o) {
        if (!kernel(s.incl[o]).group.is_trivial())
            throw InputError("six_term_check: inclusion not injective at object " +
                             std::to_string(o));
        if (!cokernel(s.proj[o]).group.is_trivial())
            throw InputError("six_term_check: projection not surjective at object " +
                             std::to_string(o));
        if (!subgroups_coincide(image(s.incl[o]), kernel(s.proj[o])))
            throw InputError("six_term_check: sequence not exact at object " +
                             std::to_string(o));
    }
    // naturality of both transformations
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(m);
        if (!compose(s.middle.map(m), s.incl[mor.src]).equals(
                compose(s.incl[mor.tgt], s.sub.map(m))))
            throw InputError("six_term_check: inclusion not natural at '" + mor.id + "'");
        if (!compose(s.quot.map(m), s.proj[mor.src]).equals(
                compose(s.proj[mor.tgt], s.middle.map(m))))
            throw InputError("six_term_check: projection not natural at '" + mor.id + "'");
    }

    CochainComplex c1 = build_cochain_complex(s.sub, 2);
    CochainComplex c2 = build_cochain_complex(s.middle, 2);
    CochainComplex c3 = build_cochain_complex(s.quot, 2);

    Subgroup lim1_sub = kernel(c1.deltas[0]);
    Subgroup lim2_sub = kernel(c2.deltas[0]);
    Subgroup lim3_sub = kernel(c3.deltas[0]);
    Subgroup z1_1 = kernel(c1.deltas[1]);
    Subgroup z1_2 = kernel(c2.deltas[1]);
    Subgroup z1_3 = kernel(c3.deltas[1]);
    Quotient h1_1 = cokernel(factor_through(z1_1, c1.deltas[0]));
    Quotient h1_2 = cokernel(factor_through(z1_2, c2.deltas[0]));
    Quotient h1_3 = cokernel(factor_through(z1_3, c3.deltas[0]));

    // induced maps on lim
    AbHom mu0 = blockwise(c1, c2, 0, s.incl);
    AbHom nu0 = blockwise(c2, c3, 0, s.proj);
    AbHom mu1 = blockwise(c1, c2, 1, s.incl);
    AbHom nu1 = blockwise(c2, c3, 1, s.proj);
    AbHom lim_mu = factor_through(lim2_sub, compose(mu0, lim1_sub.inclusion));
    AbHom lim_nu = factor_through(lim3_sub, compose(nu0, lim2_sub.inclusion));
    AbHom lim1_mu = compose(h1_2.projection,
                            factor_through(z1_2, compose(mu1, z1_1.inclusion)));
    AbHom lim1_nu = compose(h1_3.projection,
                            factor_through(z1_3, compose(nu1, z1_2.inclusion)));

    // connecting map lim(quot) → lim¹(sub): lift, push with δ⁰, pull back
    EchelonSolver lift_nu(hstack(nu0.matrix(), nu0.target().relation_basis().basis));
    EchelonSolver pull_mu(hstack(mu1.matrix(), mu1.target().relation_basis().basis));
    EchelonSolver into_z(hstack(z1_1.inclusion.matrix(),
                                z1_1.inclusion.target().relation_basis().basis));
    auto modded = [](std::optional<std::vector<Int>> x, std::size_t gens,
                     const char* what) {
        if (!x) throw std::logic_error(std::string("six_term_check: ") + what);
        x->resize(gens);
        return *x;
    };
    IntMatrix conn(h1_1.group.generators(), lim3_sub.group.generators());
    for (std::size_t g = 0; g < lim3_sub.group.generators(); ++g) {
        std::vector<Int> v = lim3_sub.inclusion.matrix().col(g);
        std::vector<Int> lifted =
            modded(lift_nu.solve(v), nu0.source().generators(), "lift failed");
        std::vector<Int> pushed = c2.deltas[0].matrix().apply(lifted);
        std::vector<Int> pulled =
            modded(pull_mu.solve(pushed), mu1.source().generators(), "pullback failed");
        std::vector<Int> in_z = modded(into_z.solve(pulled),
                                       z1_1.group.generators(), "cocycle factor failed");
        std::vector<Int> cls = h1_1.projection.matrix().apply(in_z);
        for (std::size_t i = 0; i < cls.size(); ++i) conn(i, g) = cls[i];
    }
    AbHom connecting(lim3_sub.group, h1_1.group, std::move(conn));

    SixTermReport rep;
    rep.groups = {lim1_sub.group, lim2_sub.group, lim3_sub.group,
                  h1_1.group,     h1_2.group,     h1_3.group};
    rep.head_injective = kernel(lim_mu).group.is_trivial();
    rep.exact_at[0] = subgroups_coincide(image(lim_mu), kernel(lim_nu));
    rep.exact_at[1] = subgroups_coincide(image(lim_nu), kernel(connecting));
    rep.exact_at[2] = subgroups_coincide(image(connecting), kernel(lim1_mu));
    rep.exact_at[3] = subgroups_coincide(image(lim1_mu), kernel(lim1_nu));
    return rep;
}

QuasiInitialEmbedding quasi_initial_embedding(const AbDiagram& d) {
    const FinCategory& cat = d.category();
    std::size_t c0 = cat.quasi_initial_object();
    if (c0 == FinCategory::none)
        throw InputError("quasi_initial_embedding: category has no quasi-initial object");
    LimResult l = lim(d);
    const AbHom& to_value = l.projections[c0];
    QuasiInitialEmbedding res{c0, to_value, kernel(to_value).group.is_trivial(),
                              {}, {}, false};
    res.image_preimage = image(to_value).preimage;
    // intersection of equalizers over parallel pairs out of c0
    IntMatrix acc = hnf(IntMatrix::identity(d.value(c0).generators())).basis;
    for (auto [f, g] : cat.parallel_pairs()) {
        if (cat.morphism(f).src != c0) continue;
        Subgroup eq = equalizer(d.map(f), d.map(g));
        acc = image_intersection(acc, eq.preimage).basis;
    }
    res.equalizer_preimage = hnf(hstack(acc, d.value(c0).relation_basis().basis)).basis;
    res.image_equals_equalizers = res.image_preimage == res.equalizer_preimage;
    return res;
}

bool coequalizer_vanishing_check(const AbDiagram& d) {
    const FinCategory& cat = d.category();
    if (cat.quasi_initial_object() == FinCategory::none)
        throw InputError("coequalizer_vanishing_check: no quasi-initial object");
    for (auto [e1, e2] : cat.parallel_pairs()) {
        bool found = false;
        for (std::size_t e = 0; e < cat.morphism_count() && !found; ++e) {
            if (cat.morphism(e).src != cat.morphism(e1).tgt) continue;
            if (cat.compose(e, e1) != cat.compose(e, e2)) continue;
            if (kernel(d.map(e)).group.is_trivial()) found = true;
        }
        if (!found) return false;
    }
    if (!lim_n(d, 1).is_trivial())
        throw std::logic_error("coequalizer hypothesis holds but lim^1 is nonzero");
    return true;
}

}  // namespace extlim
