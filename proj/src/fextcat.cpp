#include "extlim/fextcat.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

#include "extlim/error.hpp"
#include "extlim/group_expr.hpp"
#include "extlim/poly_functors.hpp"
#include "extlim/size_guard.hpp"

namespace extlim {

ExtMorphism::ExtMorphism(FreePresentation source, FreePresentation target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (!source_.same_base(target_))
        throw InputError("extension morphism: presentations have different bases");
    if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank())
        throw InputError("extension morphism: matrix shape mismatch");
    for (std::size_t j = 0; j < source_.sub_rank(); ++j)
        if (!solve_hermite(target_.inclusion(), matrix_.apply(source_.inclusion().col(j))))
            throw InputError("extension morphism: H generator " + std::to_string(j) +
                             " is not carried into the target H");
    // induced map on A is the identity
    const FgAbGroup& a = source_.base();
    IntMatrix diff = target_.projection() * matrix_ - source_.projection();
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!a.is_zero_element(diff.col(j)))
            throw InputError("extension morphism: induced map on the base is not the identity");
}

FreePresentation canonical_presentation(const FgAbGroup& a) {
    FgAbGroup base = FgAbGroup::from_invariants(a.free_rank(), a.torsion());
    std::size_t n = base.generators();
    return FreePresentation(n, base.relations(), base, IntMatrix::identity(n));
}

FreePresentation stabilize(const FreePresentation& p, std::size_t k) {
    std::size_t n = p.ambient_rank();
    IntMatrix incl(n + k, p.sub_rank() + k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p.sub_rank(); ++j) incl(i, j) = p.inclusion()(i, j);
    for (std::size_t i = 0; i < k; ++i) incl(n + i, p.sub_rank() + i) = 1;
    IntMatrix proj(p.base().generators(), n + k);
    for (std::size_t i = 0; i < proj.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) proj(i, j) = p.projection()(i, j);
    return FreePresentation(n + k, std::move(incl), p.base(), std::move(proj));
}

ExtMorphism lift(const FreePresentation& p1, const FreePresentation& p2) {
    if (!p1.same_base(p2)) throw InputError("lift: presentations have different bases");
    EchelonSolver solver(hstack(p2.projection(), p1.base().relation_basis().basis));
    IntMatrix phi(p2.ambient_rank(), p1.ambient_rank());
    for (std::size_t j = 0; j < p1.ambient_rank(); ++j) {
        auto x = solver.solve(p1.projection().col(j));
        if (!x) throw std::logic_error("lift: projection is not surjective");
        for (std::size_t i = 0; i < p2.ambient_rank(); ++i) phi(i, j) = (*x)[i];
    }
    return ExtMorphism(p1, p2, std::move(phi));
}

CoproductResult coproduct(const FreePresentation& p1, const FreePresentation& p2) {
    if (!p1.same_base(p2)) throw InputError("coproduct: presentations have different bases");
    std::size_t n1 = p1.ambient_rank(), n2 = p2.ambient_rank();
    IntMatrix proj = hstack(p1.projection(), p2.projection());
    // kernel lattice of Z^{n1+n2} → A
    HermiteBasis pairs =
        kernel_basis(hstack(proj, -p1.base().relation_basis().basis));
    IntMatrix h = hnf(pairs.basis.first_rows(n1 + n2)).basis;
    FreePresentation obj(n1 + n2, std::move(h), p1.base(), proj);
    IntMatrix i1(n1 + n2, n1), i2(n1 + n2, n2);
    for (std::size_t i = 0; i < n1; ++i) i1(i, i) = 1;
    for (std::size_t i = 0; i < n2; ++i) i2(n1 + i, i) = 1;
    ExtMorphism m1(p1, obj, std::move(i1));
    ExtMorphism m2(p2, obj, std::move(i2));
    return CoproductResult{std::move(obj), std::move(m1), std::move(m2)};
}

DoubledPair f1f2_pair(const FreePresentation& p) {
    std::size_t n = p.ambient_rank();
    IntMatrix h(2 * n, n + p.sub_rank());
    for (std::size_t i = 0; i < n; ++i) h(i, i) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p.sub_rank(); ++j)
            h(n + i, n + j) = p.inclusion()(i, j);
    IntMatrix proj(p.base().generators(), 2 * n);
    for (std::size_t i = 0; i < proj.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) proj(i, n + j) = p.projection()(i, j);
    FreePresentation target(2 * n, std::move(h), p.base(), std::move(proj));
    IntMatrix m1(2 * n, n), m2(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m1(n + i, i) = 1;
        m2(i, i) = 1;
        m2(n + i, i) = 1;
    }
    ExtMorphism f1(p, target, std::move(m1));
    ExtMorphism f2(p, target, std::move(m2));
    return DoubledPair{std::move(target), std::move(f1), std::move(f2)};
}

namespace {

std::size_t tensor_rank(std::size_t base, std::size_t n, const char* what) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= base;
        check_size_guard(total, what);
    }
    return total;
}

}  // namespace

FgAbGroup evaluate(const FunctorTag& tag, const FreePresentation& p) {
    switch (tag.kind) {
        case FunctorTag::Kind::TensorQuot: {
            std::size_t gens = tensor_rank(p.ambient_rank(), tag.n, "tensor_quot");
            return FgAbGroup(gens, tensor_power_map(p.inclusion(), tag.n));
        }
        case FunctorTag::Kind::ExtQuot: {
            IntMatrix rel = lambda_map(p.inclusion(), tag.n);
            return FgAbGroup(rel.rows(), rel);
        }
        case FunctorTag::Kind::GammaQuot: {
            IntMatrix rel = gamma_map(p.inclusion(), tag.n);
            return FgAbGroup(rel.rows(), rel);
        }
        case FunctorTag::Kind::TensorWithFree: {
            std::size_t fk = tensor_rank(p.ambient_rank(), tag.k, "tensor_with_free");
            const FgAbGroup& a0 = *tag.base;
            return FgAbGroup(a0.generators() * fk,
                             kronecker(a0.relation_basis().basis, IntMatrix::identity(fk)));
        }
    }
    throw std::logic_error("unknown functor tag");
}

AbHom evaluate_on(const FunctorTag& tag, const ExtMorphism& m) {
    FgAbGroup src = evaluate(tag, m.source());
    FgAbGroup dst = evaluate(tag, m.target());
    IntMatrix mat;
    switch (tag.kind) {
        case FunctorTag::Kind::TensorQuot: mat = tensor_power_map(m.matrix(), tag.n); break;
        case FunctorTag::Kind::ExtQuot: mat = lambda_map(m.matrix(), tag.n); break;
        case FunctorTag::Kind::GammaQuot: mat = gamma_map(m.matrix(), tag.n); break;
        case FunctorTag::Kind::TensorWithFree:
            mat = kronecker(IntMatrix::identity(tag.base->generators()),
                            tensor_power_map(m.matrix(), tag.k));
            break;
    }
    return AbHom(std::move(src), std::move(dst), std::move(mat));
}

TruncatedDiagram truncated_diagram(const FgAbGroup& a, const FunctorTag& tag,
                                   const Recipe& recipe) {
    // materialize the objects
    std::vector<FreePresentation> objs;
    std::vector<std::string> names;
    std::vector<std::optional<CoproductResult>> coproducts(recipe.objects.size());
    std::vector<std::optional<DoubledPair>> doubles(recipe.objects.size());
    std::vector<std::size_t> double_of(recipe.objects.size(), FinCategory::none);
    for (std::size_t i = 0; i < recipe.objects.size(); ++i) {
        const auto& spec = recipe.objects[i];
        names.push_back("P" + std::to_string(i));
        switch (spec.kind) {
            case Recipe::ObjectSpec::Kind::Canonical:
                objs.push_back(canonical_presentation(a));
                break;
            case Recipe::ObjectSpec::Kind::Stabilize:
                objs.push_back(stabilize(canonical_presentation(a), spec.arg1));
                break;
            case Recipe::ObjectSpec::Kind::Coproduct: {
                if (spec.arg1 >= i || spec.arg2 >= i)
                    throw InputError("recipe: coproduct arguments must come earlier");
                coproducts[i] = coproduct(objs[spec.arg1], objs[spec.arg2]);
                objs.push_back(coproducts[i]->object);
                break;
            }
            case Recipe::ObjectSpec::Kind::Double: {
                if (spec.arg1 >= i)
                    throw InputError("recipe: double argument must come earlier");
                doubles[i] = f1f2_pair(objs[spec.arg1]);
                double_of[i] = spec.arg1;
                objs.push_back(doubles[i]->target);
                break;
            }
        }
    }

    // named arrows with explicit endpoints
    std::vector<ExtMorphism> arrows;
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrow_specs;
    auto add_arrow = [&](const std::string& id, ExtMorphism m, std::size_t src,
                         std::size_t tgt) {
        arrow_specs.emplace_back(id, src, tgt);
        arrows.push_back(std::move(m));
    };

    for (std::size_t mi = 0; mi < recipe.morphisms.size(); ++mi) {
        const auto& spec = recipe.morphisms[mi];
        std::string id = "m" + std::to_string(mi);
        switch (spec.kind) {
            case Recipe::MorphismSpec::Kind::Lift:
                add_arrow(id + ":lift", lift(objs.at(spec.arg1), objs.at(spec.arg2)),
                          spec.arg1, spec.arg2);
                break;
            case Recipe::MorphismSpec::Kind::Iota1:
            case Recipe::MorphismSpec::Kind::Iota2: {
                std::size_t ci = spec.arg1;
                if (ci >= objs.size() || !coproducts[ci])
                    throw InputError("recipe: iota must name a coproduct object");
                bool first = spec.kind == Recipe::MorphismSpec::Kind::Iota1;
                add_arrow(id + ":iota",
                          first ? coproducts[ci]->iota1 : coproducts[ci]->iota2,
                          first ? recipe.objects[ci].arg1 : recipe.objects[ci].arg2, ci);
                break;
            }
            case Recipe::MorphismSpec::Kind::F1:
            case Recipe::MorphismSpec::Kind::F2: {
                std::size_t di = FinCategory::none;
                for (std::size_t i = 0; i < recipe.objects.size(); ++i)
                    if (double_of[i] == spec.arg1) di = i;
                if (di == FinCategory::none)
                    throw InputError("recipe: f1/f2 need the doubled target in the object list");
                bool first = spec.kind == Recipe::MorphismSpec::Kind::F1;
                add_arrow(id + (first ? ":f1" : ":f2"),
                          first ? doubles[di]->f1 : doubles[di]->f2, spec.arg1, di);
                break;
            }
        }
    }

    // close under composition, identifying morphisms by matrix equality
    std::vector<std::array<std::string, 3>> comps;
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = arrows.size();
        for (std::size_t g = 0; g < count && !grew; ++g)
            for (std::size_t f = 0; f < count && !grew; ++f) {
                if (std::get<2>(arrow_specs[f]) != std::get<1>(arrow_specs[g])) continue;
                IntMatrix prod = arrows[g].matrix() * arrows[f].matrix();
                std::size_t found = FinCategory::none;
                for (std::size_t k = 0; k < arrows.size(); ++k)
                    if (std::get<1>(arrow_specs[k]) == std::get<1>(arrow_specs[f]) &&
                        std::get<2>(arrow_specs[k]) == std::get<2>(arrow_specs[g]) &&
                        arrows[k].matrix() == prod) {
                        found = k;
                        break;
                    }
                if (found == FinCategory::none) {
                    if (arrows.size() >= recipe.bound)
                        throw InputError("recipe: composition closure exceeds the bound");
                    std::string id = "c" + std::to_string(arrows.size());
                    add_arrow(id,
                              ExtMorphism(arrows[f].source(), arrows[g].target(),
                                          std::move(prod)),
                              std::get<1>(arrow_specs[f]), std::get<2>(arrow_specs[g]));
                    grew = true;
                }
            }
    }
    // composition table entries for the assembled category
    for (std::size_t g = 0; g < arrows.size(); ++g)
        for (std::size_t f = 0; f < arrows.size(); ++f) {
            if (std::get<2>(arrow_specs[f]) != std::get<1>(arrow_specs[g])) continue;
            IntMatrix prod = arrows[g].matrix() * arrows[f].matrix();
            for (std::size_t k = 0; k < arrows.size(); ++k)
                if (std::get<1>(arrow_specs[k]) == std::get<1>(arrow_specs[f]) &&
                    std::get<2>(arrow_specs[k]) == std::get<2>(arrow_specs[g]) &&
                    arrows[k].matrix() == prod) {
                    comps.push_back({std::get<0>(arrow_specs[g]), std::get<0>(arrow_specs[f]),
                                     std::get<0>(arrow_specs[k])});
                    break;
                }
        }
    // identity arrows that were materialized as composites (e.g. lifts both
    // ways) are distinct morphisms from the implicit identities unless their
    // matrix is the identity; fold those into the identity.
    FinCategory cat = [&] {
        // replace composites equal to the identity matrix by the identity id
        std::vector<std::array<std::string, 3>> fixed;
        for (auto c : comps) {
            for (std::size_t k = 0; k < arrows.size(); ++k)
                if (std::get<0>(arrow_specs[k]) == c[2] &&
                    std::get<1>(arrow_specs[k]) == std::get<2>(arrow_specs[k]) &&
                    arrows[k].matrix().is_identity())
                    c[2] = "1_" + names[std::get<1>(arrow_specs[k])];
            fixed.push_back(c);
        }
        // drop arrows that equal the identity
        std::vector<std::tuple<std::string, std::size_t, std::size_t>> keep_specs;
        std::vector<ExtMorphism> keep_arrows;
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            if (std::get<1>(arrow_specs[k]) == std::get<2>(arrow_specs[k]) &&
                arrows[k].matrix().is_identity())
                continue;
            keep_specs.push_back(arrow_specs[k]);
            keep_arrows.push_back(arrows[k]);
        }
        // rewrite compositions whose operands were dropped
        std::vector<std::array<std::string, 3>> final_comps;
        auto kept = [&](const std::string& id) {
            for (const auto& s : keep_specs)
                if (std::get<0>(s) == id) return true;
            return false;
        };
        for (const auto& c : fixed)
            if (kept(c[0]) && kept(c[1])) final_comps.push_back(c);
        arrows = std::move(keep_arrows);
        arrow_specs = keep_specs;
        return FinCategory::assemble(names, keep_specs, final_comps);
    }();

    std::vector<FgAbGroup> values;
    for (const FreePresentation& p : objs) values.push_back(evaluate(tag, p));
    std::vector<AbHom> maps;
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(m);
        if (mor.is_identity) maps.push_back(AbHom::identity(values[mor.src]));
        else maps.push_back(evaluate_on(tag, arrows[m - cat.object_count()]));
    }
    AbDiagram diagram(cat, values, std::move(maps));
    return TruncatedDiagram{std::move(objs), std::move(arrows), std::move(diagram)};
}

Lemma21Report lemma21_vanishing_probe(const FgAbGroup& a, const FunctorTag& tag,
                                      const Recipe& recipe) {
    // locate a coproduct object whose two factors coincide with its iotas
    std::size_t cop = FinCategory::none, base_obj = FinCategory::none;
    for (std::size_t i = 0; i < recipe.objects.size(); ++i)
        if (recipe.objects[i].kind == Recipe::ObjectSpec::Kind::Coproduct &&
            recipe.objects[i].arg1 == recipe.objects[i].arg2) {
            cop = i;
            base_obj = recipe.objects[i].arg1;
        }
    if (cop == FinCategory::none)
        throw InputError("lemma21 probe: recipe needs a coproduct p ⋆ p");
    bool has_i1 = false, has_i2 = false;
    for (const auto& m : recipe.morphisms) {
        if (m.kind == Recipe::MorphismSpec::Kind::Iota1 && m.arg1 == cop) has_i1 = true;
        if (m.kind == Recipe::MorphismSpec::Kind::Iota2 && m.arg1 == cop) has_i2 = true;
    }
    if (!has_i1 || !has_i2)
        throw InputError("lemma21 probe: recipe needs both coproduct injections");

    TruncatedDiagram td = truncated_diagram(a, tag, recipe);
    const AbDiagram& d = td.diagram;
    // hypothesis (ii): (F(ι1), F(ι2)) is a monomorphism F(p) ⊕ F(p) → F(p⋆p)
    const FgAbGroup& fp = d.value(base_obj);
    std::size_t i1 = FinCategory::none, i2 = FinCategory::none;
    for (std::size_t m = 0; m < d.category().morphism_count(); ++m) {
        const auto& mor = d.category().morphism(m);
        if (mor.src == base_obj && mor.tgt == cop) {
            const ExtMorphism& em = td.arrows[m - d.category().object_count()];
            bool first_block = true, second_block = true;
            for (std::size_t r = 0; r < em.matrix().rows(); ++r)
                for (std::size_t c = 0; c < em.matrix().cols(); ++c) {
                    Int expect1 = (r == c) ? 1 : 0;
                    Int expect2 = (r == c + td.presentations[base_obj].ambient_rank()) ? 1 : 0;
                    if (em.matrix()(r, c) != expect1) first_block = false;
                    if (em.matrix()(r, c) != expect2) second_block = false;
                }
            if (first_block) i1 = m;
            if (second_block) i2 = m;
        }
    }
    if (i1 == FinCategory::none || i2 == FinCategory::none)
        throw std::logic_error("lemma21 probe: injections not found in the truncation");
    DirectSum dsum = direct_sum({fp, fp});
    AbHom block(dsum.group, d.value(cop),
                hstack(d.map(i1).matrix(), d.map(i2).matrix()));
    Lemma21Report rep{false, false, ""};
    rep.applicable = kernel(block).group.is_trivial();
    if (!rep.applicable) {
        rep.detail = "hypothesis (ii) fails: the coproduct map has a nontrivial kernel";
        return rep;
    }
    LimResult l = lim(d);
    rep.component_vanishes = l.projections[base_obj].is_zero_hom();
    rep.detail = rep.component_vanishes ? "p-component of every compatible family is zero"
                                        : "a compatible family with nonzero p-component exists";
    return rep;
}

namespace {

using nlohmann::json;

Recipe::ObjectSpec parse_object_spec(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "canonical") return {Recipe::ObjectSpec::Kind::Canonical, 0, 0};
        unsigned long a = 0, b = 0;
        if (std::sscanf(s.c_str(), "coproduct(%lu,%lu)", &a, &b) == 2)
            return {Recipe::ObjectSpec::Kind::Coproduct, a, b};
        if (std::sscanf(s.c_str(), "double(%lu)", &a) == 1)
            return {Recipe::ObjectSpec::Kind::Double, a, 0};
        throw InputError("recipe: unknown object spec '" + s + "'");
    }
    if (j.is_object() && j.contains("stabilize"))
        return {Recipe::ObjectSpec::Kind::Stabilize, j["stabilize"].get<std::size_t>(), 0};
    throw InputError("recipe: malformed object spec");
}

Recipe::MorphismSpec parse_morphism_spec(const std::string& s, const Recipe& partial) {
    unsigned long a = 0, b = 0;
    if (std::sscanf(s.c_str(), "lift(%lu,%lu)", &a, &b) == 2)
        return {Recipe::MorphismSpec::Kind::Lift, a, b};
    auto unique_coproduct = [&]() -> std::size_t {
        std::size_t found = FinCategory::none;
        for (std::size_t i = 0; i < partial.objects.size(); ++i)
            if (partial.objects[i].kind == Recipe::ObjectSpec::Kind::Coproduct) {
                if (found != FinCategory::none)
                    throw InputError("recipe: bare iota is ambiguous; use iota1(i)");
                found = i;
            }
        if (found == FinCategory::none) throw InputError("recipe: iota needs a coproduct");
        return found;
    };
    if (std::sscanf(s.c_str(), "iota1(%lu)", &a) == 1)
        return {Recipe::MorphismSpec::Kind::Iota1, a, 0};
    if (std::sscanf(s.c_str(), "iota2(%lu)", &a) == 1)
        return {Recipe::MorphismSpec::Kind::Iota2, a, 0};
    if (s == "iota1") return {Recipe::MorphismSpec::Kind::Iota1, unique_coproduct(), 0};
    if (s == "iota2") return {Recipe::MorphismSpec::Kind::Iota2, unique_coproduct(), 0};
    if (std::sscanf(s.c_str(), "f1(%lu)", &a) == 1)
        return {Recipe::MorphismSpec::Kind::F1, a, 0};
    if (std::sscanf(s.c_str(), "f2(%lu)", &a) == 1)
        return {Recipe::MorphismSpec::Kind::F2, a, 0};
    throw InputError("recipe: unknown morphism spec '" + s + "'");
}

}  // namespace

ParsedRecipe parse_recipe_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("recipe is not valid JSON: ") + e.what());
    }
    if (!doc.contains("base") || !doc.contains("objects") || !doc.contains("morphisms") ||
        !doc.contains("functor"))
        throw InputError("recipe needs 'base', 'objects', 'morphisms' and 'functor'");
    ParsedRecipe pr{parse_group(doc["base"].get<std::string>()),
                    FunctorTag::tensor_quot(2), {}};
    for (const auto& o : doc["objects"]) pr.recipe.objects.push_back(parse_object_spec(o));
    for (const auto& m : doc["morphisms"])
        pr.recipe.morphisms.push_back(parse_morphism_spec(m.get<std::string>(), pr.recipe));
    const json& f = doc["functor"];
    std::string kind = f.value("kind", "");
    if (kind == "tensor_quot") pr.tag = FunctorTag::tensor_quot(f.at("n").get<std::size_t>());
    else if (kind == "ext_quot") pr.tag = FunctorTag::ext_quot(f.at("n").get<std::size_t>());
    else if (kind == "gamma_quot") pr.tag = FunctorTag::gamma_quot(f.at("n").get<std::size_t>());
    else if (kind == "tensor_with_free")
        pr.tag = FunctorTag::tensor_with_free(parse_group(f.at("base").get<std::string>()),
                                              f.at("k").get<std::size_t>());
    else throw InputError("recipe: unknown functor kind '" + kind + "'");
    if (doc.contains("bound")) pr.recipe.bound = doc["bound"].get<std::size_t>();
    return pr;
}

ParsedRecipe parse_recipe_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open recipe file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_recipe_json(text);
}

}  // namespace extlim
