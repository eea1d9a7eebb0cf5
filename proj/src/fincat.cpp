#include "extlim/fincat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "extlim/error.hpp"

namespace extlim {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<std::vector<std::size_t>> table)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)), table_(std::move(table)) {
    identity_.assign(objects_.size(), none);
    for (std::size_t m = 0; m < morphisms_.size(); ++m) {
        const Morphism& mor = morphisms_[m];
        if (mor.src >= objects_.size() || mor.tgt >= objects_.size())
            throw InputError("morphism '" + mor.id + "' references an unknown object");
        if (mor.is_identity) {
            if (mor.src != mor.tgt || identity_[mor.src] != none)
                throw InputError("bad identity assignment at '" + mor.id + "'");
            identity_[mor.src] = m;
        }
    }
    for (std::size_t o = 0; o < objects_.size(); ++o)
        if (identity_[o] == none)
            throw InputError("object '" + objects_[o] + "' has no identity morphism");
    validate();
}

void FinCategory::validate() const {
    const std::size_t n = morphisms_.size();
    if (table_.size() != n) throw InputError("composition table has wrong size");
    for (const auto& row : table_)
        if (row.size() != n) throw InputError("composition table has wrong size");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            std::size_t gf = table_[g][f];
            if (!composable(g, f)) {
                if (gf != none)
                    throw InputError("table defines a composite for the non-composable pair ('" +
                                     morphisms_[g].id + "', '" + morphisms_[f].id + "')");
                continue;
            }
            if (gf == none)
                throw InputError("composition '" + morphisms_[g].id + "' ∘ '" +
                                 morphisms_[f].id + "' is undefined");
            if (gf >= n || morphisms_[gf].src != morphisms_[f].src ||
                morphisms_[gf].tgt != morphisms_[g].tgt)
                throw InputError("composite of '" + morphisms_[g].id + "' and '" +
                                 morphisms_[f].id + "' has wrong endpoints");
        }
    for (std::size_t f = 0; f < n; ++f) {
        if (table_[identity_[morphisms_[f].tgt]][f] != f ||
            table_[f][identity_[morphisms_[f].src]] != f)
            throw InputError("identity is not a unit at morphism '" + morphisms_[f].id + "'");
    }
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            if (!composable(h, g)) continue;
            for (std::size_t f = 0; f < n; ++f) {
                if (!composable(g, f)) continue;
                if (table_[table_[h][g]][f] != table_[h][table_[g][f]])
                    throw InputError("composition is not associative at ('" + morphisms_[h].id +
                                     "', '" + morphisms_[g].id + "', '" + morphisms_[f].id +
                                     "')");
            }
        }
}

FinCategory FinCategory::assemble(
    std::vector<std::string> objects,
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows,
    const std::vector<std::array<std::string, 3>>& compositions) {
    std::vector<Morphism> morphisms;
    for (std::size_t o = 0; o < objects.size(); ++o)
        morphisms.push_back({"1_" + objects[o], o, o, true});
    std::map<std::string, std::size_t> index;
    for (std::size_t o = 0; o < objects.size(); ++o) index[morphisms[o].id] = o;
    for (const auto& [id, src, tgt] : arrows) {
        if (index.count(id)) throw InputError("duplicate morphism id '" + id + "'");
        index[id] = morphisms.size();
        morphisms.push_back({id, src, tgt, false});
    }
    const std::size_t n = morphisms.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, none));
    for (std::size_t m = 0; m < n; ++m) {
        table[morphisms[m].tgt][m] = m;  // identity of tgt ∘ m
        table[m][morphisms[m].src] = m;  // m ∘ identity of src
    }
    for (const auto& c : compositions) {
        auto look = [&](const std::string& id) {
            auto it = index.find(id);
            if (it == index.end()) throw InputError("composition names unknown morphism '" + id + "'");
            return it->second;
        };
        table[look(c[0])][look(c[1])] = look(c[2]);
    }
    return FinCategory(std::move(objects), std::move(morphisms), std::move(table));
}

std::size_t FinCategory::find_morphism(const std::string& id) const {
    for (std::size_t m = 0; m < morphisms_.size(); ++m)
        if (morphisms_[m].id == id) return m;
    return none;
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
    if (!composable(g, f)) throw InputError("compose: morphisms are not composable");
    return table_[g][f];
}

bool FinCategory::has_hom(std::size_t from, std::size_t to) const {
    for (const Morphism& m : morphisms_)
        if (m.src == from && m.tgt == to) return true;
    return false;
}

bool FinCategory::is_quasi_initial(std::size_t o) const {
    for (std::size_t c = 0; c < objects_.size(); ++c)
        if (!has_hom(o, c)) return false;
    return true;
}

std::size_t FinCategory::quasi_initial_object() const {
    for (std::size_t o = 0; o < objects_.size(); ++o)
        if (is_quasi_initial(o)) return o;
    return none;
}

std::vector<std::pair<std::size_t, std::size_t>> FinCategory::parallel_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
        for (std::size_t g = f + 1; g < morphisms_.size(); ++g)
            if (morphisms_[f].src == morphisms_[g].src && morphisms_[f].tgt == morphisms_[g].tgt)
                pairs.emplace_back(f, g);
    return pairs;
}

namespace {

struct PathKey {
    std::size_t src;
    MorphismWord word;
    bool operator<(const PathKey& o) const {
        return std::tie(src, word) < std::tie(o.src, o.word);
    }
};

/// Rewrite rules oriented larger-to-smaller by (length, lex).
struct Rewriter {
    std::vector<std::pair<MorphismWord, MorphismWord>> rules;

    MorphismWord normalize(MorphismWord w) const {
        for (int guard = 0; guard < 10000; ++guard) {
            bool changed = false;
            for (const auto& [lhs, rhs] : rules) {
                if (lhs.size() > w.size()) continue;
                for (std::size_t at = 0; at + lhs.size() <= w.size(); ++at) {
                    if (std::equal(lhs.begin(), lhs.end(), w.begin() + at)) {
                        MorphismWord next(w.begin(), w.begin() + at);
                        next.insert(next.end(), rhs.begin(), rhs.end());
                        next.insert(next.end(), w.begin() + at + lhs.size(), w.end());
                        w = std::move(next);
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
            if (!changed) return w;
        }
        throw InputError("fincat_build: relation rewriting did not terminate");
    }
};

bool word_less(const MorphismWord& a, const MorphismWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

FinCategory fincat_build(const std::vector<std::string>& objects,
                         const std::vector<GeneratorArrow>& generators,
                         const std::vector<std::pair<MorphismWord, MorphismWord>>& relations,
                         std::size_t bound) {
    std::map<std::string, std::size_t> obj_index;
    for (std::size_t o = 0; o < objects.size(); ++o) obj_index[objects[o]] = o;
    std::map<std::string, std::pair<std::size_t, std::size_t>> gen_ends;
    for (const GeneratorArrow& g : generators) {
        if (!obj_index.count(g.src) || !obj_index.count(g.tgt))
            throw InputError("generator '" + g.id + "' references an unknown object");
        if (gen_ends.count(g.id)) throw InputError("duplicate generator id '" + g.id + "'");
        gen_ends[g.id] = {obj_index[g.src], obj_index[g.tgt]};
    }
    auto word_endpoints = [&](const MorphismWord& w) -> std::pair<std::size_t, std::size_t> {
        constexpr std::size_t none = FinCategory::none;
        if (w.empty()) return {none, none};  // identity; endpoints from the other side
        std::size_t src = none, at = none;
        for (const std::string& id : w) {
            auto it = gen_ends.find(id);
            if (it == gen_ends.end())
                throw InputError("relation names unknown generator '" + id + "'");
            if (src == none) src = it->second.first;
            else if (it->second.first != at)
                throw InputError("relation word is not composable at '" + id + "'");
            at = it->second.second;
        }
        return {src, at};
    };

    Rewriter rw;
    for (const auto& [u, v] : relations) {
        auto eu = word_endpoints(u), ev = word_endpoints(v);
        if (u.empty() && v.empty()) continue;
        if (u.empty() || v.empty()) {
            // one side is an identity: the other must be an endomorphism word
            auto& e = u.empty() ? ev : eu;
            if (e.first != e.second)
                throw InputError("relation equates an identity with a non-endomorphism");
        } else if (eu != ev) {
            throw InputError("relation sides have different endpoints");
        }
        if (u == v) continue;
        if (word_less(u, v)) rw.rules.emplace_back(v, u);
        else rw.rules.emplace_back(u, v);
    }

    // closure over normal-form words
    std::map<PathKey, std::size_t> seen;
    std::vector<FinCategory::Morphism> morphisms;
    std::vector<PathKey> keys;
    auto intern = [&](std::size_t src, std::size_t tgt, MorphismWord w,
                      bool identity) -> std::size_t {
        PathKey key{src, w};
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        if (morphisms.size() >= bound)
            throw InputError("fincat_build: closure exceeds the bound of " +
                             std::to_string(bound) + " morphisms (suspected infinite category)");
        std::string id;
        if (identity) id = "1_" + objects[src];
        else
            for (auto rit = w.rbegin(); rit != w.rend(); ++rit)
                id += (id.empty() ? "" : ".") + *rit;
        std::size_t idx = morphisms.size();
        morphisms.push_back({id, src, tgt, identity});
        seen[key] = idx;
        keys.push_back(key);
        return idx;
    };

    for (std::size_t o = 0; o < objects.size(); ++o) intern(o, o, {}, true);
    for (const GeneratorArrow& g : generators) {
        MorphismWord w = rw.normalize({g.id});
        auto [src, tgt] = gen_ends[g.id];
        intern(src, tgt, std::move(w), false);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = morphisms.size();
        for (std::size_t g = 0; g < count; ++g)
            for (std::size_t f = 0; f < count; ++f) {
                if (morphisms[f].tgt != morphisms[g].src) continue;
                MorphismWord w = keys[f].word;
                w.insert(w.end(), keys[g].word.begin(), keys[g].word.end());
                w = rw.normalize(std::move(w));
                bool is_id = w.empty();
                std::size_t before = morphisms.size();
                intern(morphisms[f].src, morphisms[g].tgt, std::move(w), is_id);
                if (morphisms.size() != before) grew = true;
            }
    }

    const std::size_t n = morphisms.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, FinCategory::none));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            if (morphisms[f].tgt != morphisms[g].src) continue;
            MorphismWord w = keys[f].word;
            w.insert(w.end(), keys[g].word.begin(), keys[g].word.end());
            w = rw.normalize(std::move(w));
            auto it = seen.find(PathKey{morphisms[f].src, w});
            if (it == seen.end()) throw std::logic_error("fincat_build: closure is not closed");
            table[g][f] = it->second;
        }
    return FinCategory(std::vector<std::string>(objects), std::move(morphisms), std::move(table));
}

}  // namespace extlim
