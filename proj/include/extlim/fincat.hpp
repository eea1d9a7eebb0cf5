#pragma once
#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace extlim {

/// Small category with a total composition table. Construction verifies the
/// category laws: identities are two-sided units, every composable pair has
/// a composite, and composition is associative.
class FinCategory {
  public:
    struct Morphism {
        std::string id;
        std::size_t src;
        std::size_t tgt;
        bool is_identity;
    };

    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                std::vector<std::vector<std::size_t>> table);

    /// Adds identity morphisms (ids "1_<object>") ahead of the listed arrows
    /// and fills the identity rows of the table; `compositions` names the
    /// composite of every composable pair of listed arrows by id.
    static FinCategory assemble(
        std::vector<std::string> objects,
        std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows,
        const std::vector<std::array<std::string, 3>>& compositions);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }
    const std::string& object_name(std::size_t o) const { return objects_[o]; }
    const Morphism& morphism(std::size_t m) const { return morphisms_[m]; }
    std::size_t identity_of(std::size_t o) const { return identity_[o]; }
    std::size_t find_morphism(const std::string& id) const;  // none if absent

    bool composable(std::size_t g, std::size_t f) const {
        return morphisms_[f].tgt == morphisms_[g].src;
    }
    std::size_t compose(std::size_t g, std::size_t f) const;

    bool has_hom(std::size_t from, std::size_t to) const;
    bool is_quasi_initial(std::size_t o) const;
    /// First quasi-initial object in object order, or `none`.
    std::size_t quasi_initial_object() const;

    /// Unordered pairs (f, g), f < g, of distinct parallel morphisms.
    std::vector<std::pair<std::size_t, std::size_t>> parallel_pairs() const;

  private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::size_t> identity_;
    std::vector<std::vector<std::size_t>> table_;

    void validate() const;
};

struct GeneratorArrow {
    std::string id;
    std::string src;
    std::string tgt;
};

/// A word lists generator ids in application order: {f, g} means g ∘ f.
using MorphismWord = std::vector<std::string>;

/// Free category on the generators modulo the relations, closed under
/// composition; rejects (suspected infinite category) when the number of
/// distinct morphisms would exceed `bound`.
FinCategory fincat_build(const std::vector<std::string>& objects,
                         const std::vector<GeneratorArrow>& generators,
                         const std::vector<std::pair<MorphismWord, MorphismWord>>& relations,
                         std::size_t bound);

}  // namespace extlim
