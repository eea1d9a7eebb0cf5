#include "extlim/diagram_io.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

#include "extlim/error.hpp"
#include "extlim/group_expr.hpp"

namespace extlim {

using nlohmann::json;

AbDiagram load_diagram_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("diagram file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("objects") || !doc.contains("morphisms"))
        throw InputError("diagram file needs 'objects' and 'morphisms'");

    std::vector<std::string> names;
    std::vector<FgAbGroup> groups;
    std::map<std::string, std::size_t> obj_index;
    for (const auto& o : doc["objects"]) {
        if (!o.contains("id") || !o.contains("group"))
            throw InputError("each object needs 'id' and 'group'");
        std::string id = o["id"].get<std::string>();
        if (obj_index.count(id)) throw InputError("duplicate object id '" + id + "'");
        obj_index[id] = names.size();
        names.push_back(id);
        groups.push_back(parse_group(o["group"].get<std::string>()));
    }

    std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows;
    std::vector<IntMatrix> matrices;
    for (const auto& m : doc["morphisms"]) {
        if (!m.contains("id") || !m.contains("src") || !m.contains("dst") ||
            !m.contains("matrix"))
            throw InputError("each morphism needs 'id', 'src', 'dst', 'matrix'");
        std::string id = m["id"].get<std::string>();
        auto src = obj_index.find(m["src"].get<std::string>());
        auto dst = obj_index.find(m["dst"].get<std::string>());
        if (src == obj_index.end() || dst == obj_index.end())
            throw InputError("morphism '" + id + "' references an unknown object");
        const auto& rows = m["matrix"];
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        IntMatrix mat(groups[dst->second].generators(), groups[src->second].generators());
        if (r != mat.rows() || (r && c != mat.cols()))
            throw InputError("morphism '" + id + "' has a matrix of the wrong shape");
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw InputError("morphism '" + id + "' has a ragged matrix");
            for (std::size_t j = 0; j < c; ++j)
                mat(i, j) = rows[i][j].get<long long>();
        }
        arrows.emplace_back(id, src->second, dst->second);
        matrices.push_back(std::move(mat));
    }

    std::vector<std::array<std::string, 3>> comps;
    if (doc.contains("compositions"))
        for (const auto& c : doc["compositions"]) {
            if (c.size() != 3) throw InputError("compositions entries are [g, f, gf] triples");
            comps.push_back({c[0].get<std::string>(), c[1].get<std::string>(),
                             c[2].get<std::string>()});
        }

    FinCategory cat = FinCategory::assemble(names, arrows, comps);
    std::vector<AbHom> maps;
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
        const auto& mor = cat.morphism(m);
        if (mor.is_identity) {
            maps.push_back(AbHom::identity(groups[mor.src]));
        } else {
            try {
                maps.emplace_back(groups[mor.src], groups[mor.tgt],
                                  matrices[m - cat.object_count()]);
            } catch (const InputError& e) {
                throw InputError("morphism '" + mor.id + "': " + e.what());
            }
        }
    }
    return AbDiagram(std::move(cat), std::move(groups), std::move(maps));
}

AbDiagram load_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open diagram file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_diagram_json(text);
}

}  // namespace extlim
