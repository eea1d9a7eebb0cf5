#pragma once
#include <string>

#include "extlim/diagram.hpp"

namespace extlim {

/// Loads an abelian diagram from JSON:
///   {"objects": [{"id": "x", "group": "Z"}, ...],
///    "morphisms": [{"id": "u", "src": "x", "dst": "y", "matrix": [[1]]}, ...],
///    "compositions": [["g", "f", "gf"], ...]}
/// Identities are implicit. Category laws and functoriality are verified;
/// the first violation is reported by id.
AbDiagram load_diagram_json(const std::string& text);
AbDiagram load_diagram_file(const std::string& path);

}  // namespace extlim
