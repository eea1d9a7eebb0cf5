#pragma once
#include <string>

#include "extlim/group.hpp"

namespace extlim {

/// Parser for the group-expression grammar
///   group := term ("+" term)* ; term := "Z" | "Z^" INT | "Z/" INT
/// e.g. "Z^2+Z/4+Z/6". Parse failures throw InputError with the position.
FgAbGroup parse_group(const std::string& expr);

/// Canonical expression, e.g. "Z^2+Z/2+Z/12"; "0" for the trivial group.
std::string format_group(const FgAbGroup& g);

/// "(free_rank, [f1, f2, ...])"
std::string format_invariants(const FgAbGroup& g);

/// {"free_rank": r, "torsion": [f1, ...]}
std::string group_to_json(const FgAbGroup& g);

}  // namespace extlim
