#pragma once

#include <string>

#include "hsg/space.hpp"

namespace hsg {

// {"label": ..., "group": "U(4)" | {"roots": [[...]], "dim": d, "gram": [[...]]},
//  "subgroup_roots": [[...]]}; rationals are written as "p/q" strings
// (plain integers are accepted on input).
std::string space_to_json(const HomogeneousSpace& s, int indent = 2);
HomogeneousSpace space_from_json(const std::string& text);
HomogeneousSpace load_space_file(const std::string& path);

}  // namespace hsg
