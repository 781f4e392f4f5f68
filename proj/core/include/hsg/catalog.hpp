#pragma once

#include <string>
#include <vector>

#include "hsg/structures.hpp"

namespace hsg {

struct Preset {
  std::string name;
  std::string signs;                  // base invariant structure
  std::vector<std::vector<int>> eps;  // optional stable sign table, relative to the base
  int global = 1;
  std::vector<int> transposition_reps;  // optional: point p is the reflection in x1 - x_{r+1}; 0 = identity
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::string group;     // group spec accepted by build_group
  std::string subgroup;  // human-readable description
  std::vector<QVec> h_roots;
  std::string provenance;
  std::string notes;
  std::vector<Preset> presets;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);  // throws UsageError
// Built once per process and shared (copies share the lazy Weyl group cache).
HomogeneousSpace catalog_space(const std::string& name);
HomogeneousSpace build_space(const CatalogEntry& e);
StableStructure preset_structure(const HomogeneousSpace& s, const Preset& p);
const Preset& find_preset(const CatalogEntry& e, const std::string& name);

// Structure argument: a catalog preset name or a sign string ("" means all '+').
StableStructure resolve_structure(const HomogeneousSpace& s, const std::string& entry_name,
                                  const std::string& text);

}  // namespace hsg
