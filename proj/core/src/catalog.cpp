#include "hsg/catalog.hpp"

#include <map>
#include <mutex>

namespace hsg {

namespace {

QVec e(int dim, std::initializer_list<std::pair<int, int>> entries) {
  QVec v = zero_vec(std::size_t(dim));
  for (auto [i, c] : entries) v[std::size_t(i - 1)] = c;
  return v;
}

// +-(x_i - x_j) for i < j inside each block of consecutive coordinates.
std::vector<QVec> block_roots(const std::vector<int>& blocks) {
  int dim = 0;
  for (int b : blocks) dim += b;
  std::vector<QVec> out;
  int start = 1;
  for (int b : blocks) {
    for (int i = start; i < start + b; ++i)
      for (int j = i + 1; j < start + b; ++j) {
        out.push_back(e(dim, {{i, 1}, {j, -1}}));
        out.push_back(e(dim, {{i, -1}, {j, 1}}));
      }
    start += b;
  }
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"CP1", "U(2)", "T^2", {}, "complex projective line; fixed points e and (12)", "", {}});
  c.push_back({"CP2", "U(3)", "U(1) x U(2)", block_roots({1, 2}), "complex projective plane", "", {}});
  {
    CatalogEntry cp3{"CP3", "U(4)", "U(1) x U(3)", block_roots({1, 3}),
                     "complex projective space CP^3 with stable structures from the chi_y example", "", {}};
    cp3.presets.push_back({"cp3-standard", "+", {}, 1, {0, 1, 2, 3}, "chi_y example: standard structure"});
    cp3.presets.push_back({"cp3-e11-minus",
                           "+",
                           {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}},
                           -1,
                           {0, 1, 2, 3},
                           "chi_y example: stable structure with eps_1(1) = -1 and global sign -1"});
    cp3.presets.push_back({"cp3-e30-e11-minus",
                           "+",
                           {{1, 1, -1}, {-1, 1, -1}, {1, -1, -1}, {1, 1, -1}},
                           1,
                           {0, 1, 2, 3},
                           "chi_y example: stable structure with eps_3(0) = eps_1(1) = -1"});
    c.push_back(std::move(cp3));
  }
  c.push_back({"S6", "G2", "SU(3) (long roots)",
               {e(2, {{1, 1}, {2, -1}}), e(2, {{1, -1}, {2, 1}}), e(2, {{1, 2}, {2, 1}}), e(2, {{1, -2}, {2, -1}}),
                e(2, {{1, 1}, {2, 2}}), e(2, {{1, -1}, {2, -2}})},
               "six-sphere G2/SU(3) with its invariant structure",
               "",
               {}});
  c.push_back({"U3-flag", "U(3)", "T^3", {}, "complete flags in C^3; carries the SU-structure",
               "", {{"su", "+-+", {}, 1, {}, "SU-structure on the flag manifold U(3)/T^3"}}});
  c.push_back({"U4-flag", "U(4)", "T^4", {}, "complete flags in C^4", "", {}});
  c.push_back({"U5-flag", "U(5)", "T^5", {}, "complete flags in C^5", "", {}});
  c.push_back({"G42", "U(4)", "U(2) x U(2)", block_roots({2, 2}), "Grassmannian of 2-planes in C^4", "", {}});
  c.push_back({"G52", "U(5)", "U(2) x U(3)", block_roots({2, 3}), "Grassmannian of 2-planes in C^5", "", {}});
  c.push_back({"G622", "U(6)", "U(2) x U(2) x U(2)", block_roots({2, 2, 2}),
               "generalized Grassmannian U(6)/U(2)^3 (k = 3, m = 2)", "", {}});
  c.push_back({"U4-T2U2", "U(4)", "T^2 x U(2)", block_roots({1, 1, 2}), "partial flag U(4)/(T^2 x U(2))", "", {}});
  c.push_back({"Sp2-flag", "Sp(2)", "T^2", {}, "flag manifold Sp(2)/T^2", "", {}});
  c.push_back({"G2-flag", "G2", "T^2", {}, "flag manifold G2/T^2, fibered over S6", "", {}});
  c.push_back({"HP1", "Sp(2)", "Sp(1) x Sp(1)", {e(2, {{1, 2}}), e(2, {{1, -2}}), e(2, {{2, 2}}), e(2, {{2, -2}})},
               "quaternionic projective line, base of the restricted genus", "no invariant structure", {}});
  {
    std::vector<QVec> h{e(3, {{1, 2}}), e(3, {{1, -2}}), e(3, {{2, 2}}), e(3, {{2, -2}}), e(3, {{3, 2}}),
                        e(3, {{3, -2}}), e(3, {{2, 1}, {3, 1}}), e(3, {{2, -1}, {3, -1}}), e(3, {{2, 1}, {3, -1}}),
                        e(3, {{2, -1}, {3, 1}})};
    c.push_back({"HP2", "Sp(3)", "Sp(1) x Sp(2)", h, "quaternionic projective plane",
                 "no invariant structure (obstruction)", {}});
  }
  c.push_back({"CP3-sp", "Sp(2)", "Sp(1) x U(1)", {e(2, {{1, 2}}), e(2, {{1, -2}})},
               "CP^3 as Sp(2)/(Sp(1) x U(1)), fibered over HP1", "", {}});
  c.push_back({"U9-k3m3", "U(9)", "U(3) x U(3) x U(3)", block_roots({3, 3, 3}),
               "generalized Grassmannian U(9)/U(3)^3 (k = 3, m = 3)", "", {}});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UsageError("unknown catalog space '" + name + "'");
}

HomogeneousSpace build_space(const CatalogEntry& e) {
  HomogeneousSpace s = HomogeneousSpace::from_vectors(e.name, build_group(e.group), e.h_roots);
  // Catalog groups are known to be small enough to enumerate in full.
  std::size_t order = weyl_order(s.g()).get_ui();
  if (order > s.weyl_cap) s.weyl_cap = order;
  return s;
}

HomogeneousSpace catalog_space(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, HomogeneousSpace> cache;
  const CatalogEntry& e = catalog_entry(name);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_space(e)).first;
  return it->second;
}

const Preset& find_preset(const CatalogEntry& e, const std::string& name) {
  for (const auto& p : e.presets)
    if (p.name == name) return p;
  throw UsageError("space " + e.name + " has no preset '" + name + "'");
}

StableStructure preset_structure(const HomogeneousSpace& s, const Preset& p) {
  StableStructure c;
  c.name = p.name;
  c.base = InvariantStructure{p.signs};
  c.eps = p.eps;
  c.global = p.global;
  if (!p.transposition_reps.empty()) {
    const GroupData& g = s.g();
    const WeylGroup& wg = s.weyl_g();
    for (int r : p.transposition_reps) {
      if (r == 0) {
        c.reps.push_back(0);
        continue;
      }
      int a = g.root_index(e(g.dim, {{1, 1}, {r + 1, -1}}));
      int idx = a < 0 ? -1 : wg.find(g.reflection_perm[std::size_t(a)]);
      if (idx < 0) throw UsageError("preset " + p.name + ": representative not found");
      c.reps.push_back(idx);
    }
  }
  validate(s, c);
  return c;
}

StableStructure resolve_structure(const HomogeneousSpace& s, const std::string& entry_name,
                                  const std::string& text) {
  if (!entry_name.empty() && !text.empty() && text.find_first_not_of("+-") != std::string::npos) {
    for (const auto& e : catalog())
      if (e.name == entry_name) return preset_structure(s, find_preset(e, text));
  }
  if (!text.empty() && text.find_first_not_of("+-") != std::string::npos)
    throw UsageError("unknown structure '" + text + "'");
  InvariantStructure j = text.empty() ? standard_structure(s) : InvariantStructure{text};
  return as_stable(s, j);
}

}  // namespace hsg
