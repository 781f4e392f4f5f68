#include "hsg/spacejson.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hsg {

using nlohmann::json;

namespace {

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

BigRational rational_json(const json& j) {
  if (j.is_number_integer()) return BigRational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

QVec qvec_from(const json& j) {
  if (!j.is_array()) throw UsageError("expected an array of rationals, got " + j.dump());
  QVec v;
  for (const auto& e : j) v.push_back(rational_json(e));
  return v;
}

std::vector<QVec> qvecs_from(const json& j) {
  if (!j.is_array()) throw UsageError("expected an array of vectors");
  std::vector<QVec> out;
  for (const auto& e : j) out.push_back(qvec_from(e));
  return out;
}

bool buildable(const GroupData& g) {
  try {
    GroupData b = build_group(g.label);
    return b.roots == g.roots && b.gram == g.gram;
  } catch (const UsageError&) {
    return false;
  }
}

}  // namespace

std::string space_to_json(const HomogeneousSpace& s, int indent) {
  json j;
  j["label"] = s.label();
  const GroupData& g = s.g();
  if (buildable(g)) {
    j["group"] = g.label;
  } else {
    json grp;
    grp["label"] = g.label;
    grp["dim"] = g.dim;
    grp["roots"] = json::array();
    for (const auto& r : g.roots) grp["roots"].push_back(qvec_json(r));
    if (!g.gram.empty()) {
      grp["gram"] = json::array();
      for (const auto& row : g.gram) grp["gram"].push_back(qvec_json(row));
    }
    j["group"] = grp;
  }
  j["subgroup_roots"] = json::array();
  for (const auto& r : s.h_root_vectors()) j["subgroup_roots"].push_back(qvec_json(r));
  return j.dump(indent);
}

HomogeneousSpace space_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed space JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("group")) throw UsageError("space JSON needs a \"group\" field");
  std::string label = j.value("label", std::string("space"));
  GroupData g;
  const json& grp = j["group"];
  if (grp.is_string()) {
    g = build_group(grp.get<std::string>());
  } else if (grp.is_object() && grp.contains("roots") && grp.contains("dim")) {
    QMatrix gram;
    if (grp.contains("gram")) gram = qvecs_from(grp["gram"]);
    g = group_from_roots(grp.value("label", label + "-group"), grp["dim"].get<int>(), qvecs_from(grp["roots"]),
                         gram);
  } else {
    throw UsageError("\"group\" must be a group spec string or {\"roots\": ..., \"dim\": ...}");
  }
  std::vector<QVec> h;
  if (j.contains("subgroup_roots")) h = qvecs_from(j["subgroup_roots"]);
  for (const auto& r : h)
    if (int(r.size()) != g.dim) throw UsageError("subgroup root " + to_string(r) + " has the wrong dimension");
  return HomogeneousSpace::from_vectors(label, g, h);
}

HomogeneousSpace load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read space file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return space_from_json(ss.str());
}

}  // namespace hsg
