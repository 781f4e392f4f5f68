#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reproduce.hpp"

#include "hsg/catalog.hpp"
#include "hsg/hirzebruch.hpp"
#include "hsg/quaternionic.hpp"
#include "hsg/spacejson.hpp"
#include "hsg/toricgenus.hpp"

using json = nlohmann::ordered_json;
using namespace hsg;

namespace {

constexpr const char* kSchema = "hsgenus/1";

struct Options {
  std::string space, space_file, structure, structure2, omega, series, ordering, point, format = "plain";
  std::string which = "sp-flag", base, base_structure, fiber_structure;
  int cutoff = -1, n = 2, max_index = 3, samples = 5;
  std::uint64_t seed = 1;
  std::vector<std::string> sections;
};

// What a command produced: a JSON result, a plain rendering and optional CSV rows.
struct Output {
  json result;
  std::string plain;
  std::vector<std::vector<std::string>> csv;
  int exit_code = 0;
};

struct Resolved {
  HomogeneousSpace space;
  std::string entry;  // catalog name, empty for a file
};

Resolved resolve_space(const Options& o) {
  if (!o.space_file.empty()) return {load_space_file(o.space_file), ""};
  if (o.space.empty()) throw UsageError("--space or --space-file is required");
  return {catalog_space(o.space), catalog_entry(o.space).name};
}

QVec parse_vector(const std::string& text) {
  QVec v;
  std::string t = text;
  for (char& c : t)
    if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("empty coordinate in '" + text + "'");
    v.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return v;
}

QVec point_for(const HomogeneousSpace& s, const std::string& text) {
  QVec u = parse_vector(text);
  if (int(u.size()) != s.g().dim)
    throw UsageError("point needs " + std::to_string(s.g().dim) + " coordinates, got " + std::to_string(u.size()));
  return u;
}

Ordering ordering_for(const HomogeneousSpace& s, const std::string& text) {
  if (text.empty()) return default_ordering(s.g());
  Ordering o;
  o.v = point_for(s, text);
  if (!is_generic(o, s.g())) throw UsageError("ordering vector is orthogonal to a root");
  return o;
}

json vec_json(const QVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

RigiditySeries rigidity_series(const Options& o) {
  return parse_rigidity_series(o.series.empty() ? "u/(1+u^2)" : o.series);
}

// Commands.

Output space_list(const Options&) {
  Output out;
  out.result = json::array();
  out.csv.push_back({"name", "group", "subgroup", "notes", "provenance"});
  for (const auto& e : catalog()) {
    json p = json::array();
    for (const auto& pr : e.presets) p.push_back({{"name", pr.name}, {"signs", pr.signs}, {"provenance", pr.provenance}});
    out.result.push_back({{"name", e.name}, {"group", e.group}, {"subgroup", e.subgroup}, {"notes", e.notes},
                          {"provenance", e.provenance}, {"presets", p}});
    out.csv.push_back({e.name, e.group, e.subgroup, e.notes, e.provenance});
    out.plain += e.name + "\t" + e.group + " / " + e.subgroup + (e.notes.empty() ? "" : "  [" + e.notes + "]") + "\n";
  }
  return out;
}

Output space_info(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  json summands = json::array();
  std::string plain = s.label() + "\n  group " + s.g().label + ", complex dimension " + std::to_string(s.n()) +
                      ", euler " + s.euler().get_str() + "\n";
  for (std::size_t i = 0; i < s.summands().size(); ++i) {
    const auto& m = s.summands()[i];
    json roots = json::array();
    std::string rs;
    for (int r : m.roots) {
      roots.push_back(vec_json(s.g().roots[r]));
      rs += " " + to_string(s.g().roots[r]);
    }
    summands.push_back({{"roots", roots}, {"self_conjugate", m.self_conjugate}});
    plain += "  summand " + std::to_string(i + 1) + ":" + rs + (m.self_conjugate ? " (self-conjugate)" : "") + "\n";
  }
  out.result = {{"label", s.label()},
                {"group", s.g().label},
                {"n", s.n()},
                {"euler", s.euler().get_str()},
                {"invariant_structure", s.has_invariant_structure()},
                {"summands", summands},
                {"space", json::parse(space_to_json(s))}};
  if (!entry.empty()) {
    const auto& e = catalog_entry(entry);
    out.result["provenance"] = e.provenance;
    out.result["notes"] = e.notes;
    json p = json::array();
    for (const auto& pr : e.presets) {
      p.push_back({{"name", pr.name}, {"signs", pr.signs}, {"global", pr.global}, {"provenance", pr.provenance}});
      plain += "  preset " + pr.name + " (" + pr.signs + ")\n";
    }
    out.result["presets"] = p;
    if (!e.notes.empty()) plain += "  " + e.notes + "\n";
  }
  if (!s.has_invariant_structure()) plain += "  no invariant almost complex structure\n";
  out.plain = plain;
  return out;
}

Output genus_class(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto c = resolve_structure(s, entry, o.structure);
  int cutoff = o.cutoff < 0 ? s.n() : o.cutoff;
  auto g = chern_dold_genus(s, c, cutoff);
  out.result = {{"class", g.cls.to_string()}, {"cutoff", cutoff}};
  if (cutoff > s.n()) out.result["form"] = g.form.to_string();
  out.plain = g.cls.to_string() + "\n";
  if (cutoff > s.n()) out.plain += "form: " + g.form.to_string() + "\n";
  out.csv = {{"class"}, {g.cls.to_string()}};
  return out;
}

Output genus_s(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto c = resolve_structure(s, entry, o.structure);
  std::vector<Omega> omegas;
  if (o.omega.empty() || o.omega == "all") {
    omegas = omegas_of_weight(s.n());
  } else {
    omegas.push_back(parse_omega(o.omega));
  }
  out.result = json::array();
  out.csv.push_back({"omega", "value"});
  for (const auto& w : omegas) {
    BigRational v = s_omega(s, c, w).value;
    out.result.push_back({{"omega", omega_string(w)}, {"value", to_string(v)}});
    out.csv.push_back({omega_string(w), to_string(v)});
    out.plain += "s" + omega_string(w) + " = " + to_string(v) + "\n";
  }
  return out;
}

Output genus_chi_y(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto c = resolve_structure(s, entry, o.structure);
  std::vector<ChiYRow> rows;
  YPolynomial p = chi_y(s, c, ordering_for(s, o.ordering), &rows);
  json coeffs = json::array(), jr = json::array();
  for (const auto& q : p) coeffs.push_back(q.get_str());
  out.csv.push_back({"point", "w", "ind", "sign"});
  for (const auto& r : rows) {
    jr.push_back({{"point", r.point}, {"w", r.label}, {"ind", r.ind}, {"sign", r.sign}});
    out.csv.push_back({std::to_string(r.point), r.label, std::to_string(r.ind), std::to_string(r.sign)});
    out.plain += "  " + r.label + "\tind " + std::to_string(r.ind) + "\tsign " + (r.sign > 0 ? "+" : "-") + "\n";
  }
  out.result = {{"chi_y", to_string(p)}, {"coefficients", coeffs}, {"rows", jr}};
  out.plain = "chi_y = " + to_string(p) + "\n" + out.plain;
  return out;
}

Output genus_number(const Options& o, bool sig) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto c = resolve_structure(s, entry, o.structure);
  BigInt v = sig ? signature(s, c) : todd(s, c);
  out.result = {{"value", v.get_str()}};
  out.plain = v.get_str() + "\n";
  out.csv = {{"value"}, {v.get_str()}};
  return out;
}

Output rigidity_eval_cmd(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto c = resolve_structure(s, entry, o.structure);
  auto f = rigidity_series(o);
  std::vector<QVec> pts;
  if (!o.point.empty()) {
    pts.push_back(point_for(s, o.point));
  } else {
    pts = sample_points(s, f, std::size_t(o.samples), o.seed);
  }
  out.result = json::array();
  out.csv.push_back({"point", "value"});
  for (const auto& u : pts) {
    BigRational v = rigidity_eval(s, c, f, u);
    out.result.push_back({{"point", vec_json(u)}, {"value", to_string(v)}});
    out.csv.push_back({to_string(u), to_string(v)});
    out.plain += to_string(u) + "\t" + to_string(v) + "\n";
  }
  return out;
}

Output rigidity_certify_cmd(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto c = resolve_structure(s, entry, o.structure);
  auto f = rigidity_series(o);
  auto v = rigidity_certify_odd(s, c, f, std::size_t(o.samples), o.seed);
  json samples = json::array();
  for (const auto& [u, val] : v.samples) samples.push_back({{"point", vec_json(u)}, {"value", to_string(val)}});
  out.result = {{"verdict", v.verdict},  {"pairing", v.pairing},           {"pairs", v.pairs.size()},
                {"seed", v.seed},        {"samples", samples},             {"samples_zero", v.samples_zero},
                {"samples_constant", v.samples_constant}};
  out.plain = v.verdict + "\n";
  if (v.pairing_found) out.plain += "pairing: " + v.pairing + "\n";
  out.plain += "samples: " + std::string(v.samples_zero ? "all zero" : v.samples_constant ? "constant" : "not constant") +
               "\n";
  out.csv = {{"verdict", "pairing", "samples_zero"}, {v.verdict, v.pairing, v.samples_zero ? "1" : "0"}};
  return out;
}

Output rigidity_independence_cmd(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto f = rigidity_series(o);
  std::vector<StableStructure> cs;
  std::vector<std::string> names;
  if (o.structure.empty() && o.structure2.empty() && !entry.empty() && !catalog_entry(entry).presets.empty()) {
    for (const auto& p : catalog_entry(entry).presets) {
      cs.push_back(preset_structure(s, p));
      names.push_back(p.name);
    }
  } else {
    cs.push_back(resolve_structure(s, entry, o.structure));
    cs.push_back(resolve_structure(s, entry, o.structure2));
    names = {o.structure.empty() ? "standard" : o.structure, o.structure2.empty() ? "standard" : o.structure2};
  }
  std::vector<QVec> pts = o.point.empty() ? sample_points(s, f, std::size_t(o.samples), o.seed)
                                          : std::vector<QVec>{point_for(s, o.point)};
  bool equal = true, oriented = true;
  json rows = json::array();
  std::vector<std::string> header{"point"};
  header.insert(header.end(), names.begin(), names.end());
  out.csv.push_back(header);
  for (const auto& u : pts) {
    json vals = json::array();
    std::vector<std::string> line{to_string(u)};
    BigRational first;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      BigRational v = rigidity_eval(s, cs[i], f, u);
      if (i == 0) first = v;
      equal = equal && v == first;
      oriented = oriented && v * cs[i].global == first * cs[0].global;
      vals.push_back(to_string(v));
      line.push_back(to_string(v));
    }
    rows.push_back({{"point", vec_json(u)}, {"values", vals}});
    out.csv.push_back(line);
    std::string pl = to_string(u);
    for (std::size_t i = 1; i < line.size(); ++i) pl += "\t" + line[i];
    out.plain += pl + "\n";
  }
  out.result = {{"structures", names}, {"equal", equal}, {"equal_up_to_orientation", oriented}, {"rows", rows}};
  out.plain = std::string(equal ? "equal" : oriented ? "equal up to orientation" : "not equal") + " (" + [&] {
    std::string j;
    for (const auto& n : names) j += (j.empty() ? "" : ", ") + n;
    return j;
  }() + ")\n" + out.plain;
  return out;
}

Output su_find(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  auto su = find_su_structures(s);
  out.result = json::array();
  out.csv.push_back({"structure"});
  for (const auto& j : su) {
    out.result.push_back(j.signs);
    out.csv.push_back({j.signs});
    out.plain += j.signs + "\n";
  }
  if (su.empty()) out.plain = "none\n";
  return out;
}

Output fibration_check(const Options& o) {
  Output out;
  auto [s, entry] = resolve_space(o);
  if (o.base.empty()) throw UsageError("--base is required");
  auto base = catalog_space(o.base);
  int cutoff = o.cutoff < 0 ? s.n() : o.cutoff;
  auto fib = fiber_space(s, base);
  InvariantStructure fj = o.fiber_structure.empty() ? standard_structure(fib) : InvariantStructure{o.fiber_structure};
  InvariantStructure bj = o.base_structure.empty() ? standard_structure(base) : InvariantStructure{o.base_structure};
  auto tw = twisted_product(s, base, fj, bj, cutoff);
  auto combined = combined_structure(s, base, fj, bj);
  auto direct = chern_dold_genus(s, combined, cutoff);
  bool equal = tw.form == direct.form;
  out.result = {{"fiber", fib.label()},       {"fiber_structure", fj.signs},   {"base_structure", bj.signs},
                {"combined", combined.signs}, {"cutoff", cutoff},              {"equal", equal},
                {"class", direct.cls.to_string()}};
  out.plain = "fiber " + fib.label() + ", combined structure " + combined.signs + "\ntwisted product " +
              (equal ? "=" : "!=") + " direct genus to cutoff " + std::to_string(cutoff) + "\nclass " +
              direct.cls.to_string() + "\n";
  out.csv = {{"equal", "class"}, {equal ? "1" : "0", direct.cls.to_string()}};
  return out;
}

Output hp_restricted(const Options& o) {
  Output out;
  auto r = restricted_genus_hp(o.n, o.which, o.max_index);
  json table = json::array();
  out.csv.push_back({"i1", "i2", "monomial", "computed", "formula", "matches"});
  for (const auto& e : r.table) {
    table.push_back({{"i1", e.i1}, {"i2", e.i2}, {"monomial", e.x_monomial}, {"computed", e.computed.to_string()},
                     {"formula", e.formula.to_string()}, {"matches", e.matches}});
    out.csv.push_back({std::to_string(e.i1), std::to_string(e.i2), e.x_monomial, e.computed.to_string(),
                       e.formula.to_string(), e.matches ? "1" : "0"});
    out.plain += "(" + std::to_string(e.i1) + "," + std::to_string(e.i2) + ") " + e.x_monomial + ": " +
                 e.computed.to_string() + (e.matches ? "" : "  [formula " + e.formula.to_string() + "]") + "\n";
  }
  out.result = {{"which", r.which},         {"space", r.space},   {"structure", r.structure},
                {"base", r.base},           {"cutoff", r.cutoff}, {"aggregate", r.aggregate.to_string()},
                {"expansion", r.expansion.to_string()}, {"table", table}, {"notes", r.notes}};
  out.plain = r.space + " over " + r.base + "\nexpansion: " + r.expansion.to_string() + "\n" + out.plain;
  for (const auto& n : r.notes) out.plain += "note: " + n + "\n";
  return out;
}

Output hp_obstruction(const Options& o) {
  Output out;
  auto r = hp_obstruction_search(o.n);
  json as = json::array();
  out.csv.push_back({"signs", "passes_t1", "admissible", "failing_degree", "failing_omega"});
  for (const auto& a : r.assignments) {
    as.push_back({{"signs", a.signs}, {"passes_t1", a.passes_t1}, {"admissible", a.admissible},
                  {"failing_degree", a.failing_degree}, {"failing_omega", a.failing_omega}});
    out.csv.push_back({a.signs, a.passes_t1 ? "1" : "0", a.admissible ? "1" : "0", std::to_string(a.failing_degree),
                       a.failing_omega});
  }
  json ns = json::array();
  for (const auto& v : r.nullspace) ns.push_back(vec_json(v));
  out.result = {{"n", r.n},           {"space", r.space},      {"unknowns", r.unknowns},
                {"equations", r.equations}, {"nullspace", ns}, {"assignments", as},
                {"admissible", r.admissible}, {"witness", r.witness}};
  out.plain = r.space + ": " + (r.admissible ? "admissible assignment exists" : "no admissible assignment") + "\n";
  for (const auto& e : r.equations) out.plain += "  t^1: " + e + "\n";
  if (!r.witness.empty()) out.plain += "  " + r.witness + "\n";
  return out;
}

Output reproduce(const Options& o) {
  Output out;
  auto rows = repro::run_all(o.sections);
  if (rows.empty()) throw UsageError("no criterion matches the given --section filter");
  json jr = json::array();
  bool all = true;
  out.csv.push_back({"id", "topic", "title", "pass", "expected", "computed", "seconds"});
  std::ostringstream plain;
  for (const auto& r : rows) {
    all = all && r.pass;
    jr.push_back({{"id", r.id}, {"topic", r.topic}, {"title", r.title}, {"pass", r.pass},
                  {"expected", r.expected}, {"computed", r.computed}, {"seconds", r.seconds}});
    out.csv.push_back({r.id, r.topic, r.title, r.pass ? "pass" : "FAIL", r.expected, r.computed,
                       std::to_string(r.seconds)});
    plain << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.topic << "] " << r.title << "\n  expected: "
          << r.expected << "\n  computed: " << r.computed << "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass;
  plain << passed << "/" << rows.size() << " criteria passed\n";
  out.plain = plain.str();
  out.result = {{"rows", jr}, {"passed", passed}, {"total", rows.size()}, {"all_pass", all}};
  out.exit_code = all ? 0 : 3;
  return out;
}

void emit(const Options& o, const std::string& command, const Output& out, double seconds) {
  if (o.format == "json") {
    json inputs = json::object();
    auto put = [&](const char* k, const std::string& v) {
      if (!v.empty()) inputs[k] = v;
    };
    put("space", o.space);
    put("space_file", o.space_file);
    put("structure", o.structure);
    put("omega", o.omega);
    put("series", o.series);
    put("ordering", o.ordering);
    put("point", o.point);
    if (o.cutoff >= 0) inputs["cutoff"] = o.cutoff;
    if (command.rfind("rigidity", 0) == 0) inputs["seed"] = o.seed;
    if (!o.sections.empty()) inputs["section"] = o.sections;
    json doc = {{"schema", kSchema}, {"command", command}, {"inputs", inputs}, {"result", out.result},
                {"seconds", seconds}};
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    for (const auto& line : out.csv) {
      for (std::size_t i = 0; i < line.size(); ++i) std::cout << (i ? "," : "") << csv_field(line[i]);
      std::cout << "\n";
    }
  } else {
    std::cout << out.plain;
  }
}

void error_doc(const Options& o, const std::string& command, const std::string& kind, const std::string& msg) {
  if (o.format == "json") {
    json doc = {{"schema", kSchema}, {"command", command}, {"error", {{"kind", kind}, {"message", msg}}}};
    std::cout << doc.dump(2) << "\n";
  }
  std::cerr << "hsgenus: " << msg << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric genera and characteristic numbers of homogeneous spaces"};
  app.require_subcommand(1);
  Options o;
  std::string command;
  std::function<Output()> job;

  auto output_flags = [&](CLI::App* c) {
    auto* g = c->add_option_group("format");
    g->add_flag_callback("--json", [&] { o.format = "json"; }, "JSON document");
    g->add_flag_callback("--csv", [&] { o.format = "csv"; }, "CSV table");
    g->add_flag_callback("--plain", [&] { o.format = "plain"; }, "plain text (default)");
    g->require_option(0, 1);
  };
  auto space_flags = [&](CLI::App* c) {
    c->add_option("--space", o.space, "catalog space name");
    c->add_option("--space-file", o.space_file, "space in JSON format")->check(CLI::ExistingFile);
  };
  auto structure_flag = [&](CLI::App* c) {
    c->add_option("--structure", o.structure, "sign string or catalog preset name");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Output()> fn) {
    auto* c = parent->add_subcommand(name, help);
    output_flags(c);
    c->callback([&, c, fn, name] {
      command = c->get_parent()->get_parent() ? c->get_parent()->get_name() + " " + name : name;
      job = fn;
    });
    return c;
  };

  auto* space = app.add_subcommand("space", "catalog and space data");
  space->require_subcommand(1);
  leaf(space, "list", "list catalog spaces", [&] { return space_list(o); });
  auto* info = leaf(space, "info", "summands and presets of a space", [&] { return space_info(o); });
  space_flags(info);

  auto* genus = app.add_subcommand("genus", "toric genus and characteristic numbers");
  genus->require_subcommand(1);
  auto* cls = leaf(genus, "class", "cobordism class over a1..an", [&] { return genus_class(o); });
  auto* sn = leaf(genus, "s", "characteristic numbers s_omega", [&] { return genus_s(o); });
  sn->add_option("--omega", o.omega, "multi-index such as (1,0,0,0,1,0), or 'all'");
  auto* chi = leaf(genus, "chi-y", "chi_y genus with per-point rows", [&] { return genus_chi_y(o); });
  chi->add_option("--ordering", o.ordering, "generic vector defining the positive roots");
  auto* sig = leaf(genus, "signature", "signature", [&] { return genus_number(o, true); });
  auto* td = leaf(genus, "todd", "Todd genus", [&] { return genus_number(o, false); });
  cls->add_option("--cutoff", o.cutoff, "series cutoff (default: the dimension)");
  for (auto* c : {cls, sn, chi, sig, td}) {
    space_flags(c);
    structure_flag(c);
  }

  auto* rig = app.add_subcommand("rigidity", "rigidity sums for a series f");
  rig->require_subcommand(1);
  auto* ev = leaf(rig, "eval", "evaluate the fixed-point sum", [&] { return rigidity_eval_cmd(o); });
  auto* cert = leaf(rig, "certify", "certify vanishing for odd f", [&] { return rigidity_certify_cmd(o); });
  auto* ind = leaf(rig, "independence", "compare structures", [&] { return rigidity_independence_cmd(o); });
  ind->add_option("--structure2", o.structure2, "second structure");
  for (auto* c : {ev, cert, ind}) {
    space_flags(c);
    structure_flag(c);
    c->add_option("--series", o.series, "rational function in u, or name:cutoff such as tanh:9");
    c->add_option("--point", o.point, "evaluation point, e.g. 3,2,1,0");
    c->add_option("--seed", o.seed, "seed for sample points");
    c->add_option("--samples", o.samples, "number of sample points")->check(CLI::Range(1, 1000));
  }

  auto* su = app.add_subcommand("su", "SU-structures");
  su->require_subcommand(1);
  space_flags(leaf(su, "find", "structures with vanishing first Chern class", [&] { return su_find(o); }));

  auto* fib = app.add_subcommand("fibration", "fibrations G/K -> G/H");
  fib->require_subcommand(1);
  auto* fc = leaf(fib, "check", "twisted product against the direct genus", [&] { return fibration_check(o); });
  space_flags(fc);
  fc->add_option("--base", o.base, "catalog base space")->required();
  fc->add_option("--base-structure", o.base_structure, "base sign string");
  fc->add_option("--fiber-structure", o.fiber_structure, "fiber sign string");
  fc->add_option("--cutoff", o.cutoff, "series cutoff");

  auto* hp = app.add_subcommand("hp", "quaternionic projective spaces");
  hp->require_subcommand(1);
  auto* hr = leaf(hp, "restricted", "restricted genus over HP^1", [&] { return hp_restricted(o); });
  hr->add_option("--which", o.which, "sp-flag or cp-odd")->check(CLI::IsMember({"sp-flag", "cp-odd"}));
  hr->add_option("--max-index", o.max_index, "largest i1, i2 in the table")->check(CLI::Range(0, 6));
  auto* ho = leaf(hp, "obstruction", "search for invariant structures on HP^n", [&] { return hp_obstruction(o); });
  ho->add_option("--n", o.n, "n in HP^n")->check(CLI::Range(0, 4));
  hr->add_option("--n", o.n, "n in HP^n");

  auto* rep = leaf(&app, "reproduce", "run the acceptance table", [&] { return reproduce(o); });
  rep->add_option("--section", o.sections, "topic name or criterion id (repeatable)");
  command.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (command.empty()) command = "reproduce";
  try {
    auto t0 = std::chrono::steady_clock::now();
    Output out = job();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(o, command, out, secs);
    return out.exit_code;
  } catch (const UsageError& e) {
    error_doc(o, command, "usage", e.what());
    return 1;
  } catch (const MathError& e) {
    error_doc(o, command, "math", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    error_doc(o, command, "usage", e.what());
    return 1;
  }
}
