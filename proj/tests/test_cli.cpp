#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "hsg/spacejson.hpp"
#include "json.hpp"
#include "reproduce.hpp"
#include "support.hpp"

using namespace hsg;
using json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HSGENUS_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, int expect_status = 0) {
  Run r = run(args + " --json");
  CHECK(r.status == expect_status);
  json doc = json::parse(r.out);
  CHECK(doc["schema"] == "hsgenus/1");
  return doc;
}

}  // namespace

TEST_CASE("catalog contents") {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  for (const char* n : {"S6", "U3-flag", "G42", "Sp2-flag", "CP3", "G2-flag"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(catalog_entry("HP2").notes == "no invariant structure (obstruction)");
  CHECK_THROWS_AS(catalog_entry("nope"), UsageError);
  for (const auto& e : catalog())
    for (const auto& p : e.presets) CHECK_FALSE(p.provenance.empty());
}

TEST_CASE("every catalog space round-trips through JSON") {
  for (const auto& e : catalog()) {
    auto s = catalog_space(e.name);
    auto back = space_from_json(space_to_json(s));
    CHECK(back.label() == s.label());
    CHECK(back.g().roots == s.g().roots);
    CHECK(back.h_root_vectors() == s.h_root_vectors());
    CHECK(space_to_json(back) == space_to_json(s));
  }
  CHECK_THROWS_AS(space_from_json("{\"label\": 3}"), UsageError);
  CHECK_THROWS_AS(space_from_json("not json"), UsageError);
}

TEST_CASE("structure references") {
  auto s = catalog_space("CP3");
  CHECK(resolve_structure(s, "CP3", "cp3-e11-minus").global == -1);
  CHECK(resolve_structure(s, "CP3", "").base.signs == "+");
  CHECK(resolve_structure(s, "CP3", "-").base.signs == "-");
  CHECK_THROWS_AS(resolve_structure(s, "CP3", "missing"), UsageError);
}

TEST_CASE("jobs with documented results") {
  auto sig = run_json("genus signature --space G42");
  CHECK(sig["result"]["value"] == "2");
  CHECK(sig["inputs"]["space"] == "G42");
  CHECK(sig.contains("seconds"));
  auto cls = run_json("genus class --space S6");
  CHECK(cls["result"]["class"] == "2*a1^3 - 6*a1*a2 + 6*a3");
  auto su = run_json("su find --space U4-flag");
  CHECK(su["result"] == json::array());
  auto list = run_json("space list");
  CHECK(list["result"].size() == catalog().size());
}

TEST_CASE("space files") {
  std::string path = "cli_test_space.json";
  {
    std::ofstream f(path);
    f << space_to_json(catalog_space("G42"));
  }
  auto doc = run_json("genus signature --space-file " + path);
  CHECK(doc["result"]["value"] == "2");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run("genus class --space nowhere").status == 1);
  CHECK(run("genus class").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("genus s --space G42 --omega '(1,1)'").status == 1);
  // Too few signs for the summands.
  CHECK(run("genus class --space U3-flag --structure +-").status == 1);
  // A point on a weight hyperplane is rejected as input.
  auto err = run_json("rigidity eval --space G42 --point 1,1,0,0", 1);
  CHECK(err["error"]["kind"] == "usage");
  CHECK(run("space list --csv").out.rfind("name,group,subgroup", 0) == 0);
}

TEST_CASE("reproduce filters by topic and id") {
  auto rows = repro::run_all({"hirzebruch"});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.topic == "hirzebruch");
  auto one = repro::run_all({"01"});
  REQUIRE(one.size() == 1);
  CHECK(one[0].pass);
  auto doc = run_json("reproduce --section hirzebruch");
  CHECK(doc["result"]["rows"].size() == 3);
  CHECK(doc["result"]["all_pass"] == true);
  CHECK(run("reproduce --section nothing").status == 1);
  // A failing row makes the whole run exit 3.
  CHECK(run("reproduce --section 12").status == 3);
}
