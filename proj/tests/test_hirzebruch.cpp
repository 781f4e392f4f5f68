#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hsg/hirzebruch.hpp"
#include "hsg/toricgenus.hpp"
#include "support.hpp"

using namespace hsg;
using testsupport::vec;

namespace {

StableStructure preset(const std::string& name) {
  return preset_structure(catalog_space("CP3"), find_preset(catalog_entry("CP3"), name));
}

StableStructure standard(const HomogeneousSpace& s) { return as_stable(s, standard_structure(s)); }

}  // namespace

TEST_CASE("chi_y and Todd genus of CP3") {
  auto s = catalog_space("CP3");
  CHECK(to_string(chi_y(s, preset("cp3-standard"))) == "1 - y + y^2 - y^3");
  CHECK(to_string(chi_y(s, preset("cp3-e11-minus"))) == "-y + y^2");
  CHECK(to_string(chi_y(s, preset("cp3-e30-e11-minus"))) == "0");
  CHECK(todd(s, preset("cp3-standard")) == 1);
  CHECK(todd(s, preset("cp3-e11-minus")) == 0);
  CHECK(todd(s, preset("cp3-e30-e11-minus")) == 0);
}

TEST_CASE("chi_y rows and index") {
  auto s = catalog_space("CP3");
  Ordering ord = default_ordering(s.g());
  std::vector<ChiYRow> rows;
  chi_y(s, standard(s), ord, &rows);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].ind == 0);
  auto fp = fixed_points(s, standard(s));
  CHECK(index(s, fp[0], ord) == 0);
  CHECK_THROWS_AS(chi_y(s, standard(s), Ordering{vec({1, 1, 0, 0})}), UsageError);
}

TEST_CASE("chi_y against the index oracle") {
  for (const auto& name : {"CP2", "CP3", "G42", "U3-flag", "Sp2-flag", "G2-flag", "S6"}) {
    auto s = catalog_space(name);
    Ordering ord = default_ordering(s.g());
    for (const auto& j : enumerate_structures(s)) {
      auto c = as_stable(s, j);
      auto expect = oracle::chi_y(testsupport::points_of(s, c), testsupport::to_oracle(ord.v));
      auto got = chi_y(s, c, ord);
      while (!got.empty() && got.back() == 0) got.pop_back();
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
    }
  }
}

TEST_CASE("signatures") {
  auto g42 = catalog_space("G42");
  auto g622 = catalog_space("G622");
  CHECK(signature(g42, standard(g42)) == 2);
  CHECK(signature(g622, standard(g622)) == 6);
  for (const auto& name : {"CP1", "U3-flag", "U4-flag"}) {
    auto s = catalog_space(name);
    for (const auto& j : enumerate_structures(s)) CHECK(signature(s, as_stable(s, j)) == 0);
  }
  auto cp2 = catalog_space("CP2");
  CHECK(signature(cp2, standard(cp2)) == 1);
}

TEST_CASE("Todd genus on U(3)/T^3") {
  auto s = catalog_space("U3-flag");
  for (const auto& j : enumerate_structures(s)) CHECK(todd(s, as_stable(s, j)) == (is_integrable(s, j) ? 1 : 0));
  CHECK(todd(s, as_stable(s, InvariantStructure{"+-+"})) == 0);
}

TEST_CASE("rigidity sums") {
  auto f = parse_rigidity_series("u/(1+u^2)");
  auto g42 = catalog_space("G42");
  CHECK(rigidity_eval(g42, standard(g42), f, vec({3, 2, 1, 0})) == 80);
  CHECK(rigidity_eval(g42, standard(g42), f, vec({4, 2, 1, 0})) == 140);
  auto of = [](const BigRational& z) { return BigRational(z / (1 + z * z)); };
  CHECK(oracle::rigidity(oracle::grassmannian(4, 2), of, {3, 2, 1, 0}) == 80);
  auto u3 = catalog_space("U3-flag");
  CHECK(rigidity_eval(u3, standard(u3), f, vec({3, 1, 0})) == 0);
  CHECK_THROWS_WITH_AS(rigidity_eval(g42, standard(g42), f, vec({1, 1, 0, 0})), doctest::Contains("hyperplane"), UsageError);
  CHECK_THROWS_AS(rigidity_eval(g42, standard(g42), f, vec({1, 0})), UsageError);
}

TEST_CASE("series parsing") {
  auto named = parse_rigidity_series("tanh:5");
  CHECK(named.truncated);
  CHECK(named.f.is_normalized());
  CHECK(parse_rigidity_series("u/(1+u^2/3)").f.is_odd());
  CHECK_THROWS_AS(check_normalized(parse_rigidity_series("2*u")), UsageError);
  CHECK_THROWS_AS(parse_rigidity_series("nonsense:3"), UsageError);
}

TEST_CASE("odd-series certification") {
  auto f = parse_rigidity_series("u/(1+u^2)");
  for (const auto& name : {"U3-flag", "U4-flag", "S6"}) {
    auto s = catalog_space(name);
    auto v = rigidity_certify_odd(s, standard(s), f, 3, 5);
    CHECK(v.verdict == "certified zero");
    CHECK(v.pairing_found);
    CHECK(v.samples_zero);
    CHECK(rigidity_symbolic(s, standard(s), f).zero);
  }
  // U(6)/U(2)^3: even block size, no cancelling pairing and a non-constant sum.
  auto g622 = catalog_space("G622");
  auto v = rigidity_certify_odd(g622, standard(g622), f, 3, 5);
  CHECK(v.verdict == "not covered");
  CHECK_FALSE(v.samples_constant);
  CHECK_THROWS_AS(rigidity_certify_odd(g622, standard(g622), parse_rigidity_series("u/(1+u)"), 3), UsageError);
}

TEST_CASE("symbolic sum on U(3)/T^3 for f = u/(1+u^3)") {
  // Not odd: the sum is not constant for any structure.
  auto f = parse_rigidity_series("u/(1+u^3)");
  auto s = catalog_space("U3-flag");
  for (const auto& j : enumerate_structures(s)) CHECK_FALSE(rigidity_symbolic(s, as_stable(s, j), f).constant);
}

TEST_CASE("structure independence up to orientation") {
  auto s = catalog_space("CP3");
  for (const char* series : {"u/(1+u^2)", "u/(1+u^2/3)"}) {
    auto f = parse_rigidity_series(series);
    auto pts = sample_points(s, f, 5, 3);
    auto a = preset("cp3-standard"), b = preset("cp3-e11-minus");
    auto r = structure_independence_check(s, a, b, f, pts);
    REQUIRE(r.values.size() == 5);
    for (const auto& [x, y] : r.values) CHECK(x == y * b.global);
  }
}

TEST_CASE("sample points are seeded and generic") {
  auto s = catalog_space("G42");
  auto f = parse_rigidity_series("u/(1+u^2)");
  auto a = sample_points(s, f, 6, 99), b = sample_points(s, f, 6, 99);
  CHECK(a == b);
  for (const auto& u : a) {
    for (const auto& r : s.g().roots) {
      BigRational z = vec_dot(r, u);
      CHECK(z != 0);
      CHECK(1 + z * z != 0);
    }
  }
}

TEST_CASE("genus values of classes") {
  auto s6 = chern_dold_genus(catalog_space("S6"), standard_structure(catalog_space("S6")), 3).cls;
  CHECK(genus_of_class(s6, named_series("todd", 4), 3) == 0);
  CHECK(genus_of_class(s6, named_series("tanh", 4), 3) == 0);
  auto cp3 = catalog_space("CP3");
  CHECK(genus_of_class(cobordism_class(cp3, standard(cp3)), named_series("todd", 4), 3) == 1);
}

TEST_CASE("property: tanh genus equals the signature") {
  for (const auto& name : {"CP2", "G42", "U3-flag", "U4-T2U2", "Sp2-flag", "G2-flag"}) {
    auto s = catalog_space(name);
    for (const auto& j : enumerate_structures(s)) {
      auto c = as_stable(s, j);
      CHECK(genus_of_class(cobordism_class(s, c), named_series("tanh", s.n() + 1), s.n()) ==
            BigRational(signature(s, c)));
    }
  }
}

TEST_CASE("property: chi_y does not depend on the ordering") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const auto& name : {"CP3", "G42", "U4-flag", "Sp2-flag", "G2-flag"}) {
    auto s = catalog_space(name);
    for (int trial = 0; trial < 3; ++trial) {
      Ordering o;
      do {
        o.v.clear();
        for (int i = 0; i < s.g().dim; ++i) o.v.push_back(d(rng));
      } while (!is_generic(o, s.g()));
      for (const auto& j : enumerate_structures(s)) {
        auto c = as_stable(s, j);
        CHECK(chi_y(s, c, o) == chi_y(s, c));
      }
    }
  }
}
