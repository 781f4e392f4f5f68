#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hsg/hirzebruch.hpp"
#include "support.hpp"

using namespace hsg;
using testsupport::vec;

namespace {

// Structure on U(n)/T^n with sign eps(i, j) on x_i - x_j, i < j (0-based).
template <class Eps>
InvariantStructure flag_structure(const HomogeneousSpace& s, int n, Eps eps) {
  std::vector<QVec> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec r = zero_vec(std::size_t(n));
      r[i] = eps(i, j);
      r[j] = -eps(i, j);
      roots.push_back(r);
    }
  return structure_from_roots(s, roots);
}

int slot_of_root(const HomogeneousSpace& s, const QVec& r) {
  for (int i = 0; i < s.n(); ++i)
    if (s.comp_root(i) == r || s.comp_root(i) == vec_neg(r)) return i;
  return -1;
}

}  // namespace

TEST_CASE("isotropy summands") {
  CHECK(catalog_space("U4-flag").summands().size() == 6);
  CHECK(catalog_space("U5-flag").summands().size() == 10);
  CHECK(catalog_space("G622").summands().size() == 3);
  CHECK(catalog_space("U4-T2U2").summands().size() == 3);
  CHECK(catalog_space("G42").summands().size() == 1);
  CHECK(catalog_space("Sp2-flag").summands().size() == 4);
  CHECK(catalog_space("S6").summands().size() == 1);
  CHECK_FALSE(catalog_space("HP2").has_invariant_structure());
}

TEST_CASE("structure enumeration") {
  CHECK(enumerate_structures(catalog_space("CP1")).size() == 2);
  CHECK(enumerate_structures(catalog_space("G42")).size() == 2);
  CHECK(enumerate_structures(catalog_space("U3-flag")).size() == 8);
  CHECK(enumerate_structures(catalog_space("G622")).size() == 8);
  CHECK(enumerate_structures(catalog_space("Sp2-flag")).size() == 16);
  CHECK_THROWS_WITH_AS(enumerate_structures(catalog_space("U5-flag"), 5), doctest::Contains("10"), UsageError);
  CHECK(enumerate_structures(catalog_space("HP1")).empty());
}

TEST_CASE("structure validation") {
  auto s = catalog_space("U3-flag");
  CHECK_THROWS_AS(validate(s, InvariantStructure{"++"}), UsageError);
  CHECK_THROWS_AS(validate(s, InvariantStructure{"+x+"}), UsageError);
  StableStructure c = as_stable(s, standard_structure(s));
  c.global = 0;
  CHECK_THROWS_AS(validate(s, c), UsageError);
  c.global = 1;
  c.eps = {{1, 1, 1}};
  CHECK_THROWS_AS(validate(s, c), UsageError);
  for (const auto& e : catalog()) {
    auto sp = catalog_space(e.name);
    for (const auto& p : e.presets) CHECK_NOTHROW(validate(sp, preset_structure(sp, p)));
  }
}

TEST_CASE("first Chern class") {
  auto u3 = catalog_space("U3-flag");
  auto alt = flag_structure(u3, 3, [](int i, int j) { return ((i + 1) + (j + 1) + 1) % 2 ? -1 : 1; });
  CHECK(vec_is_zero(first_chern(u3, alt)));
  CHECK(first_chern(u3, standard_structure(u3)) == vec({2, 0, -2}));
  auto s6 = catalog_space("S6");
  for (const auto& j : enumerate_structures(s6)) CHECK(vec_is_zero(first_chern(s6, j)));
}

TEST_CASE("SU-structures") {
  CHECK(find_su_structures(catalog_space("U4-flag")).empty());
  CHECK(find_su_structures(catalog_space("U4-T2U2")).empty());
  CHECK(find_su_structures(catalog_space("CP1")).empty());
  auto u5 = catalog_space("U5-flag");
  auto alt = flag_structure(u5, 5, [](int i, int j) { return ((i + 1) + (j + 1) + 1) % 2 ? -1 : 1; });
  bool found = false;
  for (const auto& j : find_su_structures(u5)) found = found || j.signs == alt.signs;
  CHECK(found);
  CHECK(find_su_structures(u5, kDefaultStructureCap, 1).size() == 1);
}

TEST_CASE("divisibility of c1") {
  auto u3 = catalog_space("U3-flag");
  CHECK(c1_divisibility(u3, standard_structure(u3), 2));
  CHECK_FALSE(c1_divisibility(u3, standard_structure(u3), 3));
  for (long N : {1, 2, 5, 97}) CHECK(c1_divisibility(u3, InvariantStructure{"+-+"}, N));
  CHECK_THROWS_AS(c1_divisibility(u3, standard_structure(u3), 0), UsageError);
}

TEST_CASE("integrability") {
  auto u3 = catalog_space("U3-flag");
  CHECK(is_integrable(u3, standard_structure(u3)));
  InvariantStructure su = structure_from_roots(u3, {vec({1, -1, 0}), vec({-1, 0, 1}), vec({0, 1, -1})});
  CHECK_FALSE(is_integrable(u3, su));
  auto s6 = catalog_space("S6");
  for (const auto& j : enumerate_structures(s6)) CHECK_FALSE(is_integrable(s6, j));
  int count = 0;
  for (const auto& j : enumerate_structures(u3)) count += is_integrable(u3, j);
  CHECK(count == 6);
}

TEST_CASE("pairings by reflections") {
  auto u3 = catalog_space("U3-flag");
  int slot = slot_of_root(u3, vec({1, -1, 0}));
  for (const auto& j : enumerate_structures(u3)) {
    auto rep = verify_pairing(u3, as_stable(u3, j), slot);
    CHECK(rep.involution);
    CHECK(rep.all_odd());
  }
  auto cp2 = catalog_space("CP2");
  auto rep = verify_pairing(cp2, as_stable(cp2, standard_structure(cp2)), slot_of_root(cp2, vec({1, -1, 0})));
  bool pair = false;
  for (const auto& r : rep.rows)
    pair = pair || (r.point_label == "123" && r.partner_label == "213") ||
           (r.point_label == "213" && r.partner_label == "123");
  CHECK(pair);
  CHECK(rep.all_negated_present());
  auto g42 = catalog_space("G42");
  auto rg = verify_pairing(g42, as_stable(g42, standard_structure(g42)), slot_of_root(g42, vec({1, 0, -1, 0})));
  CHECK(rg.rows.size() == 6);
  CHECK(rg.all_moved_ok());
  CHECK_THROWS_AS(verify_pairing(g42, as_stable(g42, standard_structure(g42)), 99), UsageError);
}

TEST_CASE("fixed points and stable structures") {
  auto cp3 = catalog_space("CP3");
  const auto& e = catalog_entry("CP3");
  auto c = preset_structure(cp3, find_preset(e, "cp3-e11-minus"));
  auto fps = fixed_points(cp3, c);
  REQUIRE(fps.size() == 4);
  CHECK(fps[1].eps[0] == -1);
  // Global sign -1 times one flipped weight.
  CHECK(fps[1].sign == 1);
  CHECK(fps[0].sign == -1);
  auto conj = conjugate(cp3, c);
  auto cf = fixed_points(cp3, conj);
  for (std::size_t p = 0; p < fps.size(); ++p)
    for (int i = 0; i < cp3.n(); ++i) CHECK(cf[p].weights[i] == vec_neg(fps[p].weights[i]));
}

TEST_CASE("property: conjugation reverses c1 and complements the index") {
  for (const auto& name : {"U3-flag", "U4-flag", "G42", "Sp2-flag", "G2-flag", "U4-T2U2"}) {
    auto s = catalog_space(name);
    Ordering ord = default_ordering(s.g());
    for (const auto& j : enumerate_structures(s)) {
      CHECK(first_chern(s, conjugate(j)) == vec_neg(first_chern(s, j)));
      auto a = fixed_points(s, j), b = fixed_points(s, conjugate(j));
      for (std::size_t p = 0; p < a.size(); ++p) CHECK(index(s, b[p], ord) == s.n() - index(s, a[p], ord));
    }
  }
}
