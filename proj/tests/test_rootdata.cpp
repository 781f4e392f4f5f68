#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace hsg;
using testsupport::vec;

TEST_CASE("root systems of the classical groups") {
  GroupData u3 = build_group("U(3)");
  CHECK(u3.roots.size() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      QVec r = zero_vec(3);
      r[i] = 1;
      r[j] = -1;
      CHECK(u3.root_index(r) >= 0);
    }

  GroupData sp2 = build_group("Sp(2)");
  CHECK(sp2.roots.size() == 8);
  for (const auto& r : {vec({1, 1}), vec({1, -1}), vec({2, 0}), vec({0, 2}), vec({-1, -1}), vec({0, -2})})
    CHECK(sp2.root_index(r) >= 0);

  CHECK(build_group("U(1)").roots.empty());
  CHECK(build_group("G2").roots.size() == 12);
  CHECK(build_group("SO(5)").roots.size() == 8);
  CHECK(build_group("SU(3)").roots.size() == 6);
}

TEST_CASE("unsupported group descriptors are rejected") {
  CHECK_THROWS_AS(build_group("E9"), UsageError);
  CHECK_THROWS_AS(build_group("SU(1)"), UsageError);
  CHECK_THROWS_AS(build_group("U(0)"), UsageError);
}

TEST_CASE("Weyl group orders") {
  auto order = [](const std::string& spec) {
    auto g = std::make_shared<const GroupData>(build_group(spec));
    return WeylGroup::generate(g, g->simple).size();
  };
  CHECK(order("U(3)") == 6);
  CHECK(order("Sp(2)") == 8);
  CHECK(order("G2") == 12);
  CHECK(order("U(5)") == 120);
  CHECK(weyl_order(build_group("U(6)")) == 720);
  CHECK(weyl_order(build_group("Sp(3)")) == 48);
  CHECK(weyl_order(build_group("G2")) == 12);
}

TEST_CASE("Weyl enumeration cap") {
  auto g = std::make_shared<const GroupData>(build_group("U(6)"));
  CHECK_THROWS_WITH_AS(WeylGroup::generate(g, g->simple, 100), doctest::Contains("cap of 100"), UsageError);
}

TEST_CASE("coset representatives") {
  CHECK(testsupport::block_space("U4/T4", {1, 1, 1, 1}).coset_reps().size() == 24);
  CHECK(catalog_space("G42").coset_reps().size() == 6);
  CHECK(catalog_space("S6").coset_reps().size() == 2);
  // Each representative is the shortest element of its coset.
  auto s = catalog_space("G42");
  const auto& wg = s.weyl_g();
  for (std::size_t e = 0; e < wg.size(); ++e)
    CHECK(wg[e].length() >= wg[s.coset_reps()[s.coset_of(int(e))]].length());
}

TEST_CASE("complementary roots") {
  auto s6 = catalog_space("S6");
  REQUIRE(s6.n() == 3);
  for (const auto& r : {vec({1, 0}), vec({0, 1}), vec({-1, -1})}) {
    bool found = false;
    for (int i = 0; i < 3; ++i) found = found || s6.comp_root(i) == r || s6.comp_root(i) == vec_neg(r);
    CHECK(found);
  }
  auto u3 = catalog_space("U3-flag");
  CHECK(u3.n() == 3);
  auto hp1 = catalog_space("HP1");
  REQUIRE(hp1.n() == 2);
  CHECK(((hp1.comp_root(0) == vec({1, 1}) && hp1.comp_root(1) == vec({1, -1})) ||
         (hp1.comp_root(0) == vec({1, -1}) && hp1.comp_root(1) == vec({1, 1}))));
  CHECK_FALSE(hp1.has_invariant_structure());
}

TEST_CASE("subgroups must be root subsystems") {
  CHECK_THROWS_AS(HomogeneousSpace::from_vectors("bad", build_group("U(3)"), {vec({1, 1, 0})}), UsageError);
}

TEST_CASE("closed root systems") {
  GroupData u3 = build_group("U(3)");
  CHECK(is_closed_system({vec({1, -1, 0}), vec({0, 1, -1}), vec({1, 0, -1})}, u3));
  CHECK_FALSE(is_closed_system({vec({1, -1, 0}), vec({-1, 0, 1}), vec({0, 1, -1})}, u3));
  CHECK(is_closed_system({}, u3));
}

TEST_CASE("root signs under an ordering") {
  Ordering o{vec({4, 3, 2, 1})};
  CHECK(root_sign(vec({1, -1, 0, 0}), o) == 1);
  CHECK(root_sign(vec({-1, 1, 0, 0}), o) == -1);
  CHECK(root_sign(vec({0, 2, 0, 0}), o) == 1);
  CHECK_THROWS_AS(root_sign(vec({1, -1, 0, 0}), Ordering{vec({1, 1, 0, 0})}), UsageError);
  GroupData u4 = build_group("U(4)");
  CHECK(is_generic(default_ordering(u4), u4));
  CHECK(positive_roots(u4, o).size() == 6);
}
