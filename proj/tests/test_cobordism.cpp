#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hsg/cobordism.hpp"
#include "support.hpp"

using namespace hsg;

namespace {

MultiPoly var(const FGLData& f, const std::string& name) { return MultiPoly::variable(f.ring, f.ring->require(name)); }

TruncatedSeries series(const FGLData& f, const MultiPoly& p) { return f.F.with_body(p); }

}  // namespace

TEST_CASE("formal group law, low degrees") {
  FGLData f1 = formal_group_law(1);
  CHECK(f1.F.body().truncate(TruncatedSeries::default_grading(*f1.ring), 1) == var(f1, "u") + var(f1, "v"));
  FGLData f2 = formal_group_law(2);
  MultiPoly uv = var(f2, "u") * var(f2, "v");
  auto deg2 = f2.F.body().homogeneous_part(TruncatedSeries::default_grading(*f2.ring), 2);
  CHECK(deg2 == uv * var(f2, "b1") * BigRational(-2));
}

TEST_CASE("power system") {
  FGLData f = formal_group_law(3);
  CHECK(power_system(0, f).body().is_zero());
  CHECK(power_system(1, f).body() == var(f, "u"));
  MultiPoly u = var(f, "u"), b1 = var(f, "b1");
  auto two = power_system(2, f).body().truncate(TruncatedSeries::default_grading(*f.ring), 2);
  CHECK(two == u * BigRational(2) - b1 * u * u * BigRational(2));
  // [2](u) = F(u, u) and [-1](u) is the inverse.
  std::vector<std::size_t> vu(f.ring->size());
  for (std::size_t i = 0; i < vu.size(); ++i) vu[i] = i;
  vu[f.v] = f.u;
  CHECK(power_system(2, f).body() == f.F.body().map_ring(f.ring, vu));
  CHECK(power_system(-1, f) == f.inverse);
  // [3] = F([2], u)
  CHECK(power_system(3, f) == f.F.compose(f.u, power_system(2, f)).compose(f.v, series(f, u)));
}

TEST_CASE("multi bracket") {
  FGLData f = formal_group_law(2);
  auto one = multi_bracket({1, 0}, f);
  CHECK(one.body() == MultiPoly::variable(one.ring(), one.ring()->require("u1")));
  auto both = multi_bracket({1, 1}, f);
  RingPtr r = both.ring();
  MultiPoly u1 = MultiPoly::variable(r, r->require("u1")), u2 = MultiPoly::variable(r, r->require("u2"));
  MultiPoly b1 = MultiPoly::variable(r, r->require("b1"));
  CHECK(both.body().truncate(TruncatedSeries::default_grading(*r), 2) == u1 + u2 - b1 * u1 * u2 * BigRational(2));
  CHECK(multi_bracket({2, -1, 3}, formal_group_law(4)) == multi_bracket_via_log({2, -1, 3}, formal_group_law(4)));
}

TEST_CASE("formal group law axioms to degree 5") {
  FGLData f = formal_group_law(5);
  TruncatedSeries zero = series(f, MultiPoly(f.ring));
  TruncatedSeries u = series(f, var(f, "u")), w = series(f, var(f, "w"));
  CHECK(f.F.compose(f.v, zero) == u);
  std::vector<std::size_t> swap(f.ring->size());
  for (std::size_t i = 0; i < swap.size(); ++i) swap[i] = i;
  std::swap(swap[f.u], swap[f.v]);
  CHECK(f.F.body().permute_vars(swap) == f.F.body());
  // F(F(u, v), w) = F(u, F(v, w))
  TruncatedSeries Fuw = f.F.compose(f.v, w);
  TruncatedSeries left = Fuw.compose(f.u, f.F);
  std::vector<std::size_t> shift(f.ring->size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i;
  shift[f.u] = f.v;
  shift[f.v] = f.w;
  TruncatedSeries Fvw = series(f, f.F.body().map_ring(f.ring, shift));
  CHECK(left == f.F.compose(f.v, Fvw));
  CHECK(f.F.compose(f.v, f.inverse) == zero);
  CHECK(f.exp.compose(f.u, f.log) == u);
}

TEST_CASE("basis change between a and b") {
  const int D = 4;
  RingPtr a = a_ring(D), b = b_ring(D);
  CHECK(basis_convert(MultiPoly::variable(a, 0), D, BasisDirection::AToB) == MultiPoly::variable(b, 0));
  CHECK(basis_convert(MultiPoly::constant(a, 1), D, BasisDirection::AToB) == MultiPoly::constant(b, 1));
  CHECK(basis_convert(MultiPoly::variable(a, 0, 2), D, BasisDirection::AToB) == MultiPoly::variable(b, 0, 2));
  // Round trip on every a_i and a mixed class.
  MultiPoly cls = MultiPoly::parse(a, "2*a1^3 - 6*a1*a2 + 6*a3 + a4");
  CHECK(basis_convert(basis_convert(cls, D, BasisDirection::AToB), D, BasisDirection::BToA) == cls);
}

TEST_CASE("basis map agrees with the reversion oracle") {
  // Put numbers in for b_n and compare x / g^{-1}(x) from the oracle with the a_i images.
  const int D = 5;
  auto images = basis_map(D, BasisDirection::AToB);
  oracle::Series g(D + 2, 0);
  g[1] = 1;
  QVec bvals;
  for (int n = 1; n <= D; ++n) {
    bvals.push_back(oracle::frac(n * n - 3, n + 1));
    g[n + 1] = bvals.back();
  }
  oracle::Series ginv = oracle::reversion(g, D + 1);
  auto expect = oracle::genus_values(ginv, D);
  for (int i = 0; i < D; ++i) CHECK(images[i].evaluate(bvals) == expect[i]);
}

TEST_CASE("genus specialization") {
  auto trivial = specialize_genus(named_series("trivial", 4), 3);
  CHECK(trivial == std::vector<BigRational>{0, 0, 0});
  auto todd = specialize_genus(named_series("todd", 4), 3);
  CHECK(todd == std::vector<BigRational>{BigRational(1, 2), BigRational(1, 12), 0});
  auto sig = specialize_genus(named_series("tanh", 4), 3);
  CHECK(sig == std::vector<BigRational>{0, BigRational(1, 3), 0});
  // Independent expansion of x / (1 - e^{-x}).
  oracle::Series e = oracle::exp_series(-1, 9);
  oracle::Series f(10, 0);
  for (int k = 1; k <= 9; ++k) f[k] = -e[k];
  CHECK(specialize_genus(named_series("todd", 9), 8) == oracle::genus_values(f, 8));
  UCoeffs bad{0, 2, 1};
  CHECK_THROWS_AS(specialize_genus(bad, 1), UsageError);
}
