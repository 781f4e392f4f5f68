#include "hsg/cobordism.hpp"

namespace hsg {

static RingPtr fgl_ring(int D) {
  std::vector<Var> v{{"u", 1, VarKind::U}, {"v", 1, VarKind::U}, {"w", 1, VarKind::U}};
  for (int i = 1; i <= D; ++i) v.push_back({"b" + std::to_string(i), i, VarKind::B});
  return make_ring(std::move(v));
}

TruncatedSeries transport(const TruncatedSeries& s, const FGLData& fgl, const RingPtr& target,
                          std::size_t var) {
  std::vector<std::size_t> map(fgl.ring->size(), target->size());
  map[fgl.u] = var;
  for (int i = 1; i <= fgl.D; ++i) map[3 + i - 1] = target->require("b" + std::to_string(i));
  MultiPoly body = s.body().map_ring(target, map);
  return TruncatedSeries(body, s.cutoff());
}

FGLData formal_group_law(int D) {
  if (D < 1) throw UsageError("formal group law cutoff must be at least 1");
  FGLData f;
  f.D = D;
  f.ring = fgl_ring(D);
  MultiPoly g = MultiPoly::variable(f.ring, f.u);
  for (int n = 1; n + 1 <= D; ++n)
    g += MultiPoly::variable(f.ring, 3 + n - 1) * MultiPoly::variable(f.ring, f.u, n + 1);
  f.log = TruncatedSeries(g, D);
  f.exp = series_reversion(f.log, f.u);
  MultiPoly gv = g.permute_vars([&] {
    std::vector<std::size_t> p(f.ring->size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::swap(p[f.u], p[f.v]);
    return p;
  }());
  f.F = f.exp.compose(f.u, f.log + TruncatedSeries(gv, D));
  f.inverse = f.exp.compose(f.u, -f.log);
  return f;
}

TruncatedSeries power_system(int n, const FGLData& fgl) {
  TruncatedSeries u(MultiPoly::variable(fgl.ring, fgl.u), fgl.D);
  TruncatedSeries acc(MultiPoly(fgl.ring), fgl.D);
  for (int i = 0; i < std::abs(n); ++i) acc = fgl.F.compose(fgl.v, acc);  // F(u, [i](u))
  if (n < 0) acc = fgl.inverse.compose(fgl.u, acc);
  return acc;
}

static RingPtr bracket_ring(std::size_t k, int D) {
  std::vector<Var> v;
  for (std::size_t i = 1; i <= k; ++i) v.push_back({"u" + std::to_string(i), 1, VarKind::U});
  for (int i = 1; i <= D; ++i) v.push_back({"b" + std::to_string(i), i, VarKind::B});
  return make_ring(std::move(v));
}

TruncatedSeries multi_bracket(const std::vector<int>& n, const FGLData& fgl) {
  RingPtr ring = bracket_ring(n.size(), fgl.D);
  // Two-variable law over the new ring, with a spare slot for the running sum.
  TruncatedSeries acc(MultiPoly(ring), fgl.D);
  for (std::size_t q = 0; q < n.size(); ++q) {
    TruncatedSeries term = transport(power_system(n[q], fgl), fgl, ring, q);
    if (acc.body().is_zero()) {
      acc = term;
      continue;
    }
    // F(term, acc): substitute into F written over (u, v) -> compose twice via a fresh copy.
    std::vector<std::size_t> map(fgl.ring->size(), ring->size());
    std::vector<Var> vars = ring->vars();
    vars.push_back({"_p", 1, VarKind::U});
    vars.push_back({"_q", 1, VarKind::U});
    RingPtr ext = make_ring(vars);
    std::size_t p = ring->size(), qq = ring->size() + 1;
    map[fgl.u] = p;
    map[fgl.v] = qq;
    for (int i = 1; i <= fgl.D; ++i) map[3 + i - 1] = ext->require("b" + std::to_string(i));
    TruncatedSeries Fx(fgl.F.body().map_ring(ext, map), fgl.D);
    std::vector<std::size_t> emb(ring->size());
    for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i;
    TruncatedSeries termx(term.body().map_ring(ext, emb), fgl.D);
    TruncatedSeries accx(acc.body().map_ring(ext, emb), fgl.D);
    TruncatedSeries r = Fx.compose(p, termx).compose(qq, accx);
    std::vector<std::size_t> back(ext->size(), ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) back[i] = i;
    acc = TruncatedSeries(r.body().map_ring(ring, back), fgl.D);
  }
  return acc;
}

TruncatedSeries multi_bracket_via_log(const std::vector<int>& n, const FGLData& fgl) {
  RingPtr ring = bracket_ring(n.size(), fgl.D);
  TruncatedSeries sum(MultiPoly(ring), fgl.D);
  for (std::size_t q = 0; q < n.size(); ++q) sum = sum + transport(fgl.log, fgl, ring, q) * BigRational(n[q]);
  if (n.empty()) return sum;
  return transport(fgl.exp, fgl, ring, 0).compose(0, sum);
}

std::vector<MultiPoly> basis_map(int D, BasisDirection dir) {
  if (D < 1) throw UsageError("basis conversion cutoff must be at least 1");
  // Ring: x, a1..aD, b1..bD; x/g^{-1}(x) needs g^{-1} to degree D+1.
  std::vector<Var> vars{{"x", 1, VarKind::X}};
  for (int i = 1; i <= D; ++i) vars.push_back({"a" + std::to_string(i), i, VarKind::A});
  for (int i = 1; i <= D; ++i) vars.push_back({"b" + std::to_string(i), i, VarKind::B});
  RingPtr ring = make_ring(vars);
  std::size_t x = 0;
  auto a = [&](int i) { return std::size_t(i); };
  auto b = [&](int i) { return std::size_t(D + i); };
  RingPtr target = dir == BasisDirection::AToB ? b_ring(D) : a_ring(D);
  std::vector<std::size_t> out_map(ring->size(), target->size());
  for (int i = 1; i <= D; ++i) out_map[dir == BasisDirection::AToB ? b(i) : a(i)] = std::size_t(i - 1);
  std::vector<MultiPoly> result;
  if (dir == BasisDirection::AToB) {
    MultiPoly g = MultiPoly::variable(ring, x);
    for (int n = 1; n <= D; ++n) g += MultiPoly::variable(ring, b(n)) * MultiPoly::variable(ring, x, n + 1);
    TruncatedSeries ginv = series_reversion(TruncatedSeries(g, D + 1), x);
    // g^{-1}(x)/x, then invert.
    MultiPoly shifted(ring);
    for (const auto& [m, c] : ginv.body().terms()) {
      Mono k = m;
      k[x] = static_cast<std::uint8_t>(k[x] - 1);
      shifted.add_term(k, c);
    }
    TruncatedSeries inv = series_invert(TruncatedSeries(shifted, D));
    for (int i = 1; i <= D; ++i) result.push_back(inv.body().coefficient_of(x, i).map_ring(target, out_map));
  } else {
    // x/f(x) with f = 1 + sum a_i x^i, then its reversion is g.
    MultiPoly f = MultiPoly::constant(ring, 1);
    for (int i = 1; i <= D; ++i) f += MultiPoly::variable(ring, a(i)) * MultiPoly::variable(ring, x, i);
    TruncatedSeries finv = series_invert(TruncatedSeries(f, D));
    TruncatedSeries ginv(finv.body() * MultiPoly::variable(ring, x), D + 1);
    TruncatedSeries g = series_reversion(ginv, x);
    for (int n = 1; n <= D; ++n) result.push_back(g.body().coefficient_of(x, n + 1).map_ring(target, out_map));
  }
  return result;
}

MultiPoly basis_convert(const MultiPoly& cls, int D, BasisDirection dir) {
  RingPtr src = dir == BasisDirection::AToB ? a_ring(D) : b_ring(D);
  RingPtr target = dir == BasisDirection::AToB ? b_ring(D) : a_ring(D);
  // Accept classes over any ring whose variables are named a_i (or b_i).
  std::vector<std::size_t> map(cls.ring()->size(), src->size());
  for (std::size_t i = 0; i < cls.ring()->size(); ++i) {
    auto k = src->index_of(cls.ring()->var(i).name);
    if (k) map[i] = *k;
    else if (cls.depends_on(i))
      throw UsageError("basis_convert: class depends on " + cls.ring()->var(i).name);
  }
  MultiPoly p = cls.map_ring(src, map);
  return compose_vars(p, target, basis_map(D, dir));
}

std::vector<BigRational> specialize_genus(const UCoeffs& f, int D) {
  if (f.size() < 2 || f[0] != 0 || f[1] != 1)
    throw UsageError("genus series must be normalized: f(0) = 0 and f'(0) = 1");
  UCoeffs shifted(D + 1, BigRational(0));
  for (int i = 0; i <= D && i + 1 < int(f.size()); ++i) shifted[i] = f[i + 1];
  UCoeffs inv = ucoeffs_invert(shifted, D);
  return std::vector<BigRational>(inv.begin() + 1, inv.end());
}

}  // namespace hsg
