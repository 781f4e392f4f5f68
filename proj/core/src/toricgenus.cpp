#include "hsg/toricgenus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hsg/divdiff.hpp"
#include "hsg/parallel.hpp"

namespace hsg {

namespace {

// Fixed-point data in the form sum_p coef_p * F(weights_p) / prod_{d in dirs_p} d.
struct Localization {
  RingPtr ring;
  std::vector<QVec> dirs;
  std::vector<MultiPoly> dir_polys;
  struct Point {
    BigRational coef;
    std::vector<int> dirs;
    std::vector<QVec> weights;
    std::vector<MultiPoly> lin;
  };
  std::vector<Point> points;

  void add(int sign, const std::vector<QVec>& weights) {
    Point p;
    p.coef = sign;
    for (const QVec& w : weights) {
      if (vec_is_zero(w)) throw MathError("zero weight at a fixed point");
      BigRational scale;
      QVec d = primitive_direction(w, &scale);
      p.coef /= scale;
      auto it = std::find(dirs.begin(), dirs.end(), d);
      int idx = int(it - dirs.begin());
      if (it == dirs.end()) {
        dirs.push_back(d);
        dir_polys.push_back(MultiPoly::linear(ring, d));
      }
      if (std::find(p.dirs.begin(), p.dirs.end(), idx) != p.dirs.end())
        throw MathError("proportional weights at one fixed point: " + to_string(w));
      p.dirs.push_back(idx);
      p.weights.push_back(w);
      p.lin.push_back(MultiPoly::linear(ring, w));
    }
    points.push_back(std::move(p));
  }

  MultiPoly other(const Point& p) const {
    MultiPoly r = MultiPoly::constant(ring, p.coef);
    std::vector<char> in(dirs.size(), 0);
    for (int d : p.dirs) in[d] = 1;
    for (std::size_t d = 0; d < dirs.size(); ++d)
      if (!in[d]) r = r * dir_polys[d];
    return r;
  }

  MultiPoly divide(MultiPoly num) const {
    for (const MultiPoly& d : dir_polys) {
      try {
        num = divide_linear(num, d);
      } catch (const MathError&) {
        throw MathError("localization sum has uncancelled pole along " + d.to_string());
      }
    }
    return num;
  }
};

Localization localization(const RingPtr& ring, const std::vector<FixedPointData>& fps) {
  Localization loc;
  loc.ring = ring;
  for (const auto& fp : fps) loc.add(fp.sign, fp.weights);
  return loc;
}

// 1 + sum_{i <= cutoff} a_i t^i lin^i over genus_ring(k, cutoff, true).
MultiPoly chern_dold_factor(const MultiPoly& lin, std::size_t k, int cutoff) {
  const RingPtr& ring = lin.ring();
  std::size_t t = k + std::size_t(cutoff);
  MultiPoly r = MultiPoly::constant(ring, 1);
  MultiPoly p = MultiPoly::constant(ring, 1);
  for (int i = 1; i <= cutoff; ++i) {
    p = p * lin;
    r += p * MultiPoly::variable(ring, k + std::size_t(i) - 1) * MultiPoly::variable(ring, t, i);
  }
  return r;
}

// Monomial symmetric function of the given values for the partition with
// omega[j-1] parts equal to j.
template <class V>
V monomial_symmetric(const std::vector<V>& vals, const Omega& omega, const V& one) {
  std::size_t parts = omega.size();
  std::vector<std::vector<V>> pw(vals.size());
  for (std::size_t s = 0; s < vals.size(); ++s) {
    pw[s].push_back(one);
    for (std::size_t j = 1; j <= parts; ++j) pw[s].push_back(pw[s].back() * vals[s]);
  }
  std::map<std::vector<int>, V> cur;
  cur.emplace(std::vector<int>(parts, 0), one);
  for (std::size_t s = 0; s < vals.size(); ++s) {
    std::map<std::vector<int>, V> next;
    for (const auto& [st, v] : cur) {
      auto put = [&](const std::vector<int>& key, const V& val) {
        auto it = next.find(key);
        if (it == next.end()) next.emplace(key, val);
        else it->second = it->second + val;
      };
      put(st, v);
      for (std::size_t j = 0; j < parts; ++j) {
        if (st[j] >= omega[j]) continue;
        std::vector<int> key = st;
        ++key[j];
        put(key, v * pw[s][j + 1]);
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(omega);
  return it == cur.end() ? one * V(0) : it->second;
}

MultiPoly monomial_symmetric(const std::vector<MultiPoly>& lins, const Omega& omega, const RingPtr& ring) {
  // The template needs V(0); wrap MultiPoly arithmetic explicitly.
  std::size_t parts = omega.size();
  std::vector<std::vector<MultiPoly>> pw(lins.size());
  for (std::size_t s = 0; s < lins.size(); ++s) {
    pw[s].push_back(MultiPoly::constant(ring, 1));
    for (std::size_t j = 1; j <= parts; ++j) pw[s].push_back(pw[s].back() * lins[s]);
  }
  std::map<std::vector<int>, MultiPoly> cur;
  cur.emplace(std::vector<int>(parts, 0), MultiPoly::constant(ring, 1));
  for (std::size_t s = 0; s < lins.size(); ++s) {
    std::map<std::vector<int>, MultiPoly> next;
    for (const auto& [st, v] : cur) {
      auto put = [&](const std::vector<int>& key, const MultiPoly& val) {
        auto it = next.find(key);
        if (it == next.end()) next.emplace(key, val);
        else it->second += val;
      };
      put(st, v);
      for (std::size_t j = 0; j < parts; ++j) {
        if (st[j] >= omega[j]) continue;
        std::vector<int> key = st;
        ++key[j];
        put(key, v * pw[s][j + 1]);
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(omega);
  return it == cur.end() ? MultiPoly(ring) : it->second;
}

std::vector<int> t_grading(const RingPtr& ring) { return ring->kind_mask({VarKind::T}); }

// The t^n part of a form over genus_ring(k, D, true), as a polynomial over a_ring(n).
MultiPoly extract_class(const MultiPoly& form, std::size_t k, int n) {
  MultiPoly top = form.homogeneous_part(t_grading(form.ring()), n);
  for (std::size_t i = 0; i < k; ++i)
    if (top.depends_on(i)) throw MathError("degree-n part of the genus is not x-free");
  RingPtr target = a_ring(n);
  MultiPoly out(target);
  for (const auto& [m, c] : top.terms()) {
    Mono e = MultiPoly::zero_mono();
    for (int i = 1; i <= n; ++i) e[std::size_t(i - 1)] = m[k + std::size_t(i) - 1];
    out.add_term(e, c);
  }
  return out;
}

MultiPoly genus_numerator(const Localization& loc, std::size_t k, int cutoff, int only_degree) {
  const RingPtr& ring = loc.ring;
  auto grading = t_grading(ring);
  return parallel_reduce(
      loc.points.size(), MultiPoly(ring),
      [&](std::size_t i) {
        const auto& p = loc.points[i];
        MultiPoly prod = MultiPoly::constant(ring, 1);
        for (const auto& l : p.lin) prod = prod.mul_truncated(chern_dold_factor(l, k, cutoff), grading, cutoff);
        if (only_degree >= 0) prod = prod.homogeneous_part(grading, only_degree);
        return prod * loc.other(p);
      },
      [](MultiPoly a, MultiPoly b) {
        a += b;
        return a;
      });
}

std::string structure_name(const StableStructure& c) { return c.name.empty() ? c.base.signs : c.name; }

}  // namespace

std::vector<Omega> omegas_of_weight(int l) {
  std::vector<Omega> out;
  if (l == 0) return {Omega{}};
  // Partitions in reverse lex order of parts, converted to multiplicities.
  std::vector<int> parts{l};
  while (true) {
    Omega o(std::size_t(l), 0);
    for (int p : parts) ++o[std::size_t(p - 1)];
    out.push_back(o);
    int rem = 0;
    while (!parts.empty() && parts.back() == 1) {
      ++rem;
      parts.pop_back();
    }
    if (parts.empty()) break;
    int v = --parts.back();
    ++rem;
    while (rem > v) {
      parts.push_back(v);
      rem -= v;
    }
    if (rem) parts.push_back(rem);
  }
  return out;
}

LocalizedSum localized_sum(int k, const std::vector<std::pair<int, std::vector<QVec>>>& points,
                           const Omega& omega) {
  RingPtr ring = x_ring(k);
  Localization loc;
  loc.ring = ring;
  for (const auto& [sign, w] : points) loc.add(sign, w);
  LocalizedSum r;
  r.numerator = MultiPoly(ring);
  for (const auto& p : loc.points) r.numerator += monomial_symmetric(p.lin, omega, ring) * loc.other(p);
  r.denominator = loc.dir_polys;
  return r;
}

void check_omega(const Omega& omega, int n) {
  long total = 0;
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (omega[j] < 0) throw UsageError("multi-index entries must be nonnegative");
    total += long(j + 1) * omega[j];
  }
  if (total != n)
    throw UsageError("multi-index " + omega_string(omega) + " has weight " + std::to_string(total) +
                     ", expected " + std::to_string(n));
}

std::string omega_string(const Omega& omega) {
  std::string s = "(";
  for (std::size_t j = 0; j < omega.size(); ++j) s += (j ? "," : "") + std::to_string(omega[j]);
  return s + ")";
}

Omega parse_omega(const std::string& text) {
  Omega out;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ' || ch == '[' || ch == ']') continue;
    if (ch == ',') {
      if (cur.empty()) throw UsageError("malformed multi-index '" + text + "'");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else {
      throw UsageError("malformed multi-index '" + text + "'");
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  if (out.empty()) throw UsageError("empty multi-index");
  return out;
}

GenusExpansion chern_dold_genus(const HomogeneousSpace& s, const StableStructure& c, int cutoff) {
  int n = s.n();
  if (cutoff < n) throw UsageError("cutoff must be at least the complex dimension " + std::to_string(n));
  std::size_t k = std::size_t(s.g().dim);
  GenusExpansion g;
  g.space = s.label();
  g.structure = structure_name(c);
  g.n = n;
  g.cutoff = cutoff;
  g.ring = genus_ring(int(k), cutoff, true);
  Localization loc = localization(g.ring, fixed_points(s, c));
  g.form = loc.divide(genus_numerator(loc, k, cutoff, -1));
  g.cls = extract_class(g.form, k, n);
  g.denominators = loc.dirs;
  return g;
}

GenusExpansion chern_dold_genus(const HomogeneousSpace& s, const InvariantStructure& j, int cutoff) {
  return chern_dold_genus(s, as_stable(s, j), cutoff);
}

MultiPoly cobordism_class(const HomogeneousSpace& s, const StableStructure& c) {
  int n = s.n();
  std::size_t k = std::size_t(s.g().dim);
  RingPtr ring = genus_ring(int(k), n, true);
  Localization loc = localization(ring, fixed_points(s, c));
  MultiPoly q = loc.divide(genus_numerator(loc, k, n, n));
  return extract_class(q, k, n);
}

CharNumber s_omega(const HomogeneousSpace& s, const StableStructure& c, const Omega& omega) {
  check_omega(omega, s.n());
  RingPtr ring = x_ring(s.g().dim);
  Localization loc = localization(ring, fixed_points(s, c));
  MultiPoly num = parallel_reduce(
      loc.points.size(), MultiPoly(ring),
      [&](std::size_t i) { return monomial_symmetric(loc.points[i].lin, omega, ring) * loc.other(loc.points[i]); },
      [](MultiPoly a, MultiPoly b) {
        a += b;
        return a;
      });
  MultiPoly q = loc.divide(num);
  if (!q.is_constant()) throw MathError("characteristic number sum is not constant");
  return {omega, q.constant_term()};
}

CharNumber s_omega(const HomogeneousSpace& s, const InvariantStructure& j, const Omega& omega) {
  return s_omega(s, as_stable(s, j), omega);
}

bool is_full_flag_type_a(const HomogeneousSpace& s) {
  const GroupData& g = s.g();
  return s.h_roots().empty() && g.label.rfind("U(", 0) == 0 && g.dim == g.rank &&
         s.n() == g.dim * (g.dim - 1) / 2;
}

CharNumber s_omega_divided_difference(const HomogeneousSpace& s, const InvariantStructure& j,
                                      const Omega& omega) {
  if (!is_full_flag_type_a(s)) throw UsageError("divided-difference route needs U(n)/T^n");
  check_omega(omega, s.n());
  std::size_t k = std::size_t(s.g().dim);
  RingPtr ring = x_ring(int(k));
  std::vector<int> eps = slot_signs(s, j);
  std::vector<MultiPoly> lins;
  int prod = 1;
  for (int slot = 0; slot < s.n(); ++slot) {
    lins.push_back(MultiPoly::linear(ring, vec_scale(s.comp_root(slot), eps[slot])));
    prod *= eps[slot];
  }
  MultiPoly l = divided_difference_L(monomial_symmetric(lins, omega, ring), 0, k);
  if (!l.is_constant()) throw MathError("divided difference of the orbit sum is not constant");
  return {omega, l.constant_term() / prod};
}

BigRational top_s(const HomogeneousSpace& s, const StableStructure& c) {
  Omega omega(std::size_t(s.n()), 0);
  omega.back() = 1;
  return s_omega(s, c, omega).value;
}

BigRational top_s(const HomogeneousSpace& s, const InvariantStructure& j) { return top_s(s, as_stable(s, j)); }

BigRational s_omega_at(const HomogeneousSpace& s, const StableStructure& c, const Omega& omega,
                       const QVec& x) {
  check_omega(omega, s.n());
  BigRational total = 0;
  for (const auto& fp : fixed_points(s, c)) {
    std::vector<BigRational> vals;
    BigRational den = 1;
    for (const auto& w : fp.weights) {
      BigRational v = vec_dot(w, x);
      if (v == 0) throw UsageError("evaluation point lies on the hyperplane of weight " + to_string(w));
      vals.push_back(v);
      den *= v;
    }
    total += fp.sign * monomial_symmetric<BigRational>(vals, omega, BigRational(1)) / den;
  }
  return total;
}

HomogeneousSpace fiber_space(const HomogeneousSpace& gk, const HomogeneousSpace& gh) {
  if (gk.g().roots != gh.g().roots) throw UsageError("fibration spaces must share the group G");
  GroupPtr h = gh.h_group();
  std::vector<int> k;
  for (const QVec& r : gk.h_root_vectors()) {
    int idx = h->root_index(r);
    if (idx < 0) throw UsageError("K is not contained in H: root " + to_string(r));
    k.push_back(idx);
  }
  return HomogeneousSpace(gh.label() + "-fiber", h, k);
}

InvariantStructure combined_structure(const HomogeneousSpace& gk, const HomogeneousSpace& gh,
                                      const InvariantStructure& fiber, const InvariantStructure& base) {
  HomogeneousSpace f = fiber_space(gk, gh);
  std::vector<QVec> roots = structure_roots(gh, base);
  for (const QVec& r : structure_roots(f, fiber)) roots.push_back(r);
  return structure_from_roots(gk, roots);
}

void check_base_invariance(const HomogeneousSpace& gh, const InvariantStructure& base) {
  std::vector<int> roots = structure_root_indices(gh, base);
  std::vector<char> in(gh.g().roots.size(), 0);
  for (int r : roots) in[r] = 1;
  for (int a : gh.h_simple())
    for (int r : roots)
      if (!in[gh.g().reflection_perm[a][r]])
        throw UsageError("base structure roots are not invariant under the Weyl group of H "
                         "(required for the fibration structure)");
}

MultiPoly form_product(const MultiPoly& a, const MultiPoly& b, int cutoff) {
  return a.mul_truncated(b, t_grading(a.ring()), cutoff);
}

GenusExpansion twisted_product(const HomogeneousSpace& gk, const HomogeneousSpace& gh,
                               const InvariantStructure& fiber, const InvariantStructure& base,
                               int cutoff) {
  check_base_invariance(gh, base);
  HomogeneousSpace f = fiber_space(gk, gh);
  int n = gk.n();
  if (cutoff < n) throw UsageError("cutoff must be at least the complex dimension " + std::to_string(n));
  GenusExpansion fib = chern_dold_genus(f, fiber, cutoff);
  std::size_t k = std::size_t(gk.g().dim);
  GenusExpansion g;
  g.space = gk.label();
  g.structure = combined_structure(gk, gh, fiber, base).signs;
  g.n = n;
  g.cutoff = cutoff;
  g.ring = fib.ring;
  auto fps = fixed_points(gh, base);
  Localization loc = localization(g.ring, fps);
  auto grading = t_grading(g.ring);
  MultiPoly num = parallel_reduce(
      loc.points.size(), MultiPoly(g.ring),
      [&](std::size_t i) {
        const auto& p = loc.points[i];
        MultiPoly prod = fib.form.linear_substitute(gh.weyl_g().matrix(std::size_t(fps[i].rep)));
        for (const auto& l : p.lin) prod = prod.mul_truncated(chern_dold_factor(l, k, cutoff), grading, cutoff);
        return prod * loc.other(p);
      },
      [](MultiPoly a, MultiPoly b) {
        a += b;
        return a;
      });
  g.form = loc.divide(num);
  g.cls = extract_class(g.form, k, n);
  g.denominators = loc.dirs;
  return g;
}

std::vector<MultiPoly> restricted_components(const HomogeneousSpace& gk, const HomogeneousSpace& gh,
                                             const StableStructure& c, int cutoff) {
  if (gk.g().roots != gh.g().roots) throw UsageError("restricted genus spaces must share the group G");
  std::size_t k = std::size_t(gk.g().dim);
  RingPtr ring = genus_ring(int(k), cutoff, true);
  std::vector<int> fiber_slots;
  for (int slot = 0; slot < gk.n(); ++slot)
    if (gh.is_h_root(gk.comp()[slot])) fiber_slots.push_back(slot);
  std::size_t cosets = gh.coset_reps().size();
  std::vector<Localization> locs(cosets);
  for (auto& l : locs) l.ring = ring;
  for (const auto& fp : fixed_points(gk, c)) {
    int idx = gh.weyl_g().find(gk.weyl_g()[std::size_t(fp.rep)].perm);
    int coset = gh.coset_of(idx);
    std::vector<QVec> w;
    for (int slot : fiber_slots) w.push_back(fp.weights[std::size_t(slot)]);
    locs[std::size_t(coset)].add(fp.sign, w);
  }
  std::vector<MultiPoly> out;
  for (const auto& loc : locs) out.push_back(loc.divide(genus_numerator(loc, k, cutoff, -1)));
  return out;
}

}  // namespace hsg
