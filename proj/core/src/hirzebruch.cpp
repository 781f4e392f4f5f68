#include "hsg/hirzebruch.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "hsg/cobordism.hpp"

namespace hsg {

std::string to_string(const YPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BigInt a = abs(p[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
    std::string coef = (a == 1 && i > 0) ? "" : a.get_str() + (i > 0 ? "*" : "");
    if (out.empty()) out = (p[i] < 0 ? "-" : "") + coef + mono;
    else out += (p[i] < 0 ? " - " : " + ") + coef + mono;
  }
  return out.empty() ? "0" : out;
}

int index(const HomogeneousSpace& s, const FixedPointData& fp, const Ordering& ord) {
  if (!is_generic(ord, s.g())) throw UsageError("ordering " + to_string(ord.v) + " is not generic");
  int direct = 0;
  for (const auto& w : fp.weights)
    if (root_sign(w, ord) < 0) ++direct;
  // 1/2 sum (1 - eps_i(w) s_i(w)) with s_i(w) the sign of w(alpha_i).
  const auto& perm = s.weyl_g()[std::size_t(fp.rep)].perm;
  int twice = 0;
  for (int k = 0; k < s.n(); ++k) {
    int sk = root_sign(s.g().roots[std::size_t(perm[std::size_t(s.comp()[std::size_t(k)])])], ord);
    twice += 1 - fp.eps[std::size_t(k)] * sk;
  }
  if (twice != 2 * direct) throw MathError("index formulas disagree");
  return direct;
}

YPolynomial chi_y(const HomogeneousSpace& s, const StableStructure& c, const Ordering& ord,
                  std::vector<ChiYRow>* rows) {
  if (!is_generic(ord, s.g())) throw UsageError("ordering " + to_string(ord.v) + " is not generic");
  YPolynomial p(std::size_t(s.n()) + 1, BigInt(0));
  for (const auto& fp : fixed_points(s, c)) {
    int ind = index(s, fp, ord);
    p[std::size_t(ind)] += (ind % 2 ? -1 : 1) * fp.sign;
    if (rows) rows->push_back({fp.point, element_label(s, fp.rep), ind, fp.sign});
  }
  return p;
}

YPolynomial chi_y(const HomogeneousSpace& s, const StableStructure& c) {
  return chi_y(s, c, default_ordering(s.g()));
}

BigInt signature(const HomogeneousSpace& s, const StableStructure& c) {
  BigInt total = 0;
  for (const auto& v : chi_y(s, c)) total += v;
  return total;
}

BigInt todd(const HomogeneousSpace& s, const StableStructure& c) { return chi_y(s, c).front(); }

RigiditySeries parse_rigidity_series(const std::string& text) {
  RigiditySeries r;
  r.text = text;
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  auto names = named_series_list();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    int cutoff = colon == std::string::npos ? 9 : std::stoi(text.substr(colon + 1));
    r.f = RationalFunction(UPoly(named_series(name, cutoff)), UPoly::constant(1));
    r.truncated = name != "trivial";
  } else {
    r.f = RationalFunction::parse(text);
  }
  check_normalized(r);
  return r;
}

void check_normalized(const RigiditySeries& f) {
  if (!f.f.is_normalized()) throw UsageError("series " + f.f.to_string() + " is not normalized (f(0)=0, f'(0)=1)");
}

BigRational rigidity_eval(const HomogeneousSpace& s, const StableStructure& c, const RigiditySeries& f,
                          const QVec& u) {
  if (int(u.size()) != s.g().dim) throw UsageError("evaluation point has the wrong dimension");
  BigRational total = 0;
  for (const auto& fp : fixed_points(s, c)) {
    BigRational term = fp.sign;
    for (const auto& w : fp.weights) {
      BigRational z = vec_dot(w, u);
      if (z == 0) throw UsageError("evaluation point lies on the hyperplane of weight " + to_string(w));
      BigRational pz = f.f.num().evaluate(z);
      if (pz == 0) throw UsageError("f vanishes at the weight " + to_string(w) + " (argument " + to_string(z) + ")");
      term *= f.f.den().evaluate(z) / pz;
    }
    total += term;
  }
  return total;
}

SymbolicRigidity rigidity_symbolic(const HomogeneousSpace& s, const StableStructure& c,
                                   const RigiditySeries& f) {
  RingPtr ring = x_ring(s.g().dim);
  const UPoly& p = f.f.num();
  const UPoly& q = f.f.den();
  bool odd = p.reflect() == -p, even = p.reflect() == p;
  auto fps = fixed_points(s, c);
  std::map<QVec, int> key_index;
  std::vector<MultiPoly> key_poly;
  // key, sign with p(w) = sign * p(key)
  auto key_of = [&](const QVec& w) -> std::pair<int, int> {
    QVec k = w;
    int sg = 1;
    if (odd || even) {
      auto it = std::find_if(w.begin(), w.end(), [](const BigRational& v) { return v != 0; });
      if (it != w.end() && *it < 0) {
        k = vec_neg(w);
        sg = odd ? -1 : 1;
      }
    }
    auto [pos, inserted] = key_index.emplace(k, int(key_poly.size()));
    if (inserted) key_poly.push_back(p.evaluate(MultiPoly::linear(ring, k)));
    return {pos->second, sg};
  };
  struct Term {
    int sign;
    std::vector<int> keys;
    std::vector<QVec> weights;
  };
  std::vector<Term> terms;
  for (const auto& fp : fps) {
    Term t{fp.sign, {}, fp.weights};
    for (const auto& w : fp.weights) {
      auto [k, sg] = key_of(w);
      if (std::find(t.keys.begin(), t.keys.end(), k) != t.keys.end())
        throw MathError("repeated denominator factor at one fixed point");
      t.keys.push_back(k);
      t.sign *= sg;
    }
    terms.push_back(std::move(t));
  }
  SymbolicRigidity r;
  r.denominator = MultiPoly::constant(ring, 1);
  for (const auto& kp : key_poly) r.denominator = r.denominator * kp;
  r.numerator = MultiPoly(ring);
  for (const auto& t : terms) {
    MultiPoly term = MultiPoly::constant(ring, t.sign);
    for (const auto& w : t.weights) term = term * q.evaluate(MultiPoly::linear(ring, w));
    std::vector<char> in(key_poly.size(), 0);
    for (int k : t.keys) in[std::size_t(k)] = 1;
    for (std::size_t k = 0; k < key_poly.size(); ++k)
      if (!in[k]) term = term * key_poly[k];
    r.numerator += term;
  }
  r.zero = r.numerator.is_zero();
  if (r.zero) {
    r.constant = true;
    r.value = 0;
  } else {
    const auto& [m, dc] = *r.denominator.terms().begin();
    BigRational v = r.numerator.coeff(m) / dc;
    if (r.numerator == r.denominator * v) {
      r.constant = true;
      r.value = v;
    }
  }
  return r;
}

std::vector<QVec> sample_points(const HomogeneousSpace& s, const RigiditySeries& f, std::size_t count,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<QVec> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100000) throw MathError("could not find sample points off the weight hyperplanes");
    QVec u(std::size_t(s.g().dim));
    for (auto& c : u) c = dist(rng);
    bool ok = true;
    for (const auto& r : s.g().roots) {
      BigRational z = vec_dot(r, u);
      if (z == 0 || f.f.num().evaluate(z) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(u));
  }
  return out;
}

namespace {

struct Involution {
  std::vector<int> perm;
  std::string label;
};

std::vector<Involution> candidate_involutions(const HomogeneousSpace& s) {
  const GroupData& g = s.g();
  std::vector<char> in_h(g.roots.size(), 0);
  for (int r : s.h_roots()) in_h[std::size_t(r)] = 1;
  auto preserves_h = [&](const std::vector<int>& perm) {
    for (int r : s.h_roots())
      if (!in_h[std::size_t(perm[std::size_t(r)])]) return false;
    return true;
  };
  std::vector<Involution> out;
  for (int a : s.comp()) {
    const auto& perm = g.reflection_perm[std::size_t(a)];
    if (preserves_h(perm)) out.push_back({perm, "w <-> w s_a, a = " + to_string(g.roots[std::size_t(a)])});
  }
  if (weyl_order(g) <= 50000) {
    const WeylGroup& wg = s.weyl_g();
    int home = s.coset_of(0);
    for (std::size_t i = 1; i < wg.size(); ++i) {
      const auto& perm = wg[i].perm;
      if (compose_perm(perm, perm) != wg[0].perm) continue;
      if (!preserves_h(perm) || s.coset_of(int(i)) == home) continue;
      if (wg[i].length() == 1) continue;  // reflections were tried above
      out.push_back({perm, "w <-> w t, t = " + element_label(s, int(i))});
    }
  }
  return out;
}

}  // namespace

RigidityVerdict rigidity_certify_odd(const HomogeneousSpace& s, const StableStructure& c,
                                     const RigiditySeries& f, std::size_t sample_count, std::uint64_t seed) {
  if (!f.f.is_odd()) throw UsageError("odd-series certification needs an odd series, got " + f.f.to_string());
  RigidityVerdict v;
  v.seed = seed;
  auto fps = fixed_points(s, c);
  const WeylGroup& wg = s.weyl_g();
  const GroupData& g = s.g();
  std::map<int, int> point_of_coset;
  for (const auto& fp : fps) point_of_coset[s.coset_of(fp.rep)] = fp.point;
  for (const auto& t : candidate_involutions(s)) {
    std::vector<std::pair<int, int>> pairs;
    bool ok = true;
    for (const auto& fp : fps) {
      int idx = wg.find(compose_perm(wg[std::size_t(fp.rep)].perm, t.perm));
      if (idx < 0) {
        ok = false;
        break;
      }
      int q = point_of_coset.at(s.coset_of(idx));
      if (q == fp.point) {
        ok = false;
        break;
      }
      const auto& other = fps[std::size_t(q)];
      int flips = 0;
      for (int r : other.roots) {
        if (std::find(fp.roots.begin(), fp.roots.end(), r) != fp.roots.end()) continue;
        if (std::find(fp.roots.begin(), fp.roots.end(), g.negative_index(r)) != fp.roots.end()) {
          ++flips;
          continue;
        }
        ok = false;
        break;
      }
      if (!ok) break;
      if (other.sign * (flips % 2 ? -1 : 1) != -fp.sign) {
        ok = false;
        break;
      }
      if (fp.point < q) pairs.push_back({fp.point, q});
    }
    if (ok) {
      v.pairing_found = true;
      v.pairing = t.label;
      v.pairs = std::move(pairs);
      break;
    }
  }
  if (sample_count) {
    for (const auto& u : sample_points(s, f, sample_count, seed)) {
      BigRational val = rigidity_eval(s, c, f, u);
      v.samples_zero = v.samples_zero && val == 0;
      if (!v.samples.empty()) v.samples_constant = v.samples_constant && val == v.samples.front().second;
      v.samples.push_back({u, val});
    }
  }
  if (v.pairing_found) v.verdict = f.truncated ? "consistent to cutoff" : "certified zero";
  else v.verdict = "not covered";
  return v;
}

IndependenceResult structure_independence_check(const HomogeneousSpace& s, const StableStructure& s1,
                                                const StableStructure& s2, const RigiditySeries& f,
                                                const std::vector<QVec>& points) {
  IndependenceResult r;
  r.points = points;
  for (const auto& u : points) {
    BigRational a = rigidity_eval(s, s1, f, u), b = rigidity_eval(s, s2, f, u);
    r.equal = r.equal && a == b;
    r.values.push_back({a, b});
  }
  return r;
}

BigRational genus_of_class(const MultiPoly& cls, const UCoeffs& f, int D) {
  auto vals = specialize_genus(f, D);
  const Ring& ring = *cls.ring();
  QVec point(ring.size(), 0);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const std::string& name = ring.var(i).name;
    bool used = cls.depends_on(i);
    if (name.size() > 1 && name[0] == 'a' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
      int k = std::stoi(name.substr(1));
      if (k >= 1 && k <= D) point[i] = vals[std::size_t(k - 1)];
      else if (used) throw UsageError("class uses " + name + " beyond the series cutoff " + std::to_string(D));
    } else if (used) {
      throw UsageError("class depends on the non-coefficient variable " + name);
    }
  }
  return cls.evaluate(point);
}

}  // namespace hsg
