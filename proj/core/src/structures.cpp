#include "hsg/structures.hpp"

#include <algorithm>
#include <set>

namespace hsg {

void validate(const HomogeneousSpace& s, const InvariantStructure& j) {
  if (!s.has_invariant_structure())
    throw UsageError(s.label() + " has no invariant almost complex structure (a summand is self-conjugate)");
  if (j.signs.size() != s.summands().size())
    throw UsageError("structure '" + j.signs + "' has " + std::to_string(j.signs.size()) + " signs; " +
                     s.label() + " has " + std::to_string(s.summands().size()) + " summands");
  for (char c : j.signs)
    if (c != '+' && c != '-') throw UsageError("structure '" + j.signs + "' may only contain '+' and '-'");
}

std::vector<int> slot_signs(const HomogeneousSpace& s, const InvariantStructure& j) {
  validate(s, j);
  std::vector<int> eps(s.n(), 0);
  for (std::size_t k = 0; k < s.summands().size(); ++k) {
    const Summand& sm = s.summands()[k];
    int sg = j.signs[k] == '+' ? 1 : -1;
    for (std::size_t i = 0; i < sm.slots.size(); ++i) eps[sm.slots[i]] = sg * sm.orient[i];
  }
  return eps;
}

InvariantStructure conjugate(const InvariantStructure& j) {
  InvariantStructure r = j;
  for (char& c : r.signs) c = c == '+' ? '-' : '+';
  return r;
}

InvariantStructure standard_structure(const HomogeneousSpace& s) {
  return {std::string(s.summands().size(), '+')};
}

std::vector<int> structure_root_indices(const HomogeneousSpace& s, const InvariantStructure& j) {
  std::vector<int> eps = slot_signs(s, j), out;
  for (int k = 0; k < s.n(); ++k) out.push_back(eps[k] > 0 ? s.comp()[k] : s.g().negative_index(s.comp()[k]));
  return out;
}

std::vector<QVec> structure_roots(const HomogeneousSpace& s, const InvariantStructure& j) {
  std::vector<QVec> out;
  for (int r : structure_root_indices(s, j)) out.push_back(s.g().roots[r]);
  return out;
}

InvariantStructure structure_from_roots(const HomogeneousSpace& s, const std::vector<QVec>& roots) {
  std::vector<int> eps(s.n(), 0);
  for (const auto& v : roots) {
    int r = s.g().root_index(v);
    if (r < 0 || s.is_h_root(r)) throw UsageError(to_string(v) + " is not a complementary root of " + s.label());
    auto [slot, sg] = s.slot_of(r);
    if (eps[slot] != 0) throw UsageError("root " + to_string(v) + " listed twice up to sign");
    eps[slot] = sg;
  }
  InvariantStructure j;
  for (const auto& sm : s.summands()) {
    int sg = 0;
    for (std::size_t i = 0; i < sm.slots.size(); ++i) {
      int e = eps[sm.slots[i]];
      if (e == 0) throw UsageError("structure roots do not cover every complementary root of " + s.label());
      int v = e * sm.orient[i];
      if (sg != 0 && v != sg) throw UsageError("structure roots are not constant on an isotropy summand");
      sg = v;
    }
    j.signs.push_back(sg > 0 ? '+' : '-');
  }
  return j;
}

StableStructure as_stable(const HomogeneousSpace& s, const InvariantStructure& j) {
  validate(s, j);
  StableStructure c;
  c.name = j.signs;
  c.base = j;
  return c;
}

void validate(const HomogeneousSpace& s, const StableStructure& c) {
  validate(s, c.base);
  if (c.global != 1 && c.global != -1) throw UsageError("global orientation sign must be +1 or -1");
  std::size_t points = c.reps.empty() ? s.coset_reps().size() : c.reps.size();
  if (!c.reps.empty()) {
    if (BigInt(long(c.reps.size())) != s.euler())
      throw UsageError("stable structure lists " + std::to_string(c.reps.size()) + " representatives; " +
                       s.label() + " has " + s.euler().get_str() + " fixed points");
    std::set<int> seen;
    for (int r : c.reps) {
      if (r < 0 || std::size_t(r) >= s.weyl_g().size()) throw UsageError("representative out of range");
      if (!seen.insert(s.coset_of(r)).second) throw UsageError("two representatives lie in the same coset");
    }
  }
  if (!c.eps.empty()) {
    if (c.eps.size() != points) throw UsageError("sign table has the wrong number of fixed points");
    for (const auto& row : c.eps) {
      if (int(row.size()) != s.n()) throw UsageError("sign table row has the wrong length");
      for (int e : row)
        if (e != 1 && e != -1) throw UsageError("sign table entries must be +1 or -1");
    }
  }
}

StableStructure conjugate(const HomogeneousSpace& s, const StableStructure& c) {
  StableStructure r = c;
  r.name = c.name + "-conj";
  std::size_t points = c.reps.empty() ? s.coset_reps().size() : c.reps.size();
  if (r.eps.empty()) r.eps.assign(points, std::vector<int>(s.n(), 1));
  for (auto& row : r.eps)
    for (int& e : row) e = -e;
  return r;
}

std::vector<FixedPointData> fixed_points(const HomogeneousSpace& s, const StableStructure& c) {
  validate(s, c);
  const GroupData& g = s.g();
  const WeylGroup& wg = s.weyl_g();
  const std::vector<int>& reps = c.reps.empty() ? s.coset_reps() : c.reps;
  std::vector<int> base = slot_signs(s, c.base);
  std::vector<FixedPointData> out;
  for (std::size_t p = 0; p < reps.size(); ++p) {
    FixedPointData fp;
    fp.point = int(p);
    fp.rep = reps[p];
    fp.sign = c.global;
    const auto& perm = wg[reps[p]].perm;
    for (int k = 0; k < s.n(); ++k) {
      int e = base[k] * (c.eps.empty() ? 1 : c.eps[p][k]);
      int img = perm[s.comp()[k]];
      int r = e > 0 ? img : g.negative_index(img);
      fp.eps.push_back(e);
      fp.roots.push_back(r);
      fp.weights.push_back(g.roots[r]);
      if (!c.eps.empty()) fp.sign *= c.eps[p][k];
    }
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<FixedPointData> fixed_points(const HomogeneousSpace& s, const InvariantStructure& j) {
  return fixed_points(s, as_stable(s, j));
}

static std::string signs_from_index(std::size_t idx, std::size_t len) {
  std::string out(len, '+');
  for (std::size_t k = 0; k < len; ++k)
    if ((idx >> (len - 1 - k)) & 1) out[k] = '-';
  return out;
}

static void check_cap(const HomogeneousSpace& s, int cap) {
  if (int(s.summands().size()) > cap)
    throw UsageError(s.label() + " has " + std::to_string(s.summands().size()) +
                     " isotropy summands; the enumeration cap is " + std::to_string(cap));
}

std::vector<InvariantStructure> enumerate_structures(const HomogeneousSpace& s, int cap) {
  if (!s.has_invariant_structure()) return {};
  check_cap(s, cap);
  std::size_t m = s.summands().size();
  std::vector<InvariantStructure> out;
  for (std::size_t i = 0; i < (std::size_t(1) << m); ++i) out.push_back({signs_from_index(i, m)});
  return out;
}

QVec first_chern(const HomogeneousSpace& s, const InvariantStructure& j) {
  QVec c = zero_vec(s.g().dim);
  for (const auto& r : structure_roots(s, j)) c = vec_add(c, r);
  return c;
}

std::vector<InvariantStructure> find_su_structures(const HomogeneousSpace& s, int cap, std::size_t limit) {
  if (!s.has_invariant_structure()) return {};
  check_cap(s, cap);
  std::size_t m = s.summands().size();
  int dim = s.g().dim;
  // Integer summand vectors (common denominator cleared) for a fast scan.
  std::vector<QVec> vq;
  BigInt den = 1;
  for (const auto& sm : s.summands()) {
    QVec v = zero_vec(dim);
    for (std::size_t i = 0; i < sm.slots.size(); ++i)
      v = vec_add(v, vec_scale(s.comp_root(sm.slots[i]), sm.orient[i]));
    for (const auto& x : v) den = lcm(den, BigInt(x.get_den()));
    vq.push_back(v);
  }
  std::vector<std::vector<long long>> vi(m, std::vector<long long>(dim));
  for (std::size_t k = 0; k < m; ++k)
    for (int d = 0; d < dim; ++d) {
      BigInt z = vq[k][d].get_num() * (den / vq[k][d].get_den());
      if (!z.fits_slong_p()) throw UsageError("summand vector too large for the fast scan");
      vi[k][d] = z.get_si();
    }
  std::vector<InvariantStructure> out;
  std::vector<long long> acc(dim);
  for (std::size_t i = 0; i < (std::size_t(1) << m); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      bool minus = (i >> (m - 1 - k)) & 1;
      for (int d = 0; d < dim; ++d) acc[d] += minus ? -vi[k][d] : vi[k][d];
    }
    if (std::all_of(acc.begin(), acc.end(), [](long long x) { return x == 0; })) {
      out.push_back({signs_from_index(i, m)});
      if (limit && out.size() >= limit) break;
    }
  }
  return out;
}

bool c1_divisibility(const HomogeneousSpace& s, const InvariantStructure& j, long N) {
  if (N < 1) throw UsageError("divisibility level must be positive");
  for (const auto& x : first_chern(s, j))
    if (!is_integer(x / N)) return false;
  return true;
}

bool is_integrable(const HomogeneousSpace& s, const InvariantStructure& j) {
  const GroupData& g = s.g();
  Ordering ord = default_ordering(g);
  std::vector<bool> pos(g.roots.size());
  for (std::size_t r = 0; r < g.roots.size(); ++r) pos[r] = root_sign(g.roots[r], ord) > 0;
  std::vector<int> psi = structure_root_indices(s, j);
  for (const auto& w : s.weyl_g().elements())
    if (std::all_of(psi.begin(), psi.end(), [&](int r) { return pos[w.perm[r]]; })) return true;
  return false;
}

bool PairingReport::all_negated_present() const {
  return std::all_of(rows.begin(), rows.end(), [](const PairingRow& r) { return r.negated_present; });
}

bool PairingReport::all_odd() const {
  return std::all_of(rows.begin(), rows.end(), [](const PairingRow& r) { return r.flips % 2 == 1; });
}

bool PairingReport::all_moved_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const PairingRow& r) { return r.moved_ok; });
}

PairingReport verify_pairing(const HomogeneousSpace& s, const StableStructure& c, int slot) {
  if (slot < 0 || slot >= s.n()) throw UsageError("pairing root index out of range");
  const GroupData& g = s.g();
  const WeylGroup& wg = s.weyl_g();
  int a = s.comp()[slot];
  auto fps = fixed_points(s, c);
  std::vector<int> point_of_coset(fps.size());
  for (const auto& fp : fps) point_of_coset[s.coset_of(fp.rep)] = fp.point;
  PairingReport rep;
  rep.slot = slot;
  rep.alpha = g.roots[a];
  std::vector<int> partner(fps.size());
  for (const auto& fp : fps) {
    int k = wg.find(compose_perm(wg[fp.rep].perm, g.reflection_perm[a]));
    partner[fp.point] = point_of_coset[s.coset_of(k)];
    if (partner[fp.point] == fp.point)
      throw UsageError("reflection in " + to_string(g.roots[a]) + " fixes a coset; it does not act on W_G/W_H");
  }
  for (const auto& fp : fps) {
    if (partner[partner[fp.point]] != fp.point) rep.involution = false;
    const FixedPointData& q = fps[partner[fp.point]];
    PairingRow row;
    row.point = fp.point;
    row.partner = q.point;
    row.point_label = element_label(s, fp.rep);
    row.partner_label = element_label(s, q.rep);
    QVec walpha = g.roots[wg[fp.rep].perm[a]];
    std::multiset<int> there(q.roots.begin(), q.roots.end());
    row.negated_present = there.count(g.negative_index(fp.roots[slot])) > 0;
    std::vector<bool> used(q.roots.size(), false);
    std::vector<int> moved_slots;
    for (int k = 0; k < s.n(); ++k) {
      int r = fp.roots[k];
      auto same = std::find(q.roots.begin(), q.roots.end(), r);
      auto neg = std::find(q.roots.begin(), q.roots.end(), g.negative_index(r));
      if (same != q.roots.end()) {
        row.group.push_back('I');
        used[same - q.roots.begin()] = true;
      } else if (neg != q.roots.end()) {
        row.group.push_back('F');
        used[neg - q.roots.begin()] = true;
        ++row.flips;
      } else {
        row.group.push_back('M');
        moved_slots.push_back(k);
      }
    }
    for (int k : moved_slots) {
      bool found = false;
      for (std::size_t i = 0; i < q.roots.size() && !found; ++i) {
        if (used[i]) continue;
        for (int sgn : {1, -1}) {
          QVec rel = sgn > 0 ? vec_add(fp.weights[k], q.weights[i]) : vec_sub(fp.weights[k], q.weights[i]);
          BigRational m;
          if (vec_is_zero(rel) || (proportional(walpha, rel, &m) && is_integer(m))) {
            if (vec_is_zero(rel)) m = 0;
            row.moved.push_back({k, q.weights[i], sgn > 0 ? "sum" : "difference", m});
            used[i] = true;
            found = true;
            break;
          }
        }
      }
      if (!found) row.moved_ok = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace hsg
