#include "hsg/space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hsg {

HomogeneousSpace::HomogeneousSpace(std::string label, GroupPtr g, std::vector<int> h_roots)
    : label_(std::move(label)), g_(std::move(g)), h_(std::move(h_roots)), cache_(std::make_shared<Cache>()) {
  const GroupData& G = *g_;
  std::size_t R = G.roots.size();
  in_h_.assign(R, false);
  for (int r : h_) {
    if (r < 0 || std::size_t(r) >= R) throw UsageError(label_ + ": subgroup root is not a root of " + G.label);
    in_h_[r] = true;
  }
  for (int r : h_)
    if (!in_h_[G.negative_index(r)])
      throw UsageError(label_ + ": subgroup roots are not closed under negation");
  for (int a : h_)
    for (int b : h_) {
      int s = G.root_index(vec_add(G.roots[a], G.roots[b]));
      if (s >= 0 && !in_h_[s])
        throw UsageError(label_ + ": subgroup roots are not a closed subsystem (" + to_string(G.roots[a]) +
                         " + " + to_string(G.roots[b]) + ")");
    }
  std::sort(h_.begin(), h_.end());
  Ordering ord = default_ordering(G);
  slot_of_.assign(R, {-1, 0});
  for (std::size_t r = 0; r < R; ++r)
    if (!in_h_[r] && root_sign(G.roots[r], ord) > 0) comp_.push_back(int(r));
  for (std::size_t s = 0; s < comp_.size(); ++s) {
    slot_of_[comp_[s]] = {int(s), 1};
    slot_of_[G.negative_index(comp_[s])] = {int(s), -1};
  }
  // Positive H roots that are not sums of two positive H roots.
  std::set<QVec> sums;
  std::vector<int> hpos;
  for (int r : h_)
    if (root_sign(G.roots[r], ord) > 0) hpos.push_back(r);
  for (int a : hpos)
    for (int b : hpos) sums.insert(vec_add(G.roots[a], G.roots[b]));
  for (int a : hpos)
    if (!sums.count(G.roots[a])) h_simple_.push_back(a);

  // Classes of complementary roots connected by adding roots of H.
  std::vector<int> parent(R);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t r = 0; r < R; ++r) {
    if (in_h_[r]) continue;
    for (int b : h_) {
      int s = G.root_index(vec_add(G.roots[r], G.roots[b]));
      if (s >= 0) parent[find(int(r))] = find(s);
    }
  }
  std::vector<bool> done(comp_.size(), false);
  for (std::size_t s = 0; s < comp_.size(); ++s) {
    if (done[s]) continue;
    Summand sm;
    int root = find(comp_[s]);
    int negroot = find(G.negative_index(comp_[s]));
    sm.self_conjugate = root == negroot;
    for (std::size_t r = 0; r < R; ++r)
      if (!in_h_[r] && find(int(r)) == root) sm.roots.push_back(int(r));
    for (std::size_t t = s; t < comp_.size(); ++t) {
      int c = find(comp_[t]);
      if (c == root || c == negroot) {
        done[t] = true;
        sm.slots.push_back(int(t));
        sm.orient.push_back(c == root ? 1 : -1);
      }
    }
    summands_.push_back(std::move(sm));
  }
}

HomogeneousSpace HomogeneousSpace::from_vectors(const std::string& label, const GroupData& g,
                                                const std::vector<QVec>& h_roots) {
  auto gp = std::make_shared<const GroupData>(g);
  std::vector<int> idx;
  for (const auto& v : h_roots) {
    int r = gp->root_index(v);
    if (r < 0) throw UsageError(label + ": subgroup root " + to_string(v) + " is not a root of " + g.label);
    idx.push_back(r);
  }
  return HomogeneousSpace(label, gp, idx);
}

std::vector<QVec> HomogeneousSpace::h_root_vectors() const {
  std::vector<QVec> v;
  for (int r : h_) v.push_back(g_->roots[r]);
  return v;
}

bool HomogeneousSpace::has_invariant_structure() const {
  for (const auto& s : summands_)
    if (s.self_conjugate) return false;
  return true;
}

GroupPtr HomogeneousSpace::h_group() const {
  std::call_once(cache_->h_once, [&] {
    cache_->h = std::make_shared<const GroupData>(
        group_from_roots(label_ + ":H", g_->dim, h_root_vectors(), g_->gram));
  });
  return cache_->h;
}

BigInt HomogeneousSpace::euler() const { return weyl_order(*g_) / weyl_order(*h_group()); }

const WeylGroup& HomogeneousSpace::weyl_g() const {
  std::call_once(cache_->wg_once, [&] { cache_->wg = WeylGroup::generate(g_, g_->simple, weyl_cap); });
  return cache_->wg;
}

const WeylGroup& HomogeneousSpace::weyl_h() const {
  std::call_once(cache_->wh_once, [&] { cache_->wh = WeylGroup::generate(g_, h_simple_, weyl_cap); });
  return cache_->wh;
}

const std::vector<int>& HomogeneousSpace::coset_reps() const {
  std::call_once(cache_->cos_once, [&] {
    const WeylGroup& wg = weyl_g();
    const WeylGroup& wh = weyl_h();
    cache_->coset_index.assign(wg.size(), -1);
    for (std::size_t e = 0; e < wg.size(); ++e) {
      if (cache_->coset_index[e] >= 0) continue;
      int c = int(cache_->reps.size());
      cache_->reps.push_back(int(e));
      for (const auto& h : wh.elements()) {
        int k = wg.find(compose_perm(wg[e].perm, h.perm));
        if (k < 0) throw UsageError(label_ + ": W_H is not contained in W_G");
        cache_->coset_index[k] = c;
      }
    }
  });
  return cache_->reps;
}

int HomogeneousSpace::coset_of(int element) const {
  coset_reps();
  return cache_->coset_index.at(element);
}

std::string element_label(const HomogeneousSpace& s, int element) {
  const WeylGroup& wg = s.weyl_g();
  if (s.g().label.rfind("U(", 0) == 0 || s.g().label.rfind("SU(", 0) == 0) {
    std::vector<int> p = coordinate_permutation(s.g(), wg.matrix(element));
    if (!p.empty() && p.size() < 10) {
      std::string out;
      for (int v : p) out += std::to_string(v + 1);
      return out;
    }
  }
  return wg.word_string(element);
}

}  // namespace hsg
