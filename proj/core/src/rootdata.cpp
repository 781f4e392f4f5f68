#include "hsg/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <regex>
#include <set>

namespace hsg {

BigRational GroupData::inner(const QVec& a, const QVec& b) const {
  return vec_dot(a, mat_apply(gram, b));
}

int GroupData::root_index(const QVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

QVec GroupData::reflect(int a, const QVec& v) const {
  const QVec& al = roots[a];
  BigRational c = 2 * inner(al, v) / inner(al, al);
  return vec_sub(v, vec_scale(al, c));
}

QMatrix GroupData::reflection_matrix(int a) const {
  QMatrix m(dim, QVec(dim));
  for (int j = 0; j < dim; ++j) {
    QVec e = zero_vec(dim);
    e[j] = 1;
    QVec col = reflect(a, e);
    for (int i = 0; i < dim; ++i) m[i][j] = col[i];
  }
  return m;
}

void GroupData::finalize() {
  if (gram.empty()) gram = identity_matrix(dim);
  if (int(gram.size()) != dim) throw UsageError(label + ": gram matrix has wrong size");
  if (rank == 0) rank = dim;
  index_.clear();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (int(roots[i].size()) != dim) throw UsageError(label + ": root of wrong dimension");
    if (vec_is_zero(roots[i])) throw UsageError(label + ": zero vector in root set");
    if (!index_.emplace(roots[i], int(i)).second)
      throw UsageError(label + ": duplicate root " + to_string(roots[i]));
  }
  neg_.assign(roots.size(), -1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int j = root_index(vec_neg(roots[i]));
    if (j < 0) throw UsageError(label + ": root set not closed under negation at " + to_string(roots[i]));
    neg_[i] = j;
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      BigRational f;
      if (i != j && int(j) != neg_[i] && proportional(roots[i], roots[j], &f))
        throw UsageError(label + ": roots " + to_string(roots[i]) + " and " + to_string(roots[j]) +
                         " are proportional");
    }
  reflection_perm.assign(roots.size(), std::vector<int>(roots.size()));
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t r = 0; r < roots.size(); ++r) {
      int k = root_index(reflect(int(a), roots[r]));
      if (k < 0)
        throw UsageError(label + ": reflection in " + to_string(roots[a]) + " does not preserve the root set");
      reflection_perm[a][r] = k;
    }
  Ordering ord = default_ordering(*this);
  std::vector<int> pos = positive_roots(*this, ord);
  std::set<QVec> sums;
  for (int a : pos)
    for (int b : pos) sums.insert(vec_add(roots[a], roots[b]));
  simple.clear();
  for (int a : pos)
    if (!sums.count(roots[a])) simple.push_back(a);
}

static QVec unit(int dim, int i, long c = 1) {
  QVec v = zero_vec(dim);
  v[i] = c;
  return v;
}

static QVec two(int dim, int i, long ci, int j, long cj) {
  QVec v = zero_vec(dim);
  v[i] = ci;
  v[j] = cj;
  return v;
}

static void append_negatives(std::vector<QVec>& roots) {
  std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i) roots.push_back(vec_neg(roots[i]));
}

GroupData build_group(const std::string& spec) {
  static const std::regex re(R"(\s*(U|SU|Sp|SO)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  GroupData g;
  if (std::regex_match(spec, std::regex(R"(\s*G_?2\s*)"))) {
    g.label = "G2";
    g.dim = g.rank = 2;
    g.gram = {{2, -1}, {-1, 2}};
    g.roots = {int_vec({1, 0}), int_vec({0, 1}), int_vec({1, 1}),
               int_vec({1, -1}), int_vec({2, 1}), int_vec({1, 2})};
    append_negatives(g.roots);
    g.finalize();
    return g;
  }
  if (!std::regex_match(spec, m, re))
    throw UsageError("unsupported group '" + spec + "' (expected U(n), SU(n), Sp(n), SO(m) or G2)");
  std::string type = m[1];
  int n = std::stoi(m[2]);
  if (n < 1) throw UsageError("group " + spec + " has rank 0");
  if (type == "U" || type == "SU") {
    if (type == "SU" && n < 2) throw UsageError("group " + spec + " has rank 0");
    g.label = type + "(" + std::to_string(n) + ")";
    g.dim = n;
    g.rank = type == "U" ? n : n - 1;
    if (type == "SU") g.metadata = "trace-zero";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.roots.push_back(two(n, i, 1, j, -1));
  } else if (type == "Sp") {
    g.label = "Sp(" + std::to_string(n) + ")";
    g.dim = g.rank = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        g.roots.push_back(two(n, i, 1, j, -1));
        g.roots.push_back(two(n, i, 1, j, 1));
      }
    for (int i = 0; i < n; ++i) g.roots.push_back(unit(n, i, 2));
  } else {
    if (n < 2) throw UsageError("group " + spec + " has rank 0");
    int r = n / 2;
    g.label = "SO(" + std::to_string(n) + ")";
    g.dim = g.rank = r;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        g.roots.push_back(two(r, i, 1, j, -1));
        g.roots.push_back(two(r, i, 1, j, 1));
      }
    if (n % 2)
      for (int i = 0; i < r; ++i) g.roots.push_back(unit(r, i));
  }
  append_negatives(g.roots);
  g.finalize();
  return g;
}

GroupData group_from_roots(const std::string& label, int dim, std::vector<QVec> roots, QMatrix gram) {
  if (dim < 1) throw UsageError(label + ": coordinate dimension must be positive");
  GroupData g;
  g.label = label;
  g.dim = g.rank = dim;
  g.roots = std::move(roots);
  g.gram = std::move(gram);
  g.finalize();
  return g;
}

std::vector<std::pair<std::string, std::vector<int>>> irreducible_components(const GroupData& g) {
  std::size_t s = g.simple.size();
  std::vector<int> comp(s, -1);
  int nc = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<std::size_t> q{i};
    comp[i] = nc;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      for (std::size_t b = 0; b < s; ++b)
        if (comp[b] < 0 && g.inner(g.roots[g.simple[a]], g.roots[g.simple[b]]) != 0) {
          comp[b] = nc;
          q.push_back(b);
        }
    }
    ++nc;
  }
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> members;
    for (std::size_t i = 0; i < s; ++i)
      if (comp[i] == c) members.push_back(g.simple[i]);
    int r = int(members.size());
    long nroots = 0;
    std::map<BigRational, int> lengths;
    for (const auto& root : g.roots) {
      bool in = false;
      for (int a : members)
        if (g.inner(root, g.roots[a]) != 0) in = true;
      if (!in) continue;
      ++nroots;
      lengths[g.inner(root, root)]++;
    }
    std::string type;
    if (lengths.size() == 1) {
      if (nroots == long(r) * (r + 1))
        type = "A";
      else if (r >= 4 && nroots == 2L * r * (r - 1))
        type = "D";
      else if ((r == 6 && nroots == 72) || (r == 7 && nroots == 126) || (r == 8 && nroots == 240))
        type = "E";
    } else if (lengths.size() == 2) {
      int shorter = lengths.begin()->second;
      if (r == 2 && nroots == 12)
        type = "G";
      else if (r == 4 && nroots == 48)
        type = "F";
      else if (nroots == 2L * r * r)
        type = shorter == 2 * r ? "B" : "C";
    }
    if (type.empty()) throw UsageError(g.label + ": unrecognized irreducible component of rank " + std::to_string(r));
    out.push_back({type + std::to_string(r), members});
  }
  return out;
}

BigInt weyl_order(const GroupData& g) {
  BigInt order = 1;
  for (const auto& [type, members] : irreducible_components(g)) {
    long r = long(members.size());
    BigInt fact = 1;
    for (long i = 2; i <= r; ++i) fact *= i;
    BigInt pw = 1;
    for (long i = 0; i < r; ++i) pw *= 2;
    switch (type[0]) {
      case 'A': order *= fact * (r + 1); break;
      case 'B':
      case 'C': order *= pw * fact; break;
      case 'D': order *= pw / 2 * fact; break;
      case 'G': order *= 12; break;
      case 'F': order *= 1152; break;
      case 'E': order *= r == 6 ? BigInt(51840) : r == 7 ? BigInt(2903040) : BigInt("696729600"); break;
    }
  }
  return order;
}

bool is_generic(const Ordering& ord, const GroupData& g) {
  for (const auto& r : g.roots)
    if (vec_dot(r, ord.v) == 0) return false;
  return true;
}

Ordering default_ordering(const GroupData& g) {
  Ordering o;
  for (int i = 0; i < g.dim; ++i) o.v.push_back(g.dim - i);
  if (is_generic(o, g)) return o;
  for (long base = 2; base < 64; ++base) {
    BigRational p = 1;
    o.v.assign(g.dim, 0);
    for (int i = g.dim - 1; i >= 0; --i) {
      o.v[i] = p + i;
      p *= base;
    }
    if (is_generic(o, g)) return o;
  }
  throw UsageError(g.label + ": no generic ordering found");
}

int root_sign(const QVec& root, const Ordering& ord) {
  BigRational s = vec_dot(root, ord.v);
  if (s == 0) throw UsageError("ordering " + to_string(ord.v) + " is not generic for root " + to_string(root));
  return s > 0 ? 1 : -1;
}

std::vector<int> positive_roots(const GroupData& g, const Ordering& ord) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.roots.size(); ++i)
    if (root_sign(g.roots[i], ord) > 0) out.push_back(int(i));
  return out;
}

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

WeylGroup WeylGroup::generate(const GroupPtr& g, std::vector<int> generators, std::size_t cap) {
  WeylGroup w;
  w.g_ = g;
  w.gens_ = std::move(generators);
  WeylElement id;
  id.perm.resize(g->roots.size());
  for (std::size_t i = 0; i < id.perm.size(); ++i) id.perm[i] = int(i);
  w.lookup_.emplace(id.perm, 0);
  w.elems_.push_back(std::move(id));
  std::size_t layer_begin = 0;
  while (layer_begin < w.elems_.size()) {
    std::size_t layer_end = w.elems_.size();
    for (std::size_t e = layer_begin; e < layer_end; ++e)
      for (std::size_t k = 0; k < w.gens_.size(); ++k) {
        // w' = w s_k
        std::vector<int> p = compose_perm(w.elems_[e].perm, g->reflection_perm[w.gens_[k]]);
        if (w.lookup_.count(p)) continue;
        if (w.elems_.size() >= cap)
          throw UsageError("Weyl group of " + g->label + " exceeds the enumeration cap of " + std::to_string(cap) + " elements");
        WeylElement ne;
        ne.perm = std::move(p);
        ne.word = w.elems_[e].word;
        ne.word.push_back(int(k));
        w.lookup_.emplace(ne.perm, int(w.elems_.size()));
        w.elems_.push_back(std::move(ne));
      }
    layer_begin = layer_end;
  }
  return w;
}

int WeylGroup::find(const std::vector<int>& perm) const {
  auto it = lookup_.find(perm);
  return it == lookup_.end() ? -1 : it->second;
}

QMatrix WeylGroup::matrix(std::size_t i) const {
  QMatrix m = identity_matrix(g_->dim);
  for (int k : elems_[i].word) m = mat_mul(m, g_->reflection_matrix(gens_[k]));
  return m;
}

QVec WeylGroup::apply(std::size_t i, const QVec& v) const {
  QVec r = v;
  const auto& word = elems_[i].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = g_->reflect(gens_[*it], r);
  return r;
}

std::string WeylGroup::word_string(std::size_t i) const {
  if (elems_[i].word.empty()) return "e";
  std::string s;
  for (int k : elems_[i].word) s += "s" + std::to_string(k + 1);
  return s;
}

bool is_closed_system(const std::vector<QVec>& roots, const GroupData& ambient) {
  std::set<QVec> in(roots.begin(), roots.end());
  for (const auto& a : roots)
    for (const auto& b : roots) {
      QVec s = vec_add(a, b);
      if (ambient.root_index(s) >= 0 && !in.count(s)) return false;
    }
  return true;
}

std::vector<int> coordinate_permutation(const GroupData& g, const QMatrix& m) {
  std::vector<int> p(g.dim, -1);
  for (int j = 0; j < g.dim; ++j)
    for (int i = 0; i < g.dim; ++i) {
      if (m[i][j] == 1) {
        if (p[j] >= 0) return {};
        p[j] = i;
      } else if (m[i][j] != 0) {
        return {};
      }
    }
  for (int v : p)
    if (v < 0) return {};
  return p;
}

}  // namespace hsg
