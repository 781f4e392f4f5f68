#include "hsg/divdiff.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hsg {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

MultiPoly vandermonde(const RingPtr& ring, std::size_t offset, std::size_t n) {
  MultiPoly v = MultiPoly::constant(ring, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      v = v * (MultiPoly::variable(ring, offset + i) - MultiPoly::variable(ring, offset + j));
  return v;
}

MultiPoly antisymmetrize(const MultiPoly& p, std::size_t offset, std::size_t n) {
  // Collect strictly decreasing exponent patterns first; monomials with a repeated
  // exponent in the block antisymmetrize to zero.
  std::map<Mono, BigRational> collected;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return m[offset + a] > m[offset + b]; });
    bool repeated = false;
    for (std::size_t i = 1; i < n; ++i)
      if (m[offset + idx[i]] == m[offset + idx[i - 1]]) repeated = true;
    if (repeated) continue;
    Mono k = m;
    for (std::size_t i = 0; i < n; ++i) k[offset + i] = m[offset + idx[i]];
    collected[k] += permutation_sign(idx) * c;
  }
  MultiPoly out(p.ring());
  auto perms = permutations(int(n));
  for (const auto& [m, c] : collected) {
    if (c == 0) continue;
    for (const auto& s : perms) {
      Mono k = m;
      for (std::size_t i = 0; i < n; ++i) k[offset + s[i]] = m[offset + i];
      out.add_term(k, permutation_sign(s) * c);
    }
  }
  return out;
}

MultiPoly divided_difference_L(const MultiPoly& p, std::size_t offset, std::size_t n) {
  MultiPoly q = antisymmetrize(p, offset, n);
  const RingPtr& ring = p.ring();
  for (std::size_t i = 0; i < n && !q.is_zero(); ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      q = divide_linear(q, MultiPoly::variable(ring, offset + i) - MultiPoly::variable(ring, offset + j));
  return q;
}

}  // namespace hsg
