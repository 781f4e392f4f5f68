#pragma once

// Brute-force reference computations. Nothing here goes through the library's
// Weyl group, localization or series code: fixed points and weights are listed
// by hand (permutations, subsets) and sums are evaluated at rational points.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Weights = std::vector<Vec>;  // one weight vector per tangent direction

struct Point {
  int sign = 1;
  Weights w;
};

inline Q frac(long n, long d) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

inline Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec root(int dim, int i, int j) {  // x_i - x_j
  Vec v(dim, 0);
  v[i] += 1;
  v[j] -= 1;
  return v;
}

// Exponent vectors: the distinct rearrangements of a partition padded to length m.
inline std::vector<std::vector<int>> arrangements(std::vector<int> parts, int m) {
  std::vector<std::vector<int>> out;
  if (int(parts.size()) > m) return out;
  parts.resize(m, 0);
  std::sort(parts.begin(), parts.end());
  do out.push_back(parts);
  while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

inline Q power(const Q& q, int e) {
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// Partition with i_j parts equal to j from a multi-index omega.
inline std::vector<int> partition_of(const std::vector<int>& omega) {
  std::vector<int> p;
  for (std::size_t j = 0; j < omega.size(); ++j)
    for (int c = 0; c < omega[j]; ++c) p.push_back(int(j) + 1);
  return p;
}

// sum_p sign(p) m_lambda(<w, u>) / prod <w, u>.
inline Q char_number(const std::vector<Point>& pts, const std::vector<int>& omega, const Vec& u) {
  auto lam = partition_of(omega);
  Q total = 0;
  for (const auto& p : pts) {
    std::vector<Q> vals;
    Q den = 1;
    for (const auto& w : p.w) {
      vals.push_back(dot(w, u));
      den *= vals.back();
    }
    if (den == 0) throw std::domain_error("oracle: point not generic");
    Q num = 0;
    for (const auto& e : arrangements(lam, int(vals.size()))) {
      Q t = 1;
      for (std::size_t i = 0; i < e.size(); ++i) t *= power(vals[i], e[i]);
      num += t;
    }
    total += p.sign * num / den;
  }
  return total;
}

// sum_p sign(p) prod 1 / f(<w, u>).
inline Q rigidity(const std::vector<Point>& pts, const std::function<Q(const Q&)>& f, const Vec& u) {
  Q total = 0;
  for (const auto& p : pts) {
    Q term = p.sign;
    for (const auto& w : p.w) term /= f(dot(w, u));
    total += term;
  }
  return total;
}

// chi_y from the index formula: sum_p sign(p) (-y)^{#weights negative on v}.
inline std::vector<long> chi_y(const std::vector<Point>& pts, const Vec& v) {
  std::size_t n = pts.empty() ? 0 : pts.front().w.size();
  std::vector<long> c(n + 1, 0);
  for (const auto& p : pts) {
    int ind = 0;
    for (const auto& w : p.w) ind += dot(w, v) < 0;
    c[ind] += p.sign * (ind % 2 ? -1 : 1);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// U(n)/T^n with structure signs eps[{i,j}] for i < j (row-major over pairs):
// at the permutation sigma the weights are eps_ij (x_sigma(i) - x_sigma(j)).
inline std::vector<Point> flag(int n, const std::vector<int>& eps) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Point> out;
  do {
    Point p;
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec r = root(n, sigma[i], sigma[j]);
        if (eps[k++] < 0)
          for (auto& q : r) q = -q;
        p.w.push_back(r);
      }
    out.push_back(p);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// G_{n,k} = U(n)/(U(k) x U(n-k)): points are k-subsets S, weights x_i - x_j for i in S, j not in S.
inline std::vector<Point> grassmannian(int n, int k) {
  std::vector<Point> out;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  std::sort(mask.begin(), mask.end());
  do {
    Point p;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (mask[i] && !mask[j]) p.w.push_back(root(n, i, j));
    out.push_back(p);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

// CP^n = U(n+1)/(U(1) x U(n)).
inline std::vector<Point> projective(int n) { return grassmannian(n + 1, 1); }

// S^6 = G2/SU(3): two points with weights +-(x1, x2, -x1-x2).
inline std::vector<Point> six_sphere() {
  Weights w{{1, 0}, {0, 1}, {-1, -1}};
  Point a{1, w}, b{1, w};
  for (auto& v : b.w)
    for (auto& q : v) q = -q;
  return {a, b};
}

// Univariate truncated series over Q.
using Series = std::vector<Q>;

inline Series mul(const Series& a, const Series& b, int cutoff) {
  Series c(cutoff + 1, 0);
  for (std::size_t i = 0; i < a.size() && int(i) <= cutoff; ++i)
    for (std::size_t j = 0; j < b.size() && int(i + j) <= cutoff; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Series invert(const Series& a, int cutoff) {
  if (a.empty() || a[0] == 0) throw std::domain_error("oracle: zero constant term");
  Series r(cutoff + 1, 0);
  r[0] = 1 / a[0];
  for (int n = 1; n <= cutoff; ++n) {
    Q s = 0;
    for (int k = 1; k <= n && k < int(a.size()); ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

// Lagrange inversion: [x^n] g^{-1}(x) = (1/n) [u^{n-1}] (u / g(u))^n, g = u + ...
inline Series reversion(const Series& g, int cutoff) {
  Series h(g.begin() + 1, g.end());  // g(u) / u
  h.resize(cutoff + 1, 0);
  Series inv = invert(h, cutoff);
  Series out(cutoff + 1, 0);
  Series pw{1};
  for (int n = 1; n <= cutoff; ++n) {
    pw = mul(pw, inv, cutoff);
    out[n] = pw.size() > std::size_t(n - 1) ? pw[n - 1] / n : Q(0);
  }
  return out;
}

// a_1..a_D with 1 + sum a_i x^i = x / f(x); f given as coefficients with f[1] = 1.
inline std::vector<Q> genus_values(const Series& f, int D) {
  Series h(f.begin() + 1, f.end());
  h.resize(D + 1, 0);
  Series inv = invert(h, D);
  return std::vector<Q>(inv.begin() + 1, inv.begin() + 1 + D);
}

inline Series exp_series(const Q& c, int cutoff) {  // e^{c u}
  Series s(cutoff + 1, 0);
  Q term = 1;
  for (int k = 0; k <= cutoff; ++k) {
    s[k] = term;
    term = term * c / (k + 1);
  }
  return s;
}

}  // namespace oracle
