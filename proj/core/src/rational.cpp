#include "hsg/rational.hpp"

#include <cctype>

namespace hsg {

BigRational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw UsageError("empty rational literal");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw UsageError("not a rational literal: '" + text + "'");
    return BigRational(BigInt(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw UsageError("not a rational literal: '" + text + "'");
  BigInt d(den);
  if (d == 0) throw UsageError("zero denominator in '" + text + "'");
  BigRational q(BigInt(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt to_integer(const BigRational& q) {
  if (!is_integer(q)) throw MathError("expected an integer, got " + q.get_str());
  return q.get_num();
}

QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_neg(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec vec_scale(const QVec& a, const BigRational& c) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

BigRational vec_dot(const QVec& a, const QVec& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

QVec zero_vec(std::size_t n) { return QVec(n, BigRational(0)); }

QVec int_vec(const std::vector<long>& v) {
  QVec r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMatrix r(n, zero_vec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

QVec mat_apply(const QMatrix& m, const QVec& v) {
  QVec r(m.size(), BigRational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

QMatrix mat_transpose(const QMatrix& m) {
  if (m.empty()) return m;
  QMatrix t(m[0].size(), zero_vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

bool proportional(const QVec& a, const QVec& b, BigRational* factor) {
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == a.size()) return false;
  BigRational c = b[pivot] / a[pivot];
  if (c == 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] * c != b[i]) return false;
  if (factor) *factor = c;
  return true;
}

QVec primitive_direction(const QVec& v, BigRational* scale) {
  BigInt lcm_den = 1, g = 0;
  for (const auto& x : v) lcm_den = lcm(lcm_den, BigInt(x.get_den()));
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] * lcm_den;
    g = gcd(g, BigInt(r[i].get_num()));
  }
  if (g == 0) throw MathError("zero vector has no direction");
  int sign = 1;
  for (const auto& x : r)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  BigRational c(g * sign, lcm_den);
  c.canonicalize();
  for (auto& x : r) x /= BigRational(g * sign);
  if (scale) *scale = c;
  return r;
}

}  // namespace hsg
