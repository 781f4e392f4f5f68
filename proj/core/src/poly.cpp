#include "hsg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

#include "json.hpp"

namespace hsg {

Ring::Ring(std::vector<Var> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars)
    throw UsageError("ring has " + std::to_string(vars_.size()) + " variables; limit is " +
                     std::to_string(kMaxVars));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw UsageError("unknown variable '" + name + "'");
  return *i;
}

std::vector<int> Ring::weights() const {
  std::vector<int> w;
  for (const auto& v : vars_) w.push_back(v.weight);
  return w;
}

std::vector<int> Ring::kind_mask(std::initializer_list<VarKind> kinds) const {
  std::vector<int> w(vars_.size(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (VarKind k : kinds)
      if (vars_[i].kind == k) w[i] = 1;
  return w;
}

bool Ring::operator==(const Ring& o) const {
  if (vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight) return false;
  return true;
}

RingPtr make_ring(std::vector<Var> vars) { return std::make_shared<const Ring>(std::move(vars)); }

RingPtr x_ring(int k, const std::string& prefix, VarKind kind) {
  std::vector<Var> v;
  for (int i = 1; i <= k; ++i) v.push_back({prefix + std::to_string(i), 1, kind});
  return make_ring(std::move(v));
}

RingPtr genus_ring(int k, int D, bool with_t) {
  std::vector<Var> v;
  for (int i = 1; i <= k; ++i) v.push_back({"x" + std::to_string(i), 1, VarKind::X});
  for (int i = 1; i <= D; ++i) v.push_back({"a" + std::to_string(i), i, VarKind::A});
  if (with_t) v.push_back({"t", 1, VarKind::T});
  return make_ring(std::move(v));
}

RingPtr a_ring(int D) {
  std::vector<Var> v;
  for (int i = 1; i <= D; ++i) v.push_back({"a" + std::to_string(i), i, VarKind::A});
  return make_ring(std::move(v));
}

RingPtr b_ring(int D) {
  std::vector<Var> v;
  for (int i = 1; i <= D; ++i) v.push_back({"b" + std::to_string(i), i, VarKind::B});
  return make_ring(std::move(v));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto b : m) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

int mono_degree(const Mono& m, const std::vector<int>& grading, std::size_t nvars) {
  int d = 0;
  for (std::size_t i = 0; i < nvars; ++i) d += grading[i] * m[i];
  return d;
}

std::string mono_to_string(const Mono& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += ring.var(i).name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

Mono MultiPoly::zero_mono() {
  Mono m;
  m.fill(0);
  return m;
}

MultiPoly MultiPoly::constant(RingPtr ring, const BigRational& c) {
  MultiPoly p(std::move(ring));
  p.add_term(zero_mono(), c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index, int exponent) {
  if (index >= ring->size()) throw UsageError("variable index out of range");
  MultiPoly p(std::move(ring));
  Mono m = zero_mono();
  m[index] = static_cast<std::uint8_t>(exponent);
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::linear(RingPtr ring, const QVec& coeffs, std::size_t offset) {
  MultiPoly p(std::move(ring));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Mono m = zero_mono();
    m[offset + i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

void MultiPoly::add_term(const Mono& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational MultiPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational MultiPoly::constant_term() const { return coeff(zero_mono()); }

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_mono());
}

static void check_rings(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw UsageError("polynomials over different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (!ring_) ring_ = o.ring_;
  check_rings(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (!ring_) ring_ = o.ring_;
  check_rings(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator*(const BigRational& c) const {
  MultiPoly r = *this;
  r *= c;
  return r;
}

static inline void mono_add(Mono& out, const Mono& a, const Mono& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 255) throw MathError("exponent overflow");
    out[i] = static_cast<std::uint8_t>(s);
  }
  for (std::size_t i = n; i < kMaxVars; ++i) out[i] = 0;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_rings(*this, o);
  MultiPoly r(ring_);
  if (is_zero() || o.is_zero()) return r;
  std::size_t n = ring_->size();
  r.terms_.reserve(terms_.size() * o.terms_.size());
  Mono m;
  BigRational prod;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      mono_add(m, ma, mb, n);
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(m, prod);
    }
  return r;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& o, const std::vector<int>& grading,
                                   int cutoff) const {
  check_rings(*this, o);
  MultiPoly r(ring_);
  std::size_t n = ring_->size();
  Mono m;
  BigRational prod;
  for (const auto& [ma, ca] : terms_) {
    int da = mono_degree(ma, grading, n);
    if (da > cutoff) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mono_degree(mb, grading, n) > cutoff) continue;
      mono_add(m, ma, mb, n);
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(m, prod);
    }
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty()) check_rings(*this, o);
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw UsageError("negative exponent");
  MultiPoly result = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::truncate(const std::vector<int>& grading, int cutoff) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m, grading, ring_->size()) <= cutoff) r.terms_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::homogeneous_part(const std::vector<int>& grading, int degree) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m, grading, ring_->size()) == degree) r.terms_.emplace(m, c);
  return r;
}

int MultiPoly::degree(const std::vector<int>& grading) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m, grading, ring_->size()));
  return d;
}

int MultiPoly::total_degree() const {
  return degree(std::vector<int>(ring_ ? ring_->size() : 0, 1));
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m[var]));
  return d;
}

bool MultiPoly::depends_on(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var]) return true;
  return false;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int e) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (m[var] == e) {
      Mono k = m;
      k[var] = 0;
      r.terms_.emplace(k, c);
    }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  int top = degree_in(var);
  if (top <= 0) return *this;
  std::vector<MultiPoly> powers{constant(ring_, 1)};
  for (int e = 1; e <= top; ++e) powers.push_back(powers.back() * value);
  MultiPoly r(ring_);
  std::map<int, MultiPoly> slices;
  for (const auto& [m, c] : terms_) {
    Mono k = m;
    int e = k[var];
    k[var] = 0;
    auto it = slices.try_emplace(e, MultiPoly(ring_)).first;
    it->second.add_term(k, c);
  }
  for (auto& [e, s] : slices) r += s * powers[e];
  return r;
}

MultiPoly MultiPoly::map_ring(RingPtr target, const std::vector<std::size_t>& var_map) const {
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Mono k = zero_mono();
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (!m[i]) continue;
      if (var_map[i] >= target->size())
        throw UsageError("variable " + ring_->var(i).name + " has no image in target ring");
      k[var_map[i]] = static_cast<std::uint8_t>(k[var_map[i]] + m[i]);
    }
    r.add_term(k, c);
  }
  return r;
}

MultiPoly MultiPoly::linear_substitute(const QMatrix& mat, std::size_t offset) const {
  std::size_t k = mat.size();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < k; ++i) {
    QVec col(k);
    for (std::size_t j = 0; j < k; ++j) col[j] = mat[j][i];
    images.push_back(linear(ring_, col, offset));
  }
  // Expand slice by slice on the substituted block.
  std::map<std::vector<int>, MultiPoly> groups;
  for (const auto& [m, c] : terms_) {
    std::vector<int> key(k);
    Mono rest = m;
    for (std::size_t i = 0; i < k; ++i) {
      key[i] = m[offset + i];
      rest[offset + i] = 0;
    }
    auto it = groups.try_emplace(key, MultiPoly(ring_)).first;
    it->second.add_term(rest, c);
  }
  std::vector<std::vector<MultiPoly>> pw(k);
  MultiPoly r(ring_);
  for (auto& [key, rest] : groups) {
    MultiPoly prod = constant(ring_, 1);
    for (std::size_t i = 0; i < k; ++i) {
      if (!key[i]) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(constant(ring_, 1));
      while (int(cache.size()) <= key[i]) cache.push_back(cache.back() * images[i]);
      prod = prod * cache[key[i]];
    }
    r += prod * rest;
  }
  return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<std::size_t>& perm) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Mono k = zero_mono();
    for (std::size_t i = 0; i < ring_->size(); ++i) k[perm[i]] = m[i];
    r.terms_.emplace(k, c);
  }
  return r;
}

BigRational MultiPoly::evaluate(const QVec& point) const {
  if (point.size() != ring_->size())
    throw UsageError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, ring has " + std::to_string(ring_->size()));
  BigRational s = 0;
  std::vector<std::vector<BigRational>> pw(point.size());
  for (const auto& [m, c] : terms_) {
    BigRational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (!m[i]) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= m[i]) cache.push_back(cache.back() * point[i]);
      t *= cache[m[i]];
    }
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::partial_evaluate(std::size_t var, const BigRational& value) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Mono k = m;
    BigRational f = c;
    for (int e = 0; e < m[var]; ++e) f *= value;
    k[var] = 0;
    r.add_term(k, f);
  }
  return r;
}

std::vector<std::pair<Mono, BigRational>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Mono, BigRational>> v(terms_.begin(), terms_.end());
  std::vector<int> w = ring_ ? ring_->weights() : std::vector<int>{};
  std::size_t n = ring_ ? ring_->size() : 0;
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int da = mono_degree(a.first, w, n), db = mono_degree(b.first, w, n);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    BigRational a = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono = mono_to_string(m, *ring_);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

MultiPoly MultiPoly::parse(RingPtr ring, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  MultiPoly result(ring);
  if (s == "0") return result;
  if (s.empty()) throw UsageError("empty polynomial text");
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw UsageError("expected '+' or '-' in polynomial text at " + std::to_string(pos));
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw UsageError("empty term in polynomial text");
    BigRational coef = sign;
    Mono m = zero_mono();
    std::size_t p = 0;
    while (p <= term.size()) {
      std::size_t star = term.find('*', p);
      if (star == std::string::npos) star = term.size();
      std::string factor = term.substr(p, star - p);
      if (factor.empty()) throw UsageError("empty factor in term '" + term + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coef *= parse_rational(factor);
      } else {
        std::size_t caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
        std::size_t idx = ring->require(name);
        m[idx] = static_cast<std::uint8_t>(m[idx] + e);
      }
      p = star + 1;
    }
    result.add_term(m, coef);
    pos = end;
  }
  return result;
}

std::string MultiPoly::to_json() const {
  nlohmann::json j;
  j["vars"] = nlohmann::json::array();
  for (const auto& v : ring_->vars()) j["vars"].push_back(v.name);
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms()) {
    nlohmann::json e = nlohmann::json::array();
    for (std::size_t i = 0; i < ring_->size(); ++i) e.push_back(int(m[i]));
    j["terms"].push_back({{"coef", c.get_str()}, {"exp", e}});
  }
  return j.dump();
}

MultiPoly MultiPoly::from_json(RingPtr ring, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const auto& vars = j.at("vars");
  std::vector<std::size_t> map;
  for (const auto& v : vars) map.push_back(ring->require(v.get<std::string>()));
  MultiPoly r(ring);
  for (const auto& t : j.at("terms")) {
    Mono m = zero_mono();
    const auto& e = t.at("exp");
    if (e.size() != map.size()) throw UsageError("exponent vector length mismatch");
    for (std::size_t i = 0; i < map.size(); ++i) m[map[i]] = static_cast<std::uint8_t>(e[i].get<int>());
    r.add_term(m, parse_rational(t.at("coef").get<std::string>()));
  }
  return r;
}

MultiPoly divide_linear(const MultiPoly& num, const MultiPoly& lin) {
  const RingPtr& ring = lin.ring();
  if (!same_ring(num.ring(), ring)) throw UsageError("division over different rings");
  if (lin.total_degree() != 1) throw UsageError("divide_linear needs a degree-one divisor");
  std::size_t n = ring->size();
  std::size_t pivot = n;
  BigRational c;
  for (std::size_t i = 0; i < n && pivot == n; ++i) {
    Mono m = MultiPoly::zero_mono();
    m[i] = 1;
    BigRational v = lin.coeff(m);
    if (v != 0) {
      pivot = i;
      c = v;
    }
  }
  MultiPoly rest = lin;
  {
    Mono m = MultiPoly::zero_mono();
    m[pivot] = 1;
    rest.add_term(m, -c);
  }
  std::map<int, MultiPoly> slices;
  for (const auto& [m, v] : num.terms()) {
    Mono k = m;
    int e = k[pivot];
    k[pivot] = 0;
    auto it = slices.try_emplace(e, MultiPoly(ring)).first;
    it->second.add_term(k, v);
  }
  MultiPoly quotient(ring);
  if (slices.empty()) return quotient;
  int top = slices.rbegin()->first;
  BigRational inv_c = 1 / c;
  MultiPoly q_prev(ring);  // Q_e
  for (int e = top; e >= 1; --e) {
    MultiPoly s = slices.count(e) ? slices[e] : MultiPoly(ring);
    MultiPoly q = (s - rest * q_prev) * inv_c;  // Q_{e-1}
    for (const auto& [m, v] : q.terms()) {
      Mono k = m;
      k[pivot] = static_cast<std::uint8_t>(e - 1);
      quotient.add_term(k, v);
    }
    q_prev = std::move(q);
  }
  MultiPoly s0 = slices.count(0) ? slices[0] : MultiPoly(ring);
  MultiPoly remainder = s0 - rest * q_prev;
  if (!remainder.is_zero())
    throw MathError("pole not cancelled: nonzero remainder modulo " + lin.to_string());
  return quotient;
}

MultiPoly divide_exact_lex(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw UsageError("division by the zero polynomial");
  const RingPtr& ring = den.ring();
  std::size_t n = ring->size();
  auto greater = [](const Mono& a, const Mono& b) { return a > b; };
  std::map<Mono, BigRational, decltype(greater)> rem(greater);
  for (const auto& [m, c] : num.terms()) rem.emplace(m, c);
  Mono lead = den.terms().begin()->first;
  for (const auto& [m, c] : den.terms())
    if (m > lead) lead = m;
  BigRational lc = den.coeff(lead);
  MultiPoly q(ring);
  while (!rem.empty()) {
    auto [m, c] = *rem.begin();
    Mono shift = MultiPoly::zero_mono();
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < lead[i])
        throw MathError("pole not cancelled: nonzero remainder modulo " + den.to_string());
      shift[i] = static_cast<std::uint8_t>(m[i] - lead[i]);
    }
    BigRational f = c / lc;
    q.add_term(shift, f);
    for (const auto& [dm, dc] : den.terms()) {
      Mono k;
      for (std::size_t i = 0; i < kMaxVars; ++i) k[i] = static_cast<std::uint8_t>(dm[i] + shift[i]);
      auto it = rem.find(k);
      BigRational d = dc * f;
      if (it == rem.end()) {
        rem.emplace(k, -d);
      } else {
        it->second -= d;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return q;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw UsageError("division by the zero polynomial");
  if (!same_ring(num.ring(), den.ring())) throw UsageError("division over different rings");
  if (den.is_constant()) return num * (1 / den.constant_term());
  if (den.total_degree() == 1) return divide_linear(num, den);
  return divide_exact_lex(num, den);
}

MultiPoly compose_vars(const MultiPoly& p, const RingPtr& target, const std::vector<MultiPoly>& images) {
  const Ring& src = *p.ring();
  if (images.size() != src.size()) throw UsageError("compose_vars: one image per variable required");
  std::vector<std::vector<MultiPoly>> pw(src.size());
  MultiPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!m[i]) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[m[i]];
    }
    out += t;
  }
  return out;
}

BigRational evaluate_quotient(const MultiPoly& num, const std::vector<MultiPoly>& den_factors,
                              const QVec& point) {
  BigRational d = 1;
  for (const auto& f : den_factors) {
    BigRational v = f.evaluate(point);
    if (v == 0) throw MathError("denominator factor " + f.to_string() + " vanishes at " + to_string(point));
    d *= v;
  }
  return num.evaluate(point) / d;
}

}  // namespace hsg
