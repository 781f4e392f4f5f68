#include "hsg/ratfun.hpp"

#include <cctype>

#include "hsg/series.hpp"

namespace hsg {

UPoly::UPoly(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const BigRational& c) { return UPoly(std::vector<BigRational>{c}); }

UPoly UPoly::monomial(int degree, const BigRational& c) {
  std::vector<BigRational> v(degree + 1, BigRational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<BigRational> r(std::max(c_.size(), o.c_.size()), BigRational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const BigRational& c) const {
  std::vector<BigRational> r = c_;
  for (auto& v : r) v *= c;
  return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  std::vector<BigRational> rem = c_;
  std::vector<BigRational> quo(std::max(0, degree() - d.degree() + 1), BigRational(0));
  for (int k = degree() - d.degree(); k >= 0; --k) {
    BigRational f = rem[k + d.degree()] / d.lead();
    quo[k] = f;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= f * d.c_[i];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::monic() const { return is_zero() ? *this : *this * (1 / lead()); }

BigRational UPoly::evaluate(const BigRational& z) const {
  BigRational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + *it;
  return s;
}

MultiPoly UPoly::evaluate(const MultiPoly& lin) const {
  MultiPoly s(lin.ring());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * lin + MultiPoly::constant(lin.ring(), *it);
  return s;
}

UPoly UPoly::reflect() const {
  std::vector<BigRational> r = c_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    BigRational a = abs(c_[i]);
    out += first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + ");
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = upoly_gcd(num, den), r;
  num.divmod(g, num_, r);
  den.divmod(g, den_, r);
  BigRational l = den_.lead();
  num_ = num_ * (1 / l);
  den_ = den_ * (1 / l);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw MathError("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  RationalFunction base = *this;
  if (e < 0) {
    base = RationalFunction(UPoly::constant(1), UPoly::constant(1)) / base;
    e = -e;
  }
  RationalFunction r(UPoly::constant(1), UPoly::constant(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

BigRational RationalFunction::evaluate(const BigRational& z) const {
  BigRational d = den_.evaluate(z);
  if (d == 0) throw MathError("rational function denominator vanishes at " + hsg::to_string(z));
  return num_.evaluate(z) / d;
}

bool RationalFunction::is_normalized() const {
  if (den_.coeff(0) == 0) return false;
  return num_.coeff(0) == 0 && num_.coeff(1) / den_.coeff(0) == 1;
}

bool RationalFunction::is_odd() const {
  RationalFunction refl(num_.reflect(), den_.reflect());
  return refl == RationalFunction(-num_, den_);
}

bool RationalFunction::is_even() const {
  return RationalFunction(num_.reflect(), den_.reflect()) == *this;
}

std::vector<BigRational> RationalFunction::taylor(int cutoff) const {
  UCoeffs inv = ucoeffs_invert(den_.coeffs(), cutoff);
  UCoeffs r = ucoeffs_mul(num_.coeffs(), inv, cutoff);
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_ == UPoly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := '-' unary | power, power := atom ('^' int)?, atom := number | 'u' | '(' expr ')'.
struct Parser {
  std::string s;
  std::size_t p = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("series text '" + s + "': " + what + " at position " + std::to_string(p));
  }
  char peek() const { return p < s.size() ? s[p] : '\0'; }

  RationalFunction expr() {
    RationalFunction r = term();
    while (peek() == '+' || peek() == '-') {
      char op = s[p++];
      RationalFunction t = term();
      r = op == '+' ? r + t : r - t;
    }
    return r;
  }
  RationalFunction term() {
    RationalFunction r = unary();
    while (peek() == '*' || peek() == '/') {
      char op = s[p++];
      RationalFunction t = unary();
      r = op == '*' ? r * t : r / t;
    }
    return r;
  }
  RationalFunction unary() {
    if (peek() == '-') {
      ++p;
      RationalFunction r = unary();
      return RationalFunction(-r.num(), r.den());
    }
    if (peek() == '+') {
      ++p;
      return unary();
    }
    return power();
  }
  RationalFunction power() {
    RationalFunction a = atom();
    if (peek() == '^') {
      ++p;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++p;
      }
      std::size_t st = p;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++p;
      if (st == p) fail("expected integer exponent");
      int e = std::stoi(s.substr(st, p - st));
      a = a.pow(neg ? -e : e);
    }
    return a;
  }
  RationalFunction atom() {
    char c = peek();
    if (c == '(') {
      ++p;
      RationalFunction r = expr();
      if (peek() != ')') fail("expected ')'");
      ++p;
      return r;
    }
    if (c == 'u' || c == 'x') {
      ++p;
      return RationalFunction(UPoly::monomial(1), UPoly::constant(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = p;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++p;
      return RationalFunction(UPoly::constant(BigRational(s.substr(st, p - st))), UPoly::constant(1));
    }
    fail("unexpected character");
  }
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
  Parser ps;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) ps.s.push_back(c);
  if (ps.s.empty()) throw UsageError("empty series text");
  RationalFunction r = ps.expr();
  if (ps.p != ps.s.size()) ps.fail("trailing input");
  return r;
}

}  // namespace hsg
