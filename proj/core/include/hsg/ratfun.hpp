#pragma once

#include <string>
#include <vector>

#include "hsg/poly.hpp"

namespace hsg {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRational> c);
  static UPoly constant(const BigRational& c);
  static UPoly monomial(int degree, const BigRational& c = 1);

  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int i) const { return i < int(c_.size()) ? c_[i] : BigRational(0); }
  BigRational lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const BigRational& c) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly monic() const;

  BigRational evaluate(const BigRational& z) const;
  // p(lin) for a polynomial argument.
  MultiPoly evaluate(const MultiPoly& lin) const;
  UPoly reflect() const;  // p(-u)
  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

UPoly upoly_gcd(UPoly a, UPoly b);

// p(u)/q(u) in lowest terms with monic-normalized denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(UPoly()), den_(UPoly::constant(1)) {}
  RationalFunction(UPoly num, UPoly den);
  static RationalFunction parse(const std::string& text);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(int e) const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  BigRational evaluate(const BigRational& z) const;
  // f(0) = 0 and f'(0) = 1.
  bool is_normalized() const;
  bool is_odd() const;
  bool is_even() const;
  // Taylor coefficients at 0 up to u^cutoff (requires q(0) != 0).
  std::vector<BigRational> taylor(int cutoff) const;
  std::string to_string() const;

 private:
  UPoly num_, den_;
};

}  // namespace hsg
