#pragma once

#include <string>
#include <vector>

#include "hsg/poly.hpp"

namespace hsg {

// Polynomial body truncated at weighted degree `cutoff` under an explicit grading.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  // Grading defaults to 1 on x, u and t variables and 0 elsewhere.
  TruncatedSeries(MultiPoly body, int cutoff);
  TruncatedSeries(MultiPoly body, int cutoff, std::vector<int> grading);

  static std::vector<int> default_grading(const Ring& ring);

  const MultiPoly& body() const { return body_; }
  int cutoff() const { return cutoff_; }
  const std::vector<int>& grading() const { return grading_; }
  const RingPtr& ring() const { return body_.ring(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const BigRational& c) const;
  bool operator==(const TruncatedSeries& o) const { return body_ == o.body_; }

  TruncatedSeries pow(int e) const;
  TruncatedSeries with_body(MultiPoly body) const;
  // Substitutes `inner` for variable `var` (Horner scheme, truncating each step).
  TruncatedSeries compose(std::size_t var, const TruncatedSeries& inner) const;
  std::string to_string() const { return body_.to_string(); }

 private:
  MultiPoly body_;
  int cutoff_ = 0;
  std::vector<int> grading_;
};

TruncatedSeries series_invert(const TruncatedSeries& s);
// Compositional inverse in `var`: s must be var + (higher order terms).
TruncatedSeries series_reversion(const TruncatedSeries& s, std::size_t var);

// Univariate coefficient lists c[0] + c[1] u + ...
using UCoeffs = std::vector<BigRational>;
UCoeffs ucoeffs_mul(const UCoeffs& a, const UCoeffs& b, int cutoff);
UCoeffs ucoeffs_invert(const UCoeffs& a, int cutoff);
UCoeffs ucoeffs_exp_scaled(const BigRational& c, int cutoff);  // e^{c u}

// Named genus series f(u) = u + f_1 u^2 + ... up to u^{cutoff}:
// "trivial" (u), "todd" (1 - e^{-u}), "tanh", "ahat" (2 sinh(u/2)).
UCoeffs named_series(const std::string& name, int cutoff);
std::vector<std::string> named_series_list();

}  // namespace hsg
