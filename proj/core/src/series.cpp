#include "hsg/series.hpp"

namespace hsg {

std::vector<int> TruncatedSeries::default_grading(const Ring& ring) {
  return ring.kind_mask({VarKind::X, VarKind::U, VarKind::T});
}

TruncatedSeries::TruncatedSeries(MultiPoly body, int cutoff)
    : TruncatedSeries(body, cutoff, default_grading(*body.ring())) {}

TruncatedSeries::TruncatedSeries(MultiPoly body, int cutoff, std::vector<int> grading)
    : body_(body.truncate(grading, cutoff)), cutoff_(cutoff), grading_(std::move(grading)) {
  if (cutoff < 0) throw UsageError("negative truncation cutoff");
}

static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.cutoff() != b.cutoff() || a.grading() != b.grading())
    throw UsageError("truncated series with different cutoffs or gradings");
}

TruncatedSeries TruncatedSeries::with_body(MultiPoly body) const {
  return TruncatedSeries(std::move(body), cutoff_, grading_);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(*this, o);
  TruncatedSeries r = *this;
  r.body_ += o.body_;
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(*this, o);
  TruncatedSeries r = *this;
  r.body_ -= o.body_;
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  r.body_ = -r.body_;
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(*this, o);
  TruncatedSeries r = *this;
  r.body_ = body_.mul_truncated(o.body_, grading_, cutoff_);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const BigRational& c) const {
  TruncatedSeries r = *this;
  r.body_ *= c;
  return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) return series_invert(*this).pow(-e);
  TruncatedSeries r = with_body(MultiPoly::constant(ring(), 1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TruncatedSeries TruncatedSeries::compose(std::size_t var, const TruncatedSeries& inner) const {
  int top = body_.degree_in(var);
  if (top <= 0) return *this;
  TruncatedSeries acc = with_body(body_.coefficient_of(var, top));
  for (int e = top - 1; e >= 0; --e) acc = acc * inner + with_body(body_.coefficient_of(var, e));
  return acc;
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  MultiPoly c0 = s.body().homogeneous_part(s.grading(), 0);
  if (c0.is_zero()) throw UsageError("series_invert: zero constant term");
  if (!c0.is_constant()) throw UsageError("series_invert: degree-zero part " + c0.to_string() + " is not a rational constant");
  BigRational c = c0.constant_term();
  // s = c (1 + h), 1/s = (1/c) sum (-h)^k
  TruncatedSeries h = s * (1 / c) - s.with_body(MultiPoly::constant(s.ring(), 1));
  TruncatedSeries one = s.with_body(MultiPoly::constant(s.ring(), 1));
  TruncatedSeries acc = one;
  for (int k = 0; k < s.cutoff(); ++k) acc = one - h * acc;
  return acc * (1 / c);
}

TruncatedSeries series_reversion(const TruncatedSeries& s, std::size_t var) {
  const auto& ring = s.ring();
  MultiPoly x = MultiPoly::variable(ring, var);
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (i != var && s.grading()[i] != 0 && s.body().depends_on(i))
      throw UsageError("series_reversion: series depends on a second graded variable");
  MultiPoly low = s.body().truncate(s.grading(), 1);
  if (low != x)
    throw UsageError("series_reversion: series must be " + ring->var(var).name + " + higher order, got leading part " + low.to_string());
  TruncatedSeries r = s.with_body(x);
  TruncatedSeries xs = r;
  for (int i = 0; i < s.cutoff(); ++i) r = r - (s.compose(var, r) - xs);
  return r;
}

UCoeffs ucoeffs_mul(const UCoeffs& a, const UCoeffs& b, int cutoff) {
  UCoeffs r(cutoff + 1, BigRational(0));
  for (std::size_t i = 0; i < a.size() && int(i) <= cutoff; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && int(i + j) <= cutoff; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

UCoeffs ucoeffs_invert(const UCoeffs& a, int cutoff) {
  if (a.empty() || a[0] == 0) throw UsageError("series inverse needs a nonzero constant term");
  UCoeffs r(cutoff + 1, BigRational(0));
  r[0] = 1 / a[0];
  for (int n = 1; n <= cutoff; ++n) {
    BigRational s = 0;
    for (int k = 1; k <= n && k < int(a.size()); ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

UCoeffs ucoeffs_exp_scaled(const BigRational& c, int cutoff) {
  UCoeffs r(cutoff + 1);
  r[0] = 1;
  for (int n = 1; n <= cutoff; ++n) r[n] = r[n - 1] * c / n;
  return r;
}

std::vector<std::string> named_series_list() { return {"trivial", "todd", "tanh", "ahat"}; }

UCoeffs named_series(const std::string& name, int cutoff) {
  UCoeffs f(cutoff + 1, BigRational(0));
  if (cutoff >= 1) f[1] = 1;
  if (name == "trivial") return f;
  if (name == "todd") {
    UCoeffs e = ucoeffs_exp_scaled(-1, cutoff);
    for (int n = 1; n <= cutoff; ++n) f[n] = -e[n];
    return f;
  }
  if (name == "ahat") {
    UCoeffs ep = ucoeffs_exp_scaled(BigRational(1, 2), cutoff);
    UCoeffs em = ucoeffs_exp_scaled(BigRational(-1, 2), cutoff);
    for (int n = 0; n <= cutoff; ++n) f[n] = ep[n] - em[n];
    return f;
  }
  if (name == "tanh") {
    UCoeffs ep = ucoeffs_exp_scaled(1, cutoff + 1), em = ucoeffs_exp_scaled(-1, cutoff + 1);
    UCoeffs sh(cutoff + 2), ch(cutoff + 2);
    for (int n = 0; n <= cutoff + 1; ++n) {
      sh[n] = (ep[n] - em[n]) / 2;
      ch[n] = (ep[n] + em[n]) / 2;
    }
    return ucoeffs_mul(sh, ucoeffs_invert(ch, cutoff), cutoff);
  }
  throw UsageError("unknown named series '" + name + "' (known: trivial, todd, tanh, ahat)");
}

}  // namespace hsg
