#pragma once

#include <vector>

#include "hsg/series.hpp"

namespace hsg {

// Formal group law of complex cobordism with logarithm g(u) = u + sum b_n u^{n+1}.
// Ring: u, v, w (kind U) and b1..bD (kind B); truncation by total u-degree.
struct FGLData {
  int D = 0;
  RingPtr ring;
  TruncatedSeries log;      // g(u)
  TruncatedSeries exp;      // g^{-1}(u)
  TruncatedSeries F;        // F(u, v)
  TruncatedSeries inverse;  // i(u) with F(u, i(u)) = 0
  std::size_t u = 0, v = 1, w = 2;
};

FGLData formal_group_law(int D);
// [n](u) in the variable u of fgl.ring.
TruncatedSeries power_system(int n, const FGLData& fgl);
// F-sum of [n_q](u_q) over a ring u1..uk, b1..bD.
TruncatedSeries multi_bracket(const std::vector<int>& n, const FGLData& fgl);
// The same element via g^{-1}(sum n_q g(u_q)).
TruncatedSeries multi_bracket_via_log(const std::vector<int>& n, const FGLData& fgl);
// Moves a one-variable series in u of fgl.ring into another ring (u -> var, b_i -> b_i).
TruncatedSeries transport(const TruncatedSeries& s, const FGLData& fgl, const RingPtr& target,
                          std::size_t var);

enum class BasisDirection { AToB, BToA };

// Polynomials expressing a_i in the b_n (AToB) or b_n in the a_i (BToA), i = 1..D,
// from 1 + sum a_i x^i = x / g^{-1}(x).
std::vector<MultiPoly> basis_map(int D, BasisDirection dir);
// Rewrites a class over a_ring(D) in b_ring(D), or back.
MultiPoly basis_convert(const MultiPoly& cls, int D, BasisDirection dir);

// Values a_1..a_D with 1 + sum a_i x^i = x / f(x), f given by coefficients f[0..D+1].
std::vector<BigRational> specialize_genus(const UCoeffs& f, int D);

}  // namespace hsg
