#pragma once

#include <string>
#include <vector>

#include "hsg/structures.hpp"
#include "hsg/poly.hpp"

namespace hsg {

// Chern-Dold form of the universal toric genus. The form lives in
// genus_ring(k, cutoff, true) (x1..xk, a1..a_cutoff, t); the class is its
// t^n coefficient, rewritten over a_ring(n).
struct GenusExpansion {
  std::string space;
  std::string structure;
  int n = 0;
  int cutoff = 0;
  RingPtr ring;
  MultiPoly form;
  MultiPoly cls;
  std::vector<QVec> denominators;  // distinct primitive weight directions
};

// i_j = multiplicity of the part j; sum j * i_j = n.
using Omega = std::vector<int>;

struct CharNumber {
  Omega omega;
  BigRational value;
};

// All multi-indices of weight l, one per partition of l (length l; empty for l = 0).
std::vector<Omega> omegas_of_weight(int l);

// sum_p sign_p m_omega(weights_p) / prod weights_p written over the product of the
// distinct primitive weight directions, in x_ring(k).
struct LocalizedSum {
  MultiPoly numerator;
  std::vector<MultiPoly> denominator;
};
LocalizedSum localized_sum(int k, const std::vector<std::pair<int, std::vector<QVec>>>& points,
                           const Omega& omega);

// Validates sum j * omega[j-1] == n.
void check_omega(const Omega& omega, int n);
std::string omega_string(const Omega& omega);  // "(1,0,0,0,1,0)"
Omega parse_omega(const std::string& text);

GenusExpansion chern_dold_genus(const HomogeneousSpace& s, const StableStructure& c, int cutoff);
GenusExpansion chern_dold_genus(const HomogeneousSpace& s, const InvariantStructure& j, int cutoff);
// Class only (cutoff n).
MultiPoly cobordism_class(const HomogeneousSpace& s, const StableStructure& c);

// Generic route: per-point monomial symmetric functions, common denominator, exact division.
CharNumber s_omega(const HomogeneousSpace& s, const StableStructure& c, const Omega& omega);
CharNumber s_omega(const HomogeneousSpace& s, const InvariantStructure& j, const Omega& omega);
// U(n)/T^n only: (1/prod eps) * L(m_omega(eps_ij (x_i - x_j))).
CharNumber s_omega_divided_difference(const HomogeneousSpace& s, const InvariantStructure& j,
                                      const Omega& omega);
bool is_full_flag_type_a(const HomogeneousSpace& s);
BigRational top_s(const HomogeneousSpace& s, const StableStructure& c);
BigRational top_s(const HomogeneousSpace& s, const InvariantStructure& j);

// The localization sum for s_omega evaluated at a point off the weight hyperplanes.
BigRational s_omega_at(const HomogeneousSpace& s, const StableStructure& c, const Omega& omega,
                       const QVec& x);

// H/K as a space over the group of H (K < H < G, equal rank).
HomogeneousSpace fiber_space(const HomogeneousSpace& gk, const HomogeneousSpace& gh);
// The structure on G/K whose roots are the base roots together with the fiber roots.
InvariantStructure combined_structure(const HomogeneousSpace& gk, const HomogeneousSpace& gh,
                                      const InvariantStructure& fiber, const InvariantStructure& base);
// Throws UsageError unless the base roots are permuted by W_H.
void check_base_invariance(const HomogeneousSpace& gh, const InvariantStructure& base);
GenusExpansion twisted_product(const HomogeneousSpace& gk, const HomogeneousSpace& gh,
                               const InvariantStructure& fiber, const InvariantStructure& base,
                               int cutoff);
// Product of two forms over the same ring, truncated in t.
MultiPoly form_product(const MultiPoly& a, const MultiPoly& b, int cutoff);

// Sum over the fixed points in one H-coset of sign * prod_{slots in H} f(t L)/L.
// Returned per base coset of G/H, in the coset order of gh.
std::vector<MultiPoly> restricted_components(const HomogeneousSpace& gk, const HomogeneousSpace& gh,
                                             const StableStructure& c, int cutoff);

}  // namespace hsg
