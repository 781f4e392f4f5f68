#pragma once

#include <string>
#include <vector>

#include "hsg/toricgenus.hpp"

namespace hsg {

struct G0Entry {
  int i1 = 0, i2 = 0;
  std::string x_monomial;  // e.g. "x1^2*x2^4"
  MultiPoly computed;      // coefficient, a polynomial in the a_i
  MultiPoly formula;        // the closed formula being checked
  bool matches = false;
};

struct RestrictedGenusReport {
  std::string which;  // "sp-flag" or "cp-odd"
  std::string space, structure, base;
  int cutoff = 0;
  // Restricted genus at each fixed point of the base, t = 1, over genus_ring(2, cutoff, false).
  std::vector<MultiPoly> components;
  MultiPoly aggregate;   // sum of the components over the base fixed points
  MultiPoly expansion;   // the reported Chern-Dold expansion
  std::vector<G0Entry> table;
  std::vector<std::string> notes;  // discrepancies against the closed formulas
};

// Restricted genus over HP^1 for Sp(2)/T^2 ("sp-flag") or Sp(2)/(Sp(1) x U(1)) ("cp-odd").
RestrictedGenusReport restricted_genus_hp(int n, const std::string& which, int max_index = 3);

struct AssignmentCheck {
  std::string signs;  // one '+' or '-' per unknown
  bool passes_t1 = false;
  bool admissible = false;
  int failing_degree = -1;  // first t-degree with a nonvanishing coefficient
  std::string failing_omega;
};

struct ObstructionReport {
  int n = 0;
  std::string space;
  std::vector<std::string> unknowns;   // e2..e_{n+1}, d2..d_{n+1}
  std::vector<std::string> equations;  // linear conditions from the t^1 coefficient, reduced
  std::vector<std::vector<BigRational>> nullspace;
  std::vector<AssignmentCheck> assignments;
  bool admissible = false;
  std::string witness;
};

// Searches all sign choices eps_j (x1 + x_j), delta_j (x1 - x_j) on HP^n = Sp(n+1)/(Sp(1) x Sp(n)).
// An assignment is admissible when every t^l coefficient, l < 2n, of the localized
// Chern-Dold sum vanishes. The t^1 condition is also solved as a linear system.
ObstructionReport hp_obstruction_search(int n);

}  // namespace hsg
