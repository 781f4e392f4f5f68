#pragma once

#include <vector>

#include "hsg/poly.hpp"

namespace hsg {

// All permutations of {0..n-1} in lex order, with their signs.
std::vector<std::vector<int>> permutations(int n);
int permutation_sign(const std::vector<int>& perm);

// Vandermonde product prod_{i<j} (x_i - x_j) over variables [offset, offset + n).
MultiPoly vandermonde(const RingPtr& ring, std::size_t offset, std::size_t n);

// sum_sigma sign(sigma) sigma(p), sigma permuting the variables [offset, offset + n);
// other variables are coefficients.
MultiPoly antisymmetrize(const MultiPoly& p, std::size_t offset, std::size_t n);

// L p = antisymmetrize(p) / vandermonde, divided one linear factor at a time.
MultiPoly divided_difference_L(const MultiPoly& p, std::size_t offset, std::size_t n);

}  // namespace hsg
