#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsg/ratfun.hpp"
#include "hsg/series.hpp"
#include "hsg/structures.hpp"

namespace hsg {

// Coefficients of y^0..y^n.
using YPolynomial = std::vector<BigInt>;
std::string to_string(const YPolynomial& p);

// Number of weights at the point with negative pairing against ord.v.
int index(const HomogeneousSpace& s, const FixedPointData& fp, const Ordering& ord);

struct ChiYRow {
  int point = 0;
  std::string label;
  int ind = 0;
  int sign = 1;
};

YPolynomial chi_y(const HomogeneousSpace& s, const StableStructure& c, const Ordering& ord,
                  std::vector<ChiYRow>* rows = nullptr);
YPolynomial chi_y(const HomogeneousSpace& s, const StableStructure& c);
BigInt signature(const HomogeneousSpace& s, const StableStructure& c);
BigInt todd(const HomogeneousSpace& s, const StableStructure& c);

// f(u) = p(u)/q(u); `truncated` marks a polynomial truncation of a power series.
struct RigiditySeries {
  RationalFunction f;
  bool truncated = false;
  std::string text;
};
RigiditySeries parse_rigidity_series(const std::string& text);
void check_normalized(const RigiditySeries& f);

// sum_w sign(w) prod_j 1/f(<Lambda_j(w), u>), exactly.
BigRational rigidity_eval(const HomogeneousSpace& s, const StableStructure& c, const RigiditySeries& f,
                          const QVec& u);

struct SymbolicRigidity {
  MultiPoly numerator, denominator;  // the sum equals numerator / denominator
  bool zero = false;
  bool constant = false;
  BigRational value;  // when constant
};
SymbolicRigidity rigidity_symbolic(const HomogeneousSpace& s, const StableStructure& c,
                                   const RigiditySeries& f);

// Seeded points with integer coordinates in [-9, 9] avoiding the zeros of
// <root, u> and of p(+-<root, u>) for every root.
std::vector<QVec> sample_points(const HomogeneousSpace& s, const RigiditySeries& f, std::size_t count,
                                std::uint64_t seed);

struct RigidityVerdict {
  std::string verdict;  // "certified zero", "consistent to cutoff", "not covered"
  bool pairing_found = false;
  std::string pairing;  // description of the involution
  std::vector<std::pair<int, int>> pairs;
  std::uint64_t seed = 0;
  std::vector<std::pair<QVec, BigRational>> samples;
  bool samples_zero = true;
  bool samples_constant = true;
};

RigidityVerdict rigidity_certify_odd(const HomogeneousSpace& s, const StableStructure& c,
                                     const RigiditySeries& f, std::size_t sample_count,
                                     std::uint64_t seed = 1);

struct IndependenceResult {
  bool equal = true;
  std::vector<QVec> points;
  std::vector<std::pair<BigRational, BigRational>> values;
};
IndependenceResult structure_independence_check(const HomogeneousSpace& s, const StableStructure& s1,
                                                const StableStructure& s2, const RigiditySeries& f,
                                                const std::vector<QVec>& points);

// Value of a class (over variables named a1, a2, ...) under the genus with series f.
BigRational genus_of_class(const MultiPoly& cls, const UCoeffs& f, int D);

}  // namespace hsg
