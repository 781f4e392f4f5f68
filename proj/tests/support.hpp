#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hsg/catalog.hpp"
#include "oracle/oracle.hpp"

namespace testsupport {

inline hsg::QVec vec(std::initializer_list<long> v) { return hsg::int_vec(std::vector<long>(v)); }

// +-(x_i - x_j) inside consecutive coordinate blocks.
inline std::vector<hsg::QVec> block_roots(const std::vector<int>& blocks) {
  int dim = 0;
  for (int b : blocks) dim += b;
  std::vector<hsg::QVec> out;
  int start = 0;
  for (int b : blocks) {
    for (int i = start; i < start + b; ++i)
      for (int j = i + 1; j < start + b; ++j) {
        hsg::QVec v = hsg::zero_vec(std::size_t(dim));
        v[i] = 1;
        v[j] = -1;
        out.push_back(v);
        out.push_back(hsg::vec_neg(v));
      }
    start += b;
  }
  return out;
}

inline hsg::HomogeneousSpace block_space(const std::string& label, const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  return hsg::HomogeneousSpace::from_vectors(label, hsg::build_group("U(" + std::to_string(n) + ")"),
                                             block_roots(blocks));
}

inline oracle::Vec to_oracle(const hsg::QVec& v) { return oracle::Vec(v.begin(), v.end()); }

// Fixed-point data re-expressed for the oracle evaluators.
inline std::vector<oracle::Point> points_of(const hsg::HomogeneousSpace& s, const hsg::StableStructure& c) {
  std::vector<oracle::Point> out;
  for (const auto& fp : hsg::fixed_points(s, c)) {
    oracle::Point p;
    p.sign = fp.sign;
    for (const auto& w : fp.weights) p.w.push_back(to_oracle(w));
    out.push_back(p);
  }
  return out;
}

}  // namespace testsupport
