#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hsg/rootdata.hpp"

namespace hsg {

// An isotropy summand: a pair {C, -C} of complementary-root classes.
struct Summand {
  std::vector<int> roots;  // root indices of the canonical class C
  std::vector<int> slots;  // complementary slots belonging to the summand
  std::vector<int> orient; // per slot: +1 if the slot root lies in C, -1 if in -C
  bool self_conjugate = false;  // C == -C: no invariant sign choice exists
};

// G/H with rk H = rk G, H given by a closed subsystem of the roots of G.
class HomogeneousSpace {
 public:
  HomogeneousSpace(std::string label, GroupPtr g, std::vector<int> h_roots);
  static HomogeneousSpace from_vectors(const std::string& label, const GroupData& g,
                                       const std::vector<QVec>& h_roots);

  const std::string& label() const { return label_; }
  const GroupData& g() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  const std::vector<int>& h_roots() const { return h_; }
  std::vector<QVec> h_root_vectors() const;
  // Positive representatives of the complementary roots, in root order.
  const std::vector<int>& comp() const { return comp_; }
  QVec comp_root(int slot) const { return g_->roots[comp_[slot]]; }
  int n() const { return int(comp_.size()); }
  bool is_h_root(int r) const { return in_h_[r]; }
  // Slot of a complementary root index and the sign relating it to the slot's root.
  std::pair<int, int> slot_of(int r) const { return slot_of_[r]; }

  const std::vector<Summand>& summands() const { return summands_; }
  bool has_invariant_structure() const;
  const std::vector<int>& h_simple() const { return h_simple_; }

  // H as a group in the same coordinates.
  GroupPtr h_group() const;
  BigInt euler() const;

  const WeylGroup& weyl_g() const;
  const WeylGroup& weyl_h() const;
  // Indices into weyl_g(); minimal length, ties broken by lex word.
  const std::vector<int>& coset_reps() const;
  // Coset number of a W_G element.
  int coset_of(int element) const;

  std::size_t weyl_cap = kDefaultWeylCap;

 private:
  struct Cache {
    std::once_flag h_once, wg_once, wh_once, cos_once;
    GroupPtr h;
    WeylGroup wg, wh;
    std::vector<int> reps, coset_index;
  };
  std::string label_;
  GroupPtr g_;
  std::vector<int> h_;
  std::vector<bool> in_h_;
  std::vector<int> comp_;
  std::vector<std::pair<int, int>> slot_of_;
  std::vector<Summand> summands_;
  std::vector<int> h_simple_;
  std::shared_ptr<Cache> cache_;
};

// One-line notation "213" for permutation-matrix Weyl elements, the word otherwise.
std::string element_label(const HomogeneousSpace& s, int element);

}  // namespace hsg
