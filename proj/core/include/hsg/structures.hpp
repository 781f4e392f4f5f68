#pragma once

#include <string>
#include <vector>

#include "hsg/space.hpp"

namespace hsg {

inline constexpr int kDefaultStructureCap = 20;

// One sign per isotropy summand, canonical summand order, e.g. "+-+".
struct InvariantStructure {
  std::string signs;
};

// Signs per complementary slot for an invariant structure.
std::vector<int> slot_signs(const HomogeneousSpace& s, const InvariantStructure& j);
void validate(const HomogeneousSpace& s, const InvariantStructure& j);
InvariantStructure conjugate(const InvariantStructure& j);
InvariantStructure standard_structure(const HomogeneousSpace& s);  // all '+'
// Roots eps_i alpha_i of the structure.
std::vector<QVec> structure_roots(const HomogeneousSpace& s, const InvariantStructure& j);
std::vector<int> structure_root_indices(const HomogeneousSpace& s, const InvariantStructure& j);
// Recovers the sign string from an explicit list of structure roots.
InvariantStructure structure_from_roots(const HomogeneousSpace& s, const std::vector<QVec>& roots);

// Per-fixed-point sign data over a reference structure.
struct StableStructure {
  std::string name;
  InvariantStructure base;
  std::vector<std::vector<int>> eps;  // [point][slot]; empty means base signs everywhere
  int global = 1;
  std::vector<int> reps;              // explicit W_G elements per point; empty means coset_reps()
};

StableStructure as_stable(const HomogeneousSpace& s, const InvariantStructure& j);
void validate(const HomogeneousSpace& s, const StableStructure& c);
// Global sign flip composed with flipping every weight: the conjugate stable structure.
StableStructure conjugate(const HomogeneousSpace& s, const StableStructure& c);

struct FixedPointData {
  int point = 0;             // position in the coset list
  int rep = 0;               // W_G element index
  std::vector<int> roots;    // weight j as a root index of G
  std::vector<QVec> weights; // Lambda_j(w) = eps_j(w) w(alpha_j)
  std::vector<int> eps;      // eps_j(w)
  int sign = 1;              // global eps times prod eps_j(w)
};

std::vector<FixedPointData> fixed_points(const HomogeneousSpace& s, const StableStructure& c);
std::vector<FixedPointData> fixed_points(const HomogeneousSpace& s, const InvariantStructure& j);

std::vector<InvariantStructure> enumerate_structures(const HomogeneousSpace& s,
                                                     int cap = kDefaultStructureCap);
QVec first_chern(const HomogeneousSpace& s, const InvariantStructure& j);
// Structures with vanishing first Chern class, in enumeration order; limit 0 means all.
std::vector<InvariantStructure> find_su_structures(const HomogeneousSpace& s,
                                                   int cap = kDefaultStructureCap,
                                                   std::size_t limit = 0);
bool c1_divisibility(const HomogeneousSpace& s, const InvariantStructure& j, long N);
bool is_integrable(const HomogeneousSpace& s, const InvariantStructure& j);

struct PairingRow {
  int point = 0, partner = 0;
  std::string point_label, partner_label;
  bool negated_present = false;   // -Lambda_alpha(w) is a weight at the partner
  int flips = 0;                  // weights at w whose negative is a weight at the partner
  std::vector<char> group;        // per slot: 'I' kept, 'II' flipped (stored 'F'), 'III' moved (stored 'M')
  struct Moved {
    int slot;
    QVec partner_weight;
    std::string relation;  // "sum" or "difference"
    BigRational multiple;  // relation value = multiple * w(alpha)
  };
  std::vector<Moved> moved;
  bool moved_ok = true;
};

struct PairingReport {
  int slot = 0;
  QVec alpha;
  bool involution = true;  // the pairing w <-> w s_alpha is a fixed-point-free involution on cosets
  std::vector<PairingRow> rows;
  bool all_negated_present() const;
  bool all_odd() const;
  bool all_moved_ok() const;
};

PairingReport verify_pairing(const HomogeneousSpace& s, const StableStructure& c, int slot);

}  // namespace hsg
