#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hsg/rational.hpp"

namespace hsg {

inline constexpr std::size_t kDefaultWeylCap = 100000;

// Root system of a compact group in canonical coordinates.
struct GroupData {
  std::string label;
  int rank = 0;        // dimension of the maximal torus
  int dim = 0;         // coordinate dimension
  std::vector<QVec> roots;
  std::vector<int> simple;  // indices into roots
  QMatrix gram;             // inner product used for reflections
  std::string metadata;     // e.g. "trace-zero" for SU(n)

  // reflection_perm[a][r] = index of s_a(root r)
  std::vector<std::vector<int>> reflection_perm;

  int root_index(const QVec& v) const;  // -1 if v is not a root
  int negative_index(int r) const { return neg_[r]; }
  QVec reflect(int a, const QVec& v) const;
  QMatrix reflection_matrix(int a) const;
  BigRational inner(const QVec& a, const QVec& b) const;

  // Fills simple roots, reflection permutations and lookup tables; validates invariants.
  void finalize();

 private:
  std::map<QVec, int> index_;
  std::vector<int> neg_;
};

using GroupPtr = std::shared_ptr<const GroupData>;

// "U(n)", "SU(n)", "Sp(n)", "SO(m)", "G2".
GroupData build_group(const std::string& spec);
// Group given by an explicit root set; gram defaults to the identity.
GroupData group_from_roots(const std::string& label, int dim, std::vector<QVec> roots,
                           QMatrix gram = {});

// |W| from the classification of the irreducible components (no enumeration).
BigInt weyl_order(const GroupData& g);
// Irreducible components as lists of simple-root indices, with their Cartan type, e.g. "A2".
std::vector<std::pair<std::string, std::vector<int>>> irreducible_components(const GroupData& g);

struct Ordering {
  QVec v;
};

Ordering default_ordering(const GroupData& g);
int root_sign(const QVec& root, const Ordering& ord);  // throws UsageError on zero pairing
bool is_generic(const Ordering& ord, const GroupData& g);
std::vector<int> positive_roots(const GroupData& g, const Ordering& ord);

// A Weyl group element: permutation of the root indices plus its lex-minimal reduced word.
struct WeylElement {
  std::vector<int> perm;  // w(root r) = root perm[r]
  std::vector<int> word;  // generator positions, w = s_{word[0]} ... s_{word[last]}
  int length() const { return int(word.size()); }
};

// Group generated by reflections in the given roots of g, acting on g's roots.
class WeylGroup {
 public:
  WeylGroup() = default;
  // Breadth-first closure; elements come out in (length, lex word) order.
  static WeylGroup generate(const GroupPtr& g, std::vector<int> generators,
                            std::size_t cap = kDefaultWeylCap);

  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  const std::vector<int>& generators() const { return gens_; }
  const GroupPtr& group() const { return g_; }
  int find(const std::vector<int>& perm) const;  // -1 if absent

  QMatrix matrix(std::size_t i) const;
  QVec apply(std::size_t i, const QVec& v) const;
  std::string word_string(std::size_t i) const;  // e.g. "s1s2s1", "e"

 private:
  GroupPtr g_;
  std::vector<int> gens_;
  std::vector<WeylElement> elems_;
  std::map<std::vector<int>, int> lookup_;
};

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner);

// For all a, b in the set with a + b a root of the ambient group, a + b is in the set.
bool is_closed_system(const std::vector<QVec>& roots, const GroupData& ambient);

// For type A groups: the permutation of coordinates induced by a root permutation.
std::vector<int> coordinate_permutation(const GroupData& g, const QMatrix& m);

}  // namespace hsg
