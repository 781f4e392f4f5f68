#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsg/rational.hpp"

namespace hsg {

enum class VarKind { X, U, A, B, T, Y, Other };

struct Var {
  std::string name;
  int weight = 1;
  VarKind kind = VarKind::Other;
};

inline constexpr std::size_t kMaxVars = 32;

// Ordered list of indeterminates. Polynomials only combine over equal rings.
class Ring {
 public:
  explicit Ring(std::vector<Var> vars);
  std::size_t size() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Var>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;
  std::vector<int> weights() const;
  std::vector<int> kind_mask(std::initializer_list<VarKind> kinds) const;
  bool operator==(const Ring& o) const;

 private:
  std::vector<Var> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Var> vars);
// x1..xk
RingPtr x_ring(int k, const std::string& prefix = "x", VarKind kind = VarKind::X);
// x1..xk, a1..aD and optionally t (canonical block order x, u, a, t, y)
RingPtr genus_ring(int k, int D, bool with_t);
RingPtr a_ring(int D);
RingPtr b_ring(int D);
bool same_ring(const RingPtr& a, const RingPtr& b);

using Mono = std::array<std::uint8_t, kMaxVars>;

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

class MultiPoly {
 public:
  using TermMap = std::unordered_map<Mono, BigRational, MonoHash>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring);
  static MultiPoly constant(RingPtr ring, const BigRational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index, int exponent = 1);
  // sum_i coeffs[i] * var(offset + i)
  static MultiPoly linear(RingPtr ring, const QVec& coeffs, std::size_t offset = 0);
  static Mono zero_mono();

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Mono& m, const BigRational& c);
  BigRational coeff(const Mono& m) const;
  BigRational constant_term() const;
  bool is_constant() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const BigRational& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int e) const;
  // Product truncated to weighted degree <= cutoff under `grading`.
  MultiPoly mul_truncated(const MultiPoly& o, const std::vector<int>& grading, int cutoff) const;
  MultiPoly truncate(const std::vector<int>& grading, int cutoff) const;
  MultiPoly homogeneous_part(const std::vector<int>& grading, int degree) const;
  // Max weighted degree; -1 for the zero polynomial.
  int degree(const std::vector<int>& grading) const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  // Coefficient of var^e as a polynomial in the remaining variables.
  MultiPoly coefficient_of(std::size_t var, int e) const;
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  // Re-expresses the polynomial over `target`; var_map[i] is the target index of variable i.
  MultiPoly map_ring(RingPtr target, const std::vector<std::size_t>& var_map) const;
  // x_i -> sum_j m[j][i] x_j on the variables [offset, offset + m.size()).
  MultiPoly linear_substitute(const QMatrix& m, std::size_t offset = 0) const;
  MultiPoly permute_vars(const std::vector<std::size_t>& perm) const;

  BigRational evaluate(const QVec& point) const;
  MultiPoly partial_evaluate(std::size_t var, const BigRational& value) const;

  // Terms sorted graded-lex descending (ring weights first, then lex).
  std::vector<std::pair<Mono, BigRational>> sorted_terms() const;
  std::string to_string() const;
  static MultiPoly parse(RingPtr ring, const std::string& text);
  std::string to_json() const;
  static MultiPoly from_json(RingPtr ring, const std::string& json);

 private:
  RingPtr ring_;
  TermMap terms_;
};

int mono_degree(const Mono& m, const std::vector<int>& grading, std::size_t nvars);
std::string mono_to_string(const Mono& m, const Ring& ring);

// q with num = q * den exactly; throws MathError("pole not cancelled ...") otherwise.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);
// Division by a polynomial of total degree one (synthetic division in the pivot variable).
MultiPoly divide_linear(const MultiPoly& num, const MultiPoly& lin);
// Generic division with remainder check, lex order.
MultiPoly divide_exact_lex(const MultiPoly& num, const MultiPoly& den);

// Substitutes images[i] (polynomials over `target`) for variable i of p's ring.
MultiPoly compose_vars(const MultiPoly& p, const RingPtr& target, const std::vector<MultiPoly>& images);

// Quotient of polynomials evaluated at a point.
BigRational evaluate_quotient(const MultiPoly& num, const std::vector<MultiPoly>& den_factors,
                              const QVec& point);

}  // namespace hsg
