#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hsg {

using BigInt = mpz_class;
using BigRational = mpq_class;
using QVec = std::vector<BigRational>;
using QMatrix = std::vector<QVec>;

// Bad input from a caller (maps to CLI exit status 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical failure signal, e.g. a pole that did not cancel (exit status 2).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);
std::string to_string(const QVec& v);

bool is_integer(const BigRational& q);
BigInt to_integer(const BigRational& q);  // throws MathError if not integral

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_neg(const QVec& a);
QVec vec_scale(const QVec& a, const BigRational& c);
BigRational vec_dot(const QVec& a, const QVec& b);
bool vec_is_zero(const QVec& a);
QVec zero_vec(std::size_t n);
QVec int_vec(const std::vector<long>& v);

QMatrix identity_matrix(std::size_t n);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVec mat_apply(const QMatrix& m, const QVec& v);
QMatrix mat_transpose(const QMatrix& m);

// If b is a rational multiple of a, returns the factor c with b = c*a.
bool proportional(const QVec& a, const QVec& b, BigRational* factor = nullptr);

// Primitive integral representative of the line through v with positive first
// nonzero entry; v = scale * result.
QVec primitive_direction(const QVec& v, BigRational* scale = nullptr);

}  // namespace hsg
