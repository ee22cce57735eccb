#pragma once

// Exact integer linear algebra. All arithmetic is arbitrary precision; the
// design envelope is n <= 6, so the algorithms favour clarity over asymptotics.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace delzant {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using IntVec = std::vector<BigInt>;
using RationalVec = std::vector<Rational>;

IntVec make_int_vec(std::initializer_list<long> entries);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& columns);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& m, const IntVec& v);

BigInt dot(const IntVec& a, const IntVec& b);
/// gcd of the entries (non-negative; zero for the zero vector).
BigInt content(const IntVec& v);
bool is_zero(const IntVec& v);

/// A nonzero integer vector whose entries have gcd 1. Sign is free; the
/// canonical representative (first nonzero entry positive) comes from
/// primitive_part.
class PrimitiveVec {
 public:
  /// Throws ZeroVector for zero input and NonPrimitiveNormal when gcd != 1.
  static PrimitiveVec checked(IntVec v);

  PrimitiveVec negated() const;

  const IntVec& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const PrimitiveVec&, const PrimitiveVec&) = default;
  friend auto operator<=>(const PrimitiveVec& a, const PrimitiveVec& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  friend PrimitiveVec primitive_part(const IntVec& v);
  explicit PrimitiveVec(IntVec v) : entries_(std::move(v)) {}
  IntVec entries_;
};

/// v / gcd(v), with the sign flipped so the first nonzero entry is positive.
PrimitiveVec primitive_part(const IntVec& v);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct HermiteForm {
  IntMatrix hermite;    // row-style HNF: echelon, positive pivots, reduced above
  IntMatrix transform;  // unimodular, transform * input == hermite
  std::size_t rank = 0;
};

HermiteForm hermite_form(const IntMatrix& m);

/// Smith invariant factors d_1 | d_2 | ... (nonzero ones only, all positive).
std::vector<BigInt> smith_invariants(const IntMatrix& m);

struct HermiteSmith {
  HermiteForm hermite;
  std::vector<BigInt> invariant_factors;
};

HermiteSmith hermite_smith(const IntMatrix& m);

/// Basis of the lattice {q in Z^n : M q = 0}, canonicalised as the rows of the
/// Hermite normal form of that lattice.
std::vector<PrimitiveVec> integer_kernel_basis(const IntMatrix& m);

std::string to_string(const IntVec& v);
std::string to_string(const RationalVec& v);
std::string to_string(const IntMatrix& m);
long to_long(const BigInt& value);

}  // namespace delzant
