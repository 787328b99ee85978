#pragma once

// Exact integer and rational linear algebra on GMP numbers.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ellcox {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

IntVector make_vector(std::initializer_list<long> values);
Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);
bool is_zero(const IntVector& v);

/// gcd of the entries; 0 for the zero vector.
Int content(const IntVector& v);
/// Divides by the content. The zero vector is returned unchanged.
IntVector primitive(IntVector v);
/// Clears denominators and divides by the content; sign is preserved.
IntVector primitive_integer(const RatVector& v);
RatVector to_rational(const IntVector& v);

std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  /// Columns must all have length `height`.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t height);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Bounds-checked access; throws std::out_of_range.
  Int& at(std::size_t r, std::size_t c);
  const Int& at(std::size_t r, std::size_t c) const;

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t r);

  IntMatrix without_column(std::size_t c) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Bareiss fraction-free determinant of a square matrix.
Int determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t width);

/// Reduced row echelon form over Q of the given rows, zero rows dropped.
std::vector<RatVector> rref(const std::vector<RatVector>& rows, std::size_t width);
/// Rows of the RREF scaled to primitive integer vectors; a canonical basis of the row space.
std::vector<IntVector> canonical_basis(const std::vector<IntVector>& rows, std::size_t width);

/// Solves A x = b over Q for square nonsingular A; nullopt if singular.
std::optional<RatVector> solve(const std::vector<RatVector>& a, const RatVector& b);

/// Component of v orthogonal to span(basis) under the standard dot product, as a primitive
/// integer vector.
IntVector project_orthogonal(const IntVector& v, const std::vector<IntVector>& basis);

struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// Smith normal form U*A*V = D with U, V unimodular and d1 | d2 | ... , di >= 0.
/// Pivot: smallest nonzero absolute value, ties broken by lowest (row, col).
SNFResult smith_normal_form(const IntMatrix& a);

/// Invariants of a finitely generated abelian group Z^rank + sum Z/t_i.
struct GroupInvariants {
  std::size_t rank = 0;
  std::vector<Int> torsion;  // each >= 2, t_i | t_{i+1}

  bool finite() const { return rank == 0; }
  bool operator==(const GroupInvariants&) const = default;
  /// "0", "Z", "Z^2", "Z/3Z", "Z + Z/2Z", ...
  std::string to_string() const;
};

/// Z^ambient_rank modulo the subgroup generated by `relations`.
GroupInvariants abelian_quotient(std::size_t ambient_rank, const std::vector<IntVector>& relations);

/// A rational phi with phi . v > 0 for every v, or nullopt if none exists.
/// Exact Fourier-Motzkin elimination; at most 8 coordinates.
std::optional<RatVector> strict_positive_functional(const std::vector<IntVector>& vectors);

}  // namespace ellcox
