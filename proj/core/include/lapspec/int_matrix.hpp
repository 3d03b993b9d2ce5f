#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lapspec/bigint.hpp"
#include "lapspec/int_vector.hpp"
#include "lapspec/polynomial.hpp"

namespace lapspec {

/// Dense square matrix of exact integers, stored row-major.
///
/// Element access through operator() is 0-based like any C++ container.
/// Functions that mirror the Matrix Tree Theorem (minor_det) take 1-based
/// row and column numbers instead, matching vertex labels.
class IntMatrix {
 public:
  /// Zero matrix of dimension n >= 1.
  explicit IntMatrix(std::size_t n);
  /// Builds from rows; throws InvalidArgument unless the rows form a
  /// nonempty square array.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n);

  std::size_t dim() const noexcept { return n_; }

  const BigInt& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  BigInt& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

  bool is_symmetric() const;
  bool is_upper_triangular() const;
  std::vector<BigInt> diagonal() const;
  IntVector row_sums() const;
  IntVector col_sums() const;

  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const BigInt& scalar, IntMatrix m);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt det(const IntMatrix& m);

/// det(m - x I) by Berkowitz's division-free algorithm. Degree n, leading
/// coefficient (-1)^n.
IntPolynomial char_poly(const IntMatrix& m);

/// The matrix with row i and column j removed (1-based). Needs n >= 2.
IntMatrix delete_row_col(const IntMatrix& m, std::size_t i, std::size_t j);

/// Determinant of the (i, j) deletion, 1-based indices.
BigInt minor_det(const IntMatrix& m, std::size_t i, std::size_t j);

/// m + u v^T.
IntMatrix rank_one_add(const IntMatrix& m, const IntVector& u, const IntVector& v);

}  // namespace lapspec
