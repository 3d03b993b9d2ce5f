#include "lapspec/int_matrix.hpp"

#include <utility>

#include "lapspec/error.hpp"

namespace lapspec {

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw InvalidArgument("matrix dimension must be at least 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()) {
  if (n_ == 0) throw InvalidArgument("matrix dimension must be at least 1");
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("matrix rows must form a square array");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
  IntMatrix m(n);
  for (auto& e : m.data_) e = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_upper_triangular() const {
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

std::vector<BigInt> IntMatrix::diagonal() const {
  std::vector<BigInt> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back((*this)(i, i));
  return out;
}

IntVector IntMatrix::row_sums() const {
  IntVector out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j);
  return out;
}

IntVector IntMatrix::col_sums() const {
  IntVector out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[j] += (*this)(i, j);
  return out;
}

IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw InvalidArgument("matrix dimension mismatch");
  for (std::size_t k = 0; k < lhs.data_.size(); ++k) lhs.data_[k] += rhs.data_[k];
  return lhs;
}

IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw InvalidArgument("matrix dimension mismatch");
  for (std::size_t k = 0; k < lhs.data_.size(); ++k) lhs.data_[k] -= rhs.data_[k];
  return lhs;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw InvalidArgument("matrix dimension mismatch");
  const std::size_t n = lhs.n_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

IntMatrix operator*(const BigInt& scalar, IntMatrix m) {
  for (auto& e : m.data_) e *= scalar;
  return m;
}

BigInt det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix a = m;
  BigInt previous_pivot = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot_row = k + 1;
      while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
      if (pivot_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees this division is exact.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous_pivot;
      }
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  return negate ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  // Descending coefficients of det(xI - A_r), A_r the leading r x r block.
  std::vector<BigInt> current{BigInt(1), BigInt(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // First column of the Toeplitz factor: 1, -a_rr, -R C, -R A_r C, ...
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    std::vector<BigInt> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * w[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<BigInt> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * w[j];
      w = std::move(next);
    }
    std::vector<BigInt> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += toeplitz[i - j] * current[j];
    current = std::move(updated);
  }
  // det(A - xI) = (-1)^n det(xI - A); flip to ascending order.
  std::vector<BigInt> ascending(n + 1);
  const bool flip = (n % 2) == 1;
  for (std::size_t k = 0; k <= n; ++k) ascending[k] = flip ? BigInt(-current[n - k]) : current[n - k];
  return IntPolynomial(std::move(ascending));
}

IntMatrix delete_row_col(const IntMatrix& m, std::size_t i, std::size_t j) {
  const std::size_t n = m.dim();
  if (n < 2) throw InvalidArgument("minor needs a matrix of dimension at least 2");
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("minor index out of range");
  IntMatrix out(n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == i - 1) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == j - 1) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

BigInt minor_det(const IntMatrix& m, std::size_t i, std::size_t j) { return det(delete_row_col(m, i, j)); }

IntMatrix rank_one_add(const IntMatrix& m, const IntVector& u, const IntVector& v) {
  const std::size_t n = m.dim();
  if (u.size() != n || v.size() != n) throw InvalidArgument("rank-one update: vector length mismatch");
  IntMatrix out = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out(i, j) += u[i] * v[j];
  }
  return out;
}

}  // namespace lapspec
