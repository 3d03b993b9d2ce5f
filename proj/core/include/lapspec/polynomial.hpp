#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lapspec/bigint.hpp"

namespace lapspec {

enum class LinearSign { Minus, Plus };

/// Univariate polynomial in x with exact integer coefficients.
///
/// Coefficients are stored ascending (index k holds the x^k coefficient)
/// and kept normalized: no trailing zeros, the zero polynomial has none.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial constant(const BigInt& c);
  /// x^k.
  static IntPolynomial monomial(std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^k; zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial pow(std::size_t e) const;

  /// Ascending space-separated coefficients, e.g. "0 -2 1". Zero prints "0".
  std::string to_ascending_string() const;
  /// Human form, e.g. "-2*x + x^2".
  std::string to_pretty_string() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator-(const IntPolynomial& p);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
inline bool poly_eq(const IntPolynomial& p, const IntPolynomial& q) { return p == q; }

/// (c - x) for LinearSign::Minus, (c + x) for LinearSign::Plus.
IntPolynomial poly_linear(const BigInt& c, LinearSign sign);

inline BigInt coefficient(const IntPolynomial& p, std::size_t k) { return p.coefficient(k); }

/// Parses the ascending form; throws InvalidArgument on bad tokens.
IntPolynomial parse_ascending(const std::string& text);

}  // namespace lapspec
