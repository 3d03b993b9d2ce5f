#include "lapspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lapspec/error.hpp"

namespace lapspec {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t k) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = 1;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& p) {
  IntPolynomial result = p;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_ascending_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ' ';
    out += coeffs_[k].str();
  }
  return out;
}

std::string IntPolynomial::to_pretty_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (k == 1) power = "x";
    if (k > 1) power = "x^" + std::to_string(k);
    if (power.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.str() + "*" + power;
    }
  }
  return out;
}

IntPolynomial poly_linear(const BigInt& c, LinearSign sign) {
  return IntPolynomial(std::vector<BigInt>{c, BigInt(sign == LinearSign::Minus ? -1 : 1)});
}

IntPolynomial parse_ascending(const std::string& text) {
  std::istringstream in(text);
  std::vector<BigInt> coeffs;
  std::string token;
  while (in >> token) {
    const bool digits = std::all_of(token.begin() + (token[0] == '-' ? 1 : 0), token.end(),
                                    [](char ch) { return ch >= '0' && ch <= '9'; });
    if (!digits || token == "-") throw InvalidArgument("bad coefficient '" + token + "'");
    coeffs.emplace_back(token);
  }
  if (coeffs.empty()) throw InvalidArgument("empty polynomial text");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace lapspec
