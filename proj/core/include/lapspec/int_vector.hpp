#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lapspec/bigint.hpp"

namespace lapspec {

/// Dense column vector of exact integers.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n) {}
  explicit IntVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<BigInt> entries) : entries_(entries) {}

  /// The all-ones vector 1_n.
  static IntVector ones(std::size_t n) { return IntVector(std::vector<BigInt>(n, BigInt(1))); }

  std::size_t size() const noexcept { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  BigInt& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  BigInt sum() const {
    BigInt total = 0;
    for (const auto& e : entries_) total += e;
    return total;
  }

  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  std::vector<BigInt> entries_;
};

}  // namespace lapspec
