#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lapspec/bigint.hpp"

namespace lapspec {

/// Multiset of integer eigenvalues, kept as value -> multiplicity.
class Spectrum {
 public:
  Spectrum() = default;

  static Spectrum from_values(const std::vector<BigInt>& values);

  /// Adds `count` copies of `value`; merges with an existing entry.
  void add(const BigInt& value, std::size_t count = 1);

  std::size_t multiplicity(const BigInt& value) const;
  /// Sum of multiplicities.
  std::size_t size() const noexcept;
  const std::map<BigInt, std::size_t>& entries() const noexcept { return entries_; }

  /// "value^multiplicity" terms sorted by value, e.g. "0^1 3^4 5^4 8^1".
  std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::map<BigInt, std::size_t> entries_;
};

}  // namespace lapspec
