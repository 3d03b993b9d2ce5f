#include "lapspec/spectrum.hpp"

namespace lapspec {

Spectrum Spectrum::from_values(const std::vector<BigInt>& values) {
  Spectrum s;
  for (const auto& v : values) s.add(v);
  return s;
}

void Spectrum::add(const BigInt& value, std::size_t count) {
  if (count == 0) return;
  entries_[value] += count;
}

std::size_t Spectrum::multiplicity(const BigInt& value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? 0 : it->second;
}

std::size_t Spectrum::size() const noexcept {
  std::size_t total = 0;
  for (const auto& [value, count] : entries_) total += count;
  return total;
}

std::string Spectrum::to_string() const {
  std::string out;
  for (const auto& [value, count] : entries_) {
    if (!out.empty()) out += ' ';
    out += value.str() + "^" + std::to_string(count);
  }
  return out;
}

}  // namespace lapspec
