#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lapspec/graph.hpp"
#include "lapspec/int_vector.hpp"

namespace lapspec {

/// Seeded generator whose output is identical on every platform.
/// std::mt19937_64 is fully specified; the bounded draws are done here
/// rather than through the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// G(n, 1/2). With `max_edges`, redraws until the edge count fits.
Graph random_graph(Rng& rng, std::size_t n, std::optional<std::size_t> max_edges = std::nullopt);

/// Entries uniform in [lo, hi].
IntVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

/// Adjusts entries of v, keeping each within [lo, hi], so that sum(v) equals
/// `target`. Returns false (leaving v unchanged) if that is impossible.
bool steer_sum(IntVector& v, const BigInt& target, std::int64_t lo, std::int64_t hi);

}  // namespace lapspec
