#include "lapspec/random.hpp"

#include <algorithm>
#include <limits>

#include "lapspec/error.hpp"

namespace lapspec {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("Rng::between needs lo <= hi");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Graph random_graph(Rng& rng, std::size_t n, std::optional<std::size_t> max_edges) {
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j)
        if (rng.below(2) == 1) edges.push_back({i, j});
    if (!max_edges || edges.size() <= *max_edges) return Graph(n, edges);
  }
}

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.between(lo, hi);
  return v;
}

bool steer_sum(IntVector& v, const BigInt& target, std::int64_t lo, std::int64_t hi) {
  const BigInt n = v.size();
  if (target < n * lo || target > n * hi) return false;
  BigInt gap = target - v.sum();
  for (std::size_t i = 0; i < v.size() && gap != 0; ++i) {
    const BigInt room = gap > 0 ? BigInt(hi - v[i]) : BigInt(lo - v[i]);
    const BigInt step = gap > 0 ? std::min(gap, room) : std::max(gap, room);
    v[i] += step;
    gap -= step;
  }
  return true;
}

}  // namespace lapspec
