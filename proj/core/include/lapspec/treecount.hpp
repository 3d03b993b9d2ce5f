#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lapspec/bigint.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/int_vector.hpp"

namespace lapspec {

/// (-1)^(i+j) det(L_{i,j}), 1-based deletion indices. Needs n >= 2.
BigInt tau_cofactor(const Graph& g, Vertex i, Vertex j);

/// det(L + u v^T) / (sum(u) sum(v)). Throws InvalidArgument when either sum
/// is zero and DivisibilityError if the quotient is not exact.
BigInt tau_rank_one(const Graph& g, const IntVector& u, const IntVector& v);

/// -c_1 / n where c_1 is the linear coefficient of det(L - xI).
BigInt tau_charpoly(const Graph& g);

inline constexpr std::size_t kBruteForceEdgeLimit = 24;

/// Counts (n-1)-edge subsets that form a spanning tree, straight from the
/// definition. Throws BoundExceeded above `edge_limit` edges.
BigInt tau_bruteforce(const Graph& g, std::size_t edge_limit = kBruteForceEdgeLimit);

/// n^(n-2); 1 for n = 1.
BigInt tau_cayley(std::size_t n);

struct MethodResult {
  std::string method;
  std::optional<BigInt> count;
  /// Why `count` is empty.
  std::string skipped_reason;
};

struct TreeCountReport {
  std::size_t n = 0;
  std::size_t edges = 0;
  /// In the fixed order cofactor, rankone, charpoly, bruteforce.
  std::vector<MethodResult> methods;
  /// True iff every computed count is equal.
  bool agreement = false;

  const MethodResult* find(const std::string& method) const;
};

/// Runs every applicable counter with u = v = 1_n and deletion (1, 1).
TreeCountReport compare_methods(const Graph& g);

}  // namespace lapspec
