#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lapspec/int_matrix.hpp"

namespace lapspec {

/// Vertex label in [1, n].
using Vertex = std::size_t;

/// Unordered pair stored with lo < hi.
struct Edge {
  Vertex lo;
  Vertex hi;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n);
  /// Throws InvalidArgument on loops, duplicate pairs or out-of-range
  /// endpoints. Endpoint order within a pair does not matter.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::size_t degree(Vertex v) const;

  /// A copy with {a, b} added; throws if it is already present.
  Graph with_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

enum class ThresholdStep : char { Isolated = 'I', Dominating = 'D' };

/// Construction word of a threshold graph: one tag per vertex after the
/// initial vertex, so a word of length k builds a graph on k + 1 vertices.
class ThresholdSequence {
 public:
  ThresholdSequence() = default;
  explicit ThresholdSequence(std::vector<ThresholdStep> steps) : steps_(std::move(steps)) {}

  /// From a word over {I, D}; throws InvalidArgument on any other letter.
  static ThresholdSequence parse(std::string_view word);

  const std::vector<ThresholdStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  std::size_t vertex_count() const noexcept { return steps_.size() + 1; }
  /// Tag of vertex v >= 2.
  ThresholdStep tag(Vertex v) const { return steps_.at(v - 2); }

  std::string to_string() const;

  friend bool operator==(const ThresholdSequence&, const ThresholdSequence&) = default;

 private:
  std::vector<ThresholdStep> steps_;
};

/// Block sizes (n_1, ..., n_p) of a complete multipartite graph.
class PartitionSpec {
 public:
  /// Throws InvalidArgument if empty or any part is zero.
  explicit PartitionSpec(std::vector<std::size_t> parts);

  /// From "n1,n2,...".
  static PartitionSpec parse(std::string_view text);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t total() const noexcept;

  std::string to_string() const;

 private:
  std::vector<std::size_t> parts_;
};

Graph complete_graph(std::size_t n);

/// Vertices numbered block by block: V_1 = {1..n_1}, V_2 = {n_1+1..}, ...
Graph complete_multipartite(const PartitionSpec& spec);

/// K_{n,n} minus the matching {i, n+i}: edges {i, n+j} for all i != j.
Graph bipartite_minus_matching(std::size_t n);

/// Vertex k >= 2 joins all of 1..k-1 when Dominating, none when Isolated.
Graph threshold_graph(const ThresholdSequence& seq);

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// L(G): degrees on the diagonal, -1 for each edge.
IntMatrix laplacian(const Graph& g);

/// Parses the edge-list format: first line n, then one "i j" per line with
/// 1 <= i < j <= n. '#' starts a comment. Errors carry the line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace lapspec
