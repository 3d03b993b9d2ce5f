#include "lapspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lapspec/error.hpp"

namespace lapspec {

namespace {

std::string describe(const Edge& e) { return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}"; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), degrees_(n, 0) {
  if (n == 0) throw InvalidArgument("a graph needs at least one vertex");
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.lo > e.hi) std::swap(e.lo, e.hi);
    if (e.lo == e.hi) throw InvalidArgument("loop at vertex " + std::to_string(e.lo));
    if (e.lo < 1 || e.hi > n_) throw InvalidArgument("edge " + describe(e) + " outside [1," + std::to_string(n_) + "]");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InvalidArgument("duplicate edge " + describe(*dup));
  for (const Edge& e : edges_) {
    ++degrees_[e.lo - 1];
    ++degrees_[e.hi - 1];
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::size_t Graph::degree(Vertex v) const {
  if (v < 1 || v > n_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return degrees_[v - 1];
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> edges = edges_;
  edges.push_back({a, b});
  return Graph(n_, edges);
}

ThresholdSequence ThresholdSequence::parse(std::string_view word) {
  std::vector<ThresholdStep> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    if (ch == 'I') {
      steps.push_back(ThresholdStep::Isolated);
    } else if (ch == 'D') {
      steps.push_back(ThresholdStep::Dominating);
    } else {
      throw InvalidArgument(std::string("threshold word may only contain I and D, got '") + ch + "'");
    }
  }
  return ThresholdSequence(std::move(steps));
}

std::string ThresholdSequence::to_string() const {
  std::string out;
  for (ThresholdStep s : steps_) out += static_cast<char>(s);
  return out;
}

PartitionSpec::PartitionSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition needs at least one part");
  if (std::find(parts_.begin(), parts_.end(), 0U) != parts_.end())
    throw InvalidArgument("partition parts must be positive");
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidArgument("bad partition part '" + std::string(token) + "'");
    parts.push_back(value);
    start = comma + 1;
  }
  return PartitionSpec(std::move(parts));
}

std::size_t PartitionSpec::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string PartitionSpec::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph complete_multipartite(const PartitionSpec& spec) {
  const std::size_t n = spec.total();
  std::vector<std::size_t> block(n + 1);
  Vertex next = 1;
  for (std::size_t b = 0; b < spec.part_count(); ++b)
    for (std::size_t k = 0; k < spec.parts()[b]; ++k) block[next++] = b;
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (block[i] != block[j]) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph bipartite_minus_matching(std::size_t n) {
  if (n == 0) throw InvalidArgument("matching-removed bipartite graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1));
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      if (i != j) edges.push_back({i, n + j});
  return Graph(2 * n, edges);
}

Graph threshold_graph(const ThresholdSequence& seq) {
  const std::size_t n = seq.vertex_count();
  std::vector<Edge> edges;
  for (Vertex k = 2; k <= n; ++k) {
    if (seq.tag(k) != ThresholdStep::Dominating) continue;
    for (Vertex i = 1; i < k; ++i) edges.push_back({i, k});
  }
  return Graph(n, edges);
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix l(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) l(v - 1, v - 1) = g.degree(v);
  for (const Edge& e : g.edges()) {
    l(e.lo - 1, e.hi - 1) = -1;
    l(e.hi - 1, e.lo - 1) = -1;
  }
  return l;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits on blanks and parses each token as a positive decimal integer.
std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  while (!(line = trim(line)).empty()) {
    std::size_t end = 0;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::string_view token = line.substr(0, end);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    out.push_back(value);
    line.remove_prefix(end);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> seen_on;  // parallel to edges, for duplicate reporting
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::size_t> numbers = parse_numbers(line, line_no);
    if (!have_header) {
      if (numbers.size() != 1) throw ParseError(line_no, "first line must hold the vertex count");
      if (numbers[0] == 0) throw ParseError(line_no, "vertex count must be at least 1");
      n = numbers[0];
      have_header = true;
      continue;
    }
    if (numbers.size() != 2) throw ParseError(line_no, "edge line must hold exactly two vertices");
    const Edge e{numbers[0], numbers[1]};
    if (e.lo == e.hi) throw ParseError(line_no, "loop at vertex " + std::to_string(e.lo));
    if (e.lo < 1 || e.hi < 1 || e.lo > n || e.hi > n)
      throw ParseError(line_no, "vertex out of range [1," + std::to_string(n) + "]");
    if (e.lo > e.hi) throw ParseError(line_no, "edge endpoints must be listed in increasing order");
    edges.push_back(e);
    seen_on.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing vertex count");

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::size_t first_dup = 0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (edges[order[k]] != edges[order[k - 1]]) continue;
    if (first_dup == 0 || seen_on[order[k]] < seen_on[first_dup - 1]) first_dup = order[k] + 1;
  }
  if (first_dup != 0) throw ParseError(seen_on[first_dup - 1], "duplicate edge " + describe(edges[first_dup - 1]));
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.lo) + " " + std::to_string(e.hi) + "\n";
  return out;
}

}  // namespace lapspec
