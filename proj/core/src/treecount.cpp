#include "lapspec/treecount.hpp"

#include <cstdint>
#include <functional>
#include <numeric>

#include "lapspec/error.hpp"

namespace lapspec {

BigInt tau_cofactor(const Graph& g, Vertex i, Vertex j) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("cofactor count needs at least 2 vertices");
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("cofactor index out of range");
  BigInt minor = minor_det(laplacian(g), i, j);
  return (i + j) % 2 == 0 ? minor : BigInt(-minor);
}

BigInt tau_rank_one(const Graph& g, const IntVector& u, const IntVector& v) {
  const BigInt su = u.sum();
  const BigInt sv = v.sum();
  if (su == 0 || sv == 0) throw InvalidArgument("rank-one count needs vectors with nonzero coordinate sums");
  const BigInt d = det(rank_one_add(laplacian(g), u, v));
  const BigInt scale = su * sv;
  if (d % scale != 0)
    throw DivisibilityError("det(L + u v^T) = " + d.str() + " is not divisible by " + scale.str());
  return d / scale;
}

BigInt tau_charpoly(const Graph& g) {
  const BigInt c1 = char_poly(laplacian(g)).coefficient(1);
  const BigInt n = g.order();
  if (c1 % n != 0) throw DivisibilityError("linear coefficient " + c1.str() + " is not divisible by n");
  return -c1 / n;
}

namespace {

// Union-find without path compression so unions can be rolled back in LIFO
// order during the subset search.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Returns false (and records nothing) if a and b are already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    history_.push_back({b, rank_[a] == rank_[b]});
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  void undo() {
    const auto [child, bumped] = history_.back();
    history_.pop_back();
    const std::size_t root = parent_[child];
    parent_[child] = child;
    if (bumped) --rank_[root];
  }

 private:
  struct Step {
    std::size_t child;
    bool bumped;
  };
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<Step> history_;
};

}  // namespace

BigInt tau_bruteforce(const Graph& g, std::size_t edge_limit) {
  const std::size_t m = g.size();
  if (m > edge_limit)
    throw BoundExceeded("brute-force enumeration limited to " + std::to_string(edge_limit) + " edges, graph has " +
                        std::to_string(m));
  const std::size_t n = g.order();
  const std::size_t need = n - 1;
  if (m < need) return 0;

  const auto& edges = g.edges();
  RollbackDsu dsu(n);
  std::uint64_t count = 0;
  // Choose edges in index order; any acyclic set of n-1 edges on n vertices
  // is connected and spanning, so acyclicity is the only check needed.
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t next, std::size_t chosen) {
    if (chosen == need) {
      ++count;
      return;
    }
    for (std::size_t k = next; k + (need - chosen) <= m; ++k) {
      if (!dsu.unite(edges[k].lo - 1, edges[k].hi - 1)) continue;
      search(k + 1, chosen + 1);
      dsu.undo();
    }
  };
  search(0, 0);
  return count;
}

BigInt tau_cayley(std::size_t n) {
  if (n == 0) throw InvalidArgument("Cayley's formula needs n >= 1");
  if (n == 1) return 1;
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n - 2));
}

const MethodResult* TreeCountReport::find(const std::string& method) const {
  for (const auto& r : methods)
    if (r.method == method) return &r;
  return nullptr;
}

namespace {

MethodResult run_method(const std::string& name, const std::function<BigInt()>& body) {
  try {
    return {name, body(), {}};
  } catch (const Error& e) {
    return {name, std::nullopt, e.what()};
  }
}

}  // namespace

TreeCountReport compare_methods(const Graph& g) {
  TreeCountReport report;
  report.n = g.order();
  report.edges = g.size();
  const IntVector ones = IntVector::ones(g.order());

  if (g.order() >= 2) {
    report.methods.push_back(run_method("cofactor", [&] { return tau_cofactor(g, 1, 1); }));
  } else {
    // No 1x1 deletion exists; the empty minor has determinant 1.
    report.methods.push_back({"cofactor", BigInt(1), {}});
  }
  report.methods.push_back(run_method("rankone", [&] { return tau_rank_one(g, ones, ones); }));
  report.methods.push_back(run_method("charpoly", [&] { return tau_charpoly(g); }));
  report.methods.push_back(run_method("bruteforce", [&] { return tau_bruteforce(g); }));

  report.agreement = true;
  const BigInt* first = nullptr;
  for (const auto& r : report.methods) {
    if (!r.count) continue;
    if (first == nullptr) {
      first = &*r.count;
    } else if (*r.count != *first) {
      report.agreement = false;
    }
  }
  return report;
}

}  // namespace lapspec
