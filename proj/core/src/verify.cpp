#include "lapspec/verify.hpp"

#include <algorithm>
#include <iterator>

#include "lapspec/error.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/random.hpp"
#include "lapspec/spectra.hpp"
#include "lapspec/treecount.hpp"

namespace lapspec {

namespace {

std::string describe_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += v[i].str();
  }
  return out + ")";
}

std::string describe_graph(const Graph& g) {
  std::string text = serialize_graph(g);
  for (auto& ch : text)
    if (ch == '\n') ch = ';';
  return "graph[" + text + "]";
}

void bump(SuiteResult& r, const std::string& key) {
  for (auto& [name, count] : r.coverage)
    if (name == key) {
      ++count;
      return;
    }
  r.coverage.emplace_back(key, 1);
}

std::vector<BigInt> integer_roots(const IntPolynomial& p, std::size_t n) {
  // Laplacian eigenvalues lie in [0, n].
  std::vector<BigInt> roots;
  for (std::size_t k = 0; k <= n; ++k)
    if (p.evaluate(k) == 0) roots.emplace_back(k);
  return roots;
}

}  // namespace

SuiteResult verify_thm1(std::uint64_t seed, std::size_t trials) {
  SuiteResult result;
  result.name = "thm1";
  Rng rng(seed);
  const IntPolynomial minus_x{0, -1};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng.below(10);
    const Graph g = random_graph(rng, n);
    const IntMatrix l = laplacian(g);
    const IntPolynomial base = char_poly(l);
    IntVector u = random_vector(rng, n, -5, 5);

    if (t % 4 == 1) {
      steer_sum(u, 0, -5, 5);
    } else if (t % 4 == 2) {
      std::vector<BigInt> roots = integer_roots(base, n);
      std::erase(roots, BigInt(0));
      if (!roots.empty()) steer_sum(u, roots[rng.below(roots.size())], -5, 5);
    }

    const BigInt s = u.sum();
    if (s == 0) bump(result, "sum_zero");
    if (base.evaluate(s) == 0) bump(result, "sum_is_eigenvalue");
    if (s != 0 && base.evaluate(s) == 0) bump(result, "sum_is_nonzero_eigenvalue");

    const IntPolynomial lhs = perturbed_charpoly(l, u) * minus_x;
    const IntPolynomial rhs = base * poly_linear(s, LinearSign::Minus);
    ++result.checks;
    if (lhs != rhs) {
      result.failures.push_back(describe_graph(g) + " u=" + describe_vector(u) + " lhs=" +
                                lhs.to_ascending_string() + " rhs=" + rhs.to_ascending_string());
    }
  }
  return result;
}

SuiteResult verify_eq1(std::uint64_t seed, std::size_t trials) {
  SuiteResult result;
  result.name = "eq1";
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const Graph g = random_graph(rng, n);
    IntVector u = random_vector(rng, n, -5, 5);
    IntVector v = random_vector(rng, n, -5, 5);
    if (t % 4 == 1) steer_sum(u, 0, -5, 5);
    if (t % 4 == 2) steer_sum(v, 0, -5, 5);
    if (u.sum() == 0 || v.sum() == 0) bump(result, "zero_sum");

    const BigInt lhs = det(rank_one_add(laplacian(g), u, v));
    const BigInt tau = tau_bruteforce(g);
    const BigInt rhs = u.sum() * v.sum() * tau;
    if (tau == 0) bump(result, "disconnected");
    ++result.checks;
    if (lhs != rhs) {
      result.failures.push_back(describe_graph(g) + " u=" + describe_vector(u) + " v=" + describe_vector(v) +
                                " det=" + lhs.str() + " expected=" + rhs.str());
    }
  }
  return result;
}

SuiteResult verify_eq3() {
  SuiteResult result;
  result.name = "eq3";
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (std::size_t n = 1; n <= 6; ++n) {
        ++result.checks;
        const IntPolynomial closed = aI_plus_b11t_charpoly(a, b, n);
        const IntPolynomial direct = char_poly(aI_plus_b11t(a, b, n));
        if (closed != direct) {
          result.failures.push_back("a=" + std::to_string(a) + " b=" + std::to_string(b) + " n=" +
                                    std::to_string(n) + " closed=" + closed.to_ascending_string() +
                                    " direct=" + direct.to_ascending_string());
        }
      }
  return result;
}

namespace {

void check_family(SuiteResult& result, const std::string& label, const Graph& g, const Spectrum& s) {
  ++result.checks;
  const IntPolynomial closed = spectrum_to_charpoly(s);
  const IntPolynomial direct = char_poly(laplacian(g));
  if (s.size() != g.order() || closed != direct) {
    result.failures.push_back(label + " " + describe_graph(g) + " spectrum=" + s.to_string() + " direct=" +
                              direct.to_ascending_string());
  }
}

PartitionSpec random_partition(Rng& rng, std::size_t max_total) {
  std::size_t remaining = 1 + rng.below(max_total);
  std::vector<std::size_t> parts;
  while (remaining > 0) {
    const std::size_t part = 1 + rng.below(remaining);
    parts.push_back(part);
    remaining -= part;
  }
  return PartitionSpec(std::move(parts));
}

ThresholdSequence random_threshold_word(Rng& rng, std::size_t max_length) {
  const std::size_t length = 1 + rng.below(max_length);
  std::vector<ThresholdStep> steps(length);
  for (auto& s : steps) s = rng.below(2) == 1 ? ThresholdStep::Dominating : ThresholdStep::Isolated;
  return ThresholdSequence(std::move(steps));
}

}  // namespace

SuiteResult verify_families(std::uint64_t seed, std::size_t trials) {
  SuiteResult result;
  result.name = "families";
  Rng rng(seed);
  for (std::size_t n = 1; n <= 12; ++n)
    check_family(result, "complete " + std::to_string(n), complete_graph(n), spectrum_complete(n));
  for (std::size_t t = 0; t < trials; ++t) {
    const PartitionSpec spec = random_partition(rng, 12);
    check_family(result, "multipartite " + spec.to_string(), complete_multipartite(spec),
                 spectrum_multipartite(spec));
  }
  for (std::size_t n = 1; n <= 6; ++n)
    check_family(result, "kxx-minus-matching " + std::to_string(n), bipartite_minus_matching(n),
                 spectrum_bipartite_minus_matching(n));
  for (std::size_t t = 0; t < trials; ++t) {
    const ThresholdSequence seq = random_threshold_word(rng, 11);
    check_family(result, "threshold " + seq.to_string(), threshold_graph(seq), spectrum_threshold_hk(seq));
  }
  return result;
}

SuiteResult verify_merris_hk() {
  SuiteResult result;
  result.name = "merris-hk";
  for (std::size_t length = 1; length <= 8; ++length) {
    for (std::uint32_t bits = 0; bits < (1U << length); ++bits) {
      std::vector<ThresholdStep> steps(length);
      for (std::size_t k = 0; k < length; ++k)
        steps[k] = (bits >> k) & 1U ? ThresholdStep::Dominating : ThresholdStep::Isolated;
      const ThresholdSequence seq(std::move(steps));
      const Graph g = threshold_graph(seq);
      const Spectrum hk = spectrum_threshold_hk(seq);

      ++result.checks;
      const Spectrum merris = spectrum_threshold_merris(g);
      if (merris != hk) {
        result.failures.push_back("threshold " + seq.to_string() + " merris=" + merris.to_string() +
                                  " hk=" + hk.to_string());
      }

      ++result.checks;
      try {
        std::vector<BigInt> diagonal = threshold_perturbed_diagonal(seq);
        diagonal[0] = 0;
        const Spectrum from_diagonal = Spectrum::from_values(diagonal);
        if (from_diagonal != hk) {
          result.failures.push_back("threshold " + seq.to_string() + " diagonal=" + from_diagonal.to_string() +
                                    " hk=" + hk.to_string());
        }
      } catch (const Error& e) {
        result.failures.push_back("threshold " + seq.to_string() + ": " + e.what());
      }
    }
  }
  return result;
}

std::vector<SuiteResult> run_verification(const std::string& scope, std::uint64_t seed, std::size_t trials) {
  const bool all = scope == "all";
  if (!all && std::ranges::find(kVerifyScopes, scope) == std::end(kVerifyScopes))
    throw InvalidArgument("unknown verification scope '" + scope + "'");
  std::vector<SuiteResult> out;
  if (all || scope == "thm1") out.push_back(verify_thm1(seed, trials));
  if (all || scope == "eq1") out.push_back(verify_eq1(seed, trials));
  if (all || scope == "eq3") out.push_back(verify_eq3());
  if (all || scope == "families") out.push_back(verify_families(seed, trials));
  if (all || scope == "merris-hk") out.push_back(verify_merris_hk());
  return out;
}

}  // namespace lapspec
