#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lapspec {

/// Outcome of one verification suite.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  /// Human-readable counterexamples, one per failed check.
  std::vector<std::string> failures;
  /// Named coverage counters (e.g. how many trials hit a collision case).
  std::vector<std::pair<std::string, std::size_t>> coverage;

  bool passed() const noexcept { return failures.empty(); }
};

/// Perturbation identity in multiplicative form over random graphs (n <= 10)
/// and u in [-5, 5]^n: char_poly(L + u 1^T) (-x) == char_poly(L) (sum(u) - x).
/// Every fourth trial forces sum(u) = 0 and another forces sum(u) onto a
/// nonzero integer eigenvalue of L when one is reachable.
SuiteResult verify_thm1(std::uint64_t seed, std::size_t trials);

/// det(L + u v^T) == sum(u) sum(v) tau_bruteforce(G) for n <= 7 with
/// u, v in [-5, 5]^n, including forced zero-sum vectors.
SuiteResult verify_eq1(std::uint64_t seed, std::size_t trials);

/// Closed form for a I + b 1 1^T against char_poly over [-3,3]^2 x [1,6].
SuiteResult verify_eq3();

/// Closed-form family spectra against char_poly of the generated Laplacian:
/// K_n (n <= 12), `trials` random partitions (n <= 12), K_{n,n} minus a
/// perfect matching (n <= 6), `trials` random threshold words (length <= 11).
SuiteResult verify_families(std::uint64_t seed, std::size_t trials);

/// Exhaustive over threshold words of length 1..8: conjugate-degree and
/// tag-based spectra agree, and the triangular perturbation's diagonal
/// with its first entry replaced by 0 is the same multiset.
SuiteResult verify_merris_hk();

inline constexpr const char* kVerifyScopes[] = {"thm1", "eq1", "eq3", "families", "merris-hk"};

/// Runs one scope by name, or all of them for "all". Throws InvalidArgument
/// for an unknown scope.
std::vector<SuiteResult> run_verification(const std::string& scope, std::uint64_t seed, std::size_t trials);

}  // namespace lapspec
