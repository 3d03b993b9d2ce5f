#pragma once

#include <cstddef>
#include <vector>

#include "lapspec/graph.hpp"
#include "lapspec/int_matrix.hpp"
#include "lapspec/polynomial.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {

// Rank-one perturbation of a Laplacian along the all-ones direction.
//
// For a graph Laplacian L with det(L - xI) = -x q(x), adding u 1^T keeps every
// nonzero-direction eigenvalue and replaces the kernel eigenvalue 0 by the
// coordinate sum of u:
//
//   det(L + u 1^T - xI) = q(x) (sum(u) - x).
//
// The functions below compute both sides independently so callers (and the
// verification suites) can compare them.

/// char_poly(L + u 1^T), computed directly. Throws InvalidArgument if L is not
/// symmetric with zero row sums or if u has the wrong length.
IntPolynomial perturbed_charpoly(const IntMatrix& laplacian, const IntVector& u);

/// Exact quotient p / (s - x). Throws DivisibilityError if p(s) != 0.
IntPolynomial deflate(const IntPolynomial& p, const BigInt& s);

/// Closed form (a - x)^(n-1) (a + b n - x) for det(a I + b 1 1^T - x I).
IntPolynomial aI_plus_b11t_charpoly(const BigInt& a, const BigInt& b, std::size_t n);

/// a I_n + b 1 1^T built entry by entry.
IntMatrix aI_plus_b11t(const BigInt& a, const BigInt& b, std::size_t n);

/// {0^1, n^(n-1)}.
Spectrum spectrum_complete(std::size_t n);

/// {0^1, n^(p-1)} plus (n - n_i)^(n_i - 1) for every part.
Spectrum spectrum_multipartite(const PartitionSpec& spec);

/// {0^1, (n-2)^(n-1), n^(n-1), (2n-2)^1}, merged where values coincide.
Spectrum spectrum_bipartite_minus_matching(std::size_t n);

/// {0} with deg(v) for isolated v and deg(v) + 1 for dominating v.
/// Throws InvalidArgument on the empty sequence.
Spectrum spectrum_threshold_hk(const ThresholdSequence& seq);

/// Conjugate degree sequence: lambda_i = #{v : deg(v) >= i}, i = 1..n.
/// Meaningful for threshold graphs; not validated.
Spectrum spectrum_threshold_merris(const Graph& g);

/// Diagonal of L + u 1^T where u indicates the dominating vertices. The
/// matrix is checked to be upper triangular in construction order; a
/// violation throws Error. Throws InvalidArgument on the empty sequence.
std::vector<BigInt> threshold_perturbed_diagonal(const ThresholdSequence& seq);

/// prod (value - x)^multiplicity.
IntPolynomial spectrum_to_charpoly(const Spectrum& s);

}  // namespace lapspec
