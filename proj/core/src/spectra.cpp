#include "lapspec/spectra.hpp"

#include "lapspec/error.hpp"

namespace lapspec {

namespace {

bool is_laplacian_shaped(const IntMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (const auto& s : m.row_sums())
    if (s != 0) return false;
  return true;
}

void require_nonempty(const ThresholdSequence& seq) {
  if (seq.empty()) throw InvalidArgument("threshold graphs are nonempty: the construction word needs at least one step");
}

}  // namespace

IntPolynomial perturbed_charpoly(const IntMatrix& laplacian, const IntVector& u) {
  if (u.size() != laplacian.dim()) throw InvalidArgument("perturbation vector length mismatch");
  if (!is_laplacian_shaped(laplacian))
    throw InvalidArgument("matrix is not a Laplacian (symmetric with zero row sums)");
  return char_poly(rank_one_add(laplacian, u, IntVector::ones(laplacian.dim())));
}

IntPolynomial deflate(const IntPolynomial& p, const BigInt& s) {
  // Synthetic division by (x - s), then negate for (s - x).
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  std::vector<BigInt> quotient(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    carry = carry * s + c[k];
    if (k > 0) quotient[k - 1] = carry;
  }
  if (carry != 0)
    throw DivisibilityError("polynomial is not divisible by (" + s.str() + " - x): remainder " + carry.str());
  for (auto& q : quotient) q = -q;
  return IntPolynomial(std::move(quotient));
}

IntPolynomial aI_plus_b11t_charpoly(const BigInt& a, const BigInt& b, std::size_t n) {
  if (n == 0) throw InvalidArgument("dimension must be at least 1");
  return poly_linear(a, LinearSign::Minus).pow(n - 1) * poly_linear(a + b * n, LinearSign::Minus);
}

IntMatrix aI_plus_b11t(const BigInt& a, const BigInt& b, std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? a : BigInt(0)) + b;
  return m;
}

Spectrum spectrum_complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete graph needs n >= 1");
  Spectrum s;
  s.add(0);
  s.add(n, n - 1);
  return s;
}

Spectrum spectrum_multipartite(const PartitionSpec& spec) {
  const std::size_t n = spec.total();
  Spectrum s;
  s.add(0);
  s.add(n, spec.part_count() - 1);
  for (std::size_t part : spec.parts()) s.add(n - part, part - 1);
  return s;
}

Spectrum spectrum_bipartite_minus_matching(std::size_t n) {
  if (n == 0) throw InvalidArgument("matching-removed bipartite graph needs n >= 1");
  Spectrum s;
  s.add(0);
  // n - 2 is negative only for n = 1, where its multiplicity n - 1 is zero.
  if (n >= 2) s.add(n - 2, n - 1);
  s.add(n, n - 1);
  s.add(2 * n - 2);
  return s;
}

Spectrum spectrum_threshold_hk(const ThresholdSequence& seq) {
  require_nonempty(seq);
  const Graph g = threshold_graph(seq);
  Spectrum s;
  s.add(0);
  for (Vertex v = 2; v <= g.order(); ++v) {
    const std::size_t d = g.degree(v);
    s.add(seq.tag(v) == ThresholdStep::Dominating ? d + 1 : d);
  }
  return s;
}

Spectrum spectrum_threshold_merris(const Graph& g) {
  const std::size_t n = g.order();
  // count_at_least[i] = #{v : deg(v) >= i}
  std::vector<std::size_t> histogram(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++histogram[g.degree(v)];
  Spectrum s;
  std::size_t at_least = 0;
  for (std::size_t i = n; i >= 1; --i) {
    at_least += histogram[i];
    s.add(at_least);
  }
  return s;
}

std::vector<BigInt> threshold_perturbed_diagonal(const ThresholdSequence& seq) {
  require_nonempty(seq);
  const Graph g = threshold_graph(seq);
  IntVector dominating(g.order());
  for (Vertex v = 2; v <= g.order(); ++v)
    if (seq.tag(v) == ThresholdStep::Dominating) dominating[v - 1] = 1;
  const IntMatrix perturbed = rank_one_add(laplacian(g), dominating, IntVector::ones(g.order()));
  if (!perturbed.is_upper_triangular())
    throw Error("L + u 1^T is not upper triangular for threshold word '" + seq.to_string() + "'");
  return perturbed.diagonal();
}

IntPolynomial spectrum_to_charpoly(const Spectrum& s) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& [value, count] : s.entries()) p = p * poly_linear(value, LinearSign::Minus).pow(count);
  return p;
}

}  // namespace lapspec
