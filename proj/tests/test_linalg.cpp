#include <doctest.h>

#include "lapspec/error.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/int_matrix.hpp"
#include "lapspec/random.hpp"
#include "oracles.hpp"

using namespace lapspec;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t n, int lo, int hi) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.between(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det(IntMatrix::identity(3)) == 1);
  CHECK(det(IntMatrix{{1, -1}, {-1, 1}}) == 0);
  CHECK(det(laplacian(complete_graph(4)) + IntMatrix::all_ones(4)) == 256);
  // Needs a row swap on the first pivot.
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(det(IntMatrix{{5}}) == 5);
  // Frozen from an independent symbolic computation.
  const IntMatrix a{{3, -7, 2, 9, 0}, {1, 4, -8, -2, 5}, {-6, 0, 7, 3, -1}, {2, 9, -4, -5, 8}, {0, -3, 6, 1, -9}};
  CHECK(det(a) == 12714);
  CHECK(char_poly(a) == IntPolynomial{12714, -1885, -374, 46, 0, -1});
}

TEST_CASE("matrix construction rejects non-square input") {
  CHECK_THROWS_AS(IntMatrix(0), InvalidArgument);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), InvalidArgument);
  CHECK_THROWS_AS(IntMatrix(2) + IntMatrix(3), InvalidArgument);
}

TEST_CASE("det matches cofactor expansion") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const IntMatrix m = random_matrix(rng, 1 + rng.below(6), -9, 9);
    CHECK(det(m) == oracle::cofactor_det(m));
  }
  // Sparse matrices exercise the pivot search.
  for (int t = 0; t < 200; ++t) {
    const IntMatrix m = random_matrix(rng, 1 + rng.below(6), -1, 1);
    CHECK(det(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("det scales exactly") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    CHECK(det(BigInt(10) * m) == boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(n)) * det(m));
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(char_poly(IntMatrix(2)) == IntPolynomial{0, 0, 1});
  CHECK(char_poly(laplacian(complete_graph(2))) == IntPolynomial{0, -2, 1});
  const IntPolynomial k3 = poly_linear(0, LinearSign::Minus) * poly_linear(3, LinearSign::Minus).pow(2);
  CHECK(char_poly(laplacian(complete_graph(3))) == k3);
  CHECK(char_poly(IntMatrix{{7}}) == IntPolynomial{7, -1});
}

TEST_CASE("char_poly agrees with shifted determinants") {
  Rng rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    const IntPolynomial p = char_poly(m);
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p.coefficient(n) == (n % 2 == 0 ? 1 : -1));
    CHECK(p.evaluate(0) == det(m));
    for (long k = 0; k <= static_cast<long>(n); ++k) CHECK(p.evaluate(k) == oracle::shifted_det(m, k));
  }
}

TEST_CASE("Laplacian char polys vanish at zero") {
  Rng rng(19);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, 1 + rng.below(10));
    CHECK(char_poly(laplacian(g)).coefficient(0) == 0);
  }
}

TEST_CASE("minors") {
  CHECK(minor_det(laplacian(complete_graph(2)), 1, 1) == 1);
  CHECK(minor_det(laplacian(complete_graph(3)), 1, 2) == -3);
  CHECK(minor_det(laplacian(complete_graph(4)), 1, 1) == 16);
  CHECK(delete_row_col(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 2, 3) == IntMatrix{{1, 2}, {7, 8}});
  CHECK_THROWS_AS(minor_det(IntMatrix(1), 1, 1), InvalidArgument);
  CHECK_THROWS_AS(minor_det(IntMatrix(3), 0, 1), InvalidArgument);
  CHECK_THROWS_AS(minor_det(IntMatrix(3), 1, 4), InvalidArgument);
}

TEST_CASE("rank-one update") {
  CHECK(rank_one_add(IntMatrix(2), IntVector::ones(2), IntVector::ones(2)) == IntMatrix::all_ones(2));
  CHECK(rank_one_add(laplacian(complete_graph(3)), IntVector::ones(3), IntVector::ones(3)) ==
        BigInt(3) * IntMatrix::identity(3));
  CHECK(rank_one_add(IntMatrix::identity(2), IntVector{1, 0}, IntVector{0, 1}) == IntMatrix{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(rank_one_add(IntMatrix(2), IntVector{1}, IntVector{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(rank_one_add(IntMatrix(2), IntVector{1, 1}, IntVector{1, 1, 1}), InvalidArgument);
}

TEST_CASE("rank-one determinant identity against the BFS tree oracle") {
  Rng rng(23);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const Graph g = random_graph(rng, n);
    const IntVector u = random_vector(rng, n, -4, 4);
    const IntVector v = random_vector(rng, n, -4, 4);
    CHECK(det(rank_one_add(laplacian(g), u, v)) == u.sum() * v.sum() * oracle::spanning_trees_bfs(g));
  }
}

TEST_CASE("polynomial ring operations") {
  const IntPolynomial x = IntPolynomial::monomial(1);
  CHECK(poly_mul(x, x) == IntPolynomial{0, 0, 1});
  CHECK(poly_linear(3, LinearSign::Minus) == IntPolynomial{3, -1});
  CHECK(poly_linear(3, LinearSign::Plus) == IntPolynomial{3, 1});
  CHECK(poly_mul(IntPolynomial{3, -1}, IntPolynomial{3, -1}) == IntPolynomial{9, -6, 1});
  CHECK(poly_eq(IntPolynomial{1, 2, 0, 0}, IntPolynomial{1, 2}));
  CHECK_FALSE(poly_eq(IntPolynomial{1, 2}, IntPolynomial{1, 3}));
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0}.degree() == -1);
  CHECK((x - x).is_zero());
  CHECK((IntPolynomial{1, 1}.pow(3)) == IntPolynomial{1, 3, 3, 1});
  CHECK(-IntPolynomial{1, -2} == IntPolynomial{-1, 2});

  const IntPolynomial p{0, -2, 1};
  CHECK(coefficient(p, 1) == -2);
  CHECK(coefficient(p, 0) == 0);
  CHECK(coefficient(p, 5) == 0);
}

TEST_CASE("polynomial text forms") {
  CHECK(IntPolynomial{0, -2, 1}.to_ascending_string() == "0 -2 1");
  CHECK(IntPolynomial{0, -2, 1}.to_pretty_string() == "-2*x + x^2");
  CHECK(IntPolynomial{0, -9, 6, -1}.to_pretty_string() == "-9*x + 6*x^2 - x^3");
  CHECK(IntPolynomial{5, 1}.to_pretty_string() == "5 + x");
  CHECK(IntPolynomial{}.to_ascending_string() == "0");
  CHECK(IntPolynomial{}.to_pretty_string() == "0");
  CHECK(parse_ascending("0 -9 6 -1") == IntPolynomial{0, -9, 6, -1});
  CHECK_THROWS_AS(parse_ascending("1 - 2"), InvalidArgument);
  CHECK_THROWS_AS(parse_ascending(""), InvalidArgument);

  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<BigInt> c(1 + rng.below(8));
    for (auto& v : c) v = rng.between(-1000, 1000);
    const IntPolynomial p(c);
    CHECK(parse_ascending(p.to_ascending_string()) == p);
  }
}

TEST_CASE("coefficients exceed 64 bits without loss") {
  // tau(K_20) = 20^18 sits in the linear coefficient as -20 * 20^18.
  const IntPolynomial p = char_poly(laplacian(complete_graph(20)));
  const BigInt expected = -boost::multiprecision::pow(BigInt(20), 19);
  CHECK(p.coefficient(1) == expected);
  CHECK(expected < BigInt(std::numeric_limits<long long>::min()));
}
