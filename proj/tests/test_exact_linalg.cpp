#include "brauer/error.hpp"
#include "brauer/exact_linalg.hpp"
#include "brauer/qmatrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace brauer;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread,
                      bool fractions) {
  std::uniform_int_distribution<int> num(-spread, spread), den(1, 4);
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Rational q(num(rng), fractions ? den(rng) : 1);
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("kernel of a rank-one 2x2") {
  const auto k = kernel_basis(QMatrix{{1, 1}, {1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == ints({1, -1}));
}

TEST_CASE("identity has trivial kernel") {
  CHECK(kernel_basis(QMatrix::identity(4)).empty());
}

TEST_CASE("kernel of the S3 permutation-character table") {
  // Rows: identity, reflections, rotations. Columns: 1, C2, C3, G.
  const QMatrix chars{{6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}};
  const auto k = kernel_basis(chars);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == ints({1, -2, -1, 2}));
}

TEST_CASE("kernel normalisation") {
  // Entries scale to a primitive vector with leading positive entry.
  const auto k = kernel_basis(QMatrix{{Rational(2, 3), Rational(-4, 3), 2}});
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    CHECK(g == 1);
    for (const auto& x : v)
      if (x != 0) {
        CHECK(x > 0);
        break;
      }
  }
}

TEST_CASE("determinant examples") {
  CHECK(determinant(QMatrix::identity(5)) == 1);
  CHECK(determinant(QMatrix{}) == 1);
  CHECK(determinant(QMatrix{{Rational(1, 2), 0}, {0, 1}}) == Rational(1, 2));
  CHECK(determinant(QMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(QMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(determinant(QMatrix(2, 3)), MathError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto m = random_matrix(rng, n, n, 3, trial % 2 == 1);
    CHECK(determinant(m) == oracle::cofactor_determinant(m));
  }
}

TEST_CASE("rank-nullity and kernel vectors") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    // Small spread makes rank deficiency common.
    const auto m = random_matrix(rng, rows, cols, 1, trial % 3 == 0);
    const auto k = kernel_basis(m);
    const std::size_t r = oracle::naive_rank(m);
    CHECK(rank(m) == r);
    CHECK(k.size() == cols - r);
    for (const auto& v : k) {
      const auto prod = m * QMatrix::from_columns(cols, std::span(&v, 1));
      CHECK(prod.is_zero());
    }
  }
}

TEST_CASE("reduced echelon form is reduced") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 4, 5, 2, true);
    const auto e = reduced_row_echelon(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        CHECK(e.reduced(r, e.pivots[i]) == (r == i ? 1 : 0));
  }
}

TEST_CASE("inverse and column space") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(rng, 3, 3, 4, true);
    if (determinant(m) == 0) {
      CHECK_THROWS_AS(inverse(m), MathError);
      continue;
    }
    CHECK((m * inverse(m)).is_identity());
  }
  const auto basis = column_space_basis(QMatrix{{1, 2, 3}, {2, 4, 6}});
  REQUIRE(basis.cols() == 1);
  CHECK(basis == QMatrix{{1}, {2}});
}

TEST_CASE("square class examples") {
  CHECK(square_class(Rational(12)) == SquareClass::from_parts(1, 3));
  CHECK(square_class(Rational(-1, 2)).str() == "-2");
  CHECK(square_class(Rational(1)).is_trivial());
  CHECK(square_class(Rational(9, 4)).is_trivial());
  CHECK(square_class(Rational(5, 3)).str() == "15");
  CHECK_THROWS_AS(square_class(Rational(0)), MathError);
}

TEST_CASE("square class beyond the factor bound") {
  // 11 * 13 cannot be certified squarefree with trial division to 10.
  CHECK_THROWS_AS(squarefree_part(Integer(143), 10), FactorBoundExceeded);
  // A prime cofactor is certified.
  CHECK(squarefree_part(Integer(2 * 1'000'003), 10) == 2 * 1'000'003);
  CHECK(squarefree_part(Integer(4 * 49), 10) == 1);
}

TEST_CASE("square class properties") {
  std::mt19937 rng(15);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int trial = 0; trial < 300; ++trial) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    const Rational qa(a), qb(b, 7);
    CHECK(square_class(qa * qb * qb) == square_class(qa));
    CHECK(square_class(qa * qb) == square_class(qa) * square_class(qb));
    CHECK(square_class(qa / qb) == square_class(qa * qb));
  }
}

TEST_CASE("valuations") {
  CHECK(ord_p(Rational(18), 3) == 2);
  CHECK(ord_p(Rational(1, 3), 3) == -1);
  CHECK(ord_p(Rational(5, 7), 3) == 0);
  CHECK(ord_p(Integer(-32), 2) == 5);
  CHECK_THROWS_AS(ord_p(Rational(0), 3), MathError);

  std::mt19937 rng(16);
  std::uniform_int_distribution<long> d(1, 10'000);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a(d(rng), d(rng)), b(d(rng), d(rng));
    for (long p : {2, 3, 5, 7}) {
      CHECK(ord_p(Rational(a * b), p) == ord_p(a, p) + ord_p(b, p));
      CHECK(ord_p(Rational(b * b), p) % 2 == 0);
    }
  }
}
