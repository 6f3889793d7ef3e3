#include <gtest/gtest.h>

#include <random>

#include "octic/arith/field.hpp"
#include "octic/arith/json_io.hpp"
#include "octic/arith/matrix.hpp"
#include "octic/arith/random.hpp"

using namespace octic;

namespace {

QMatrix random_qmatrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound, double zero_share = 0.0) {
  QMatrix m(r, c);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (u(rng) < zero_share) continue;
      long den = uniform_int(rng, 1, 5);
      m(i, j) = Rational(uniform_int(rng, -bound, bound)) / Rational(den);
    }
  return m;
}

Matrix<FpField> reduce(const QMatrix& m, FpField F) {
  Matrix<FpField> out(m.rows(), m.cols(), F);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = F.from_rational(m(i, j));
  return out;
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rational::parse("+12").str(), "12");
  EXPECT_THROW(Rational::parse("6/-4"), std::invalid_argument);
  EXPECT_EQ((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Fp, FieldAxiomsAtSmallPrime) {
  FpField F(101);
  for (long a = 1; a < 101; ++a) {
    auto x = F.from_int(a);
    EXPECT_TRUE((x * x.inverse()).is_one());
    EXPECT_TRUE((x.pow(100)).is_one());  // Fermat
  }
  EXPECT_EQ(F.from_rational(Rational(-1) / Rational(2)).str(), "50");
  EXPECT_THROW(F.from_rational(Rational(1) / Rational(101)), std::domain_error);
  EXPECT_THROW(FpField(100), std::invalid_argument);
}

TEST(Matrix, RrefIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_qmatrix(rng, 1 + trial % 6, 1 + (trial * 7) % 7, 9, 0.3);
    auto once = rref(m);
    auto twice = rref(once.rref);
    EXPECT_EQ(once.rref, twice.rref);
    EXPECT_EQ(once.rank, twice.rank);
    EXPECT_EQ(once.pivots, twice.pivots);
  }
}

TEST(Matrix, NullspaceIsAnnihilatedExactly) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_qmatrix(rng, 1 + trial % 5, 2 + trial % 6, 7, 0.4);
    auto K = nullspace(m);
    EXPECT_EQ(K.cols(), m.cols() - rank(m));
    if (K.cols() > 0) {
      EXPECT_TRUE((m * K).is_zero());
    }
  }
}

// Rank over Q against rank mod 32003: equal unless p divides a minor, which
// for entries this small never happens.
TEST(Matrix, RankOverQMatchesRankModP) {
  std::mt19937_64 rng(13);
  FpField F(kDefaultPrime);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
    auto m = random_qmatrix(rng, r, c, 4, trial % 3 == 0 ? 0.6 : 0.1);
    // low-rank products as well
    if (trial % 4 == 0) m = random_qmatrix(rng, r, 2, 4) * random_qmatrix(rng, 2, c, 4);
    EXPECT_EQ(rank(m), rank(reduce(m, F)));
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_qmatrix(rng, 4, 4, 9, 0.2), b = random_qmatrix(rng, 4, 4, 9, 0.2);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Matrix, DeterminantOfKnownMatrices) {
  auto v = QMatrix::from_ints({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
  EXPECT_EQ(det(v), Rational(2));  // Vandermonde (2-1)(3-1)(3-2)
  auto s = QMatrix::from_ints({{1, 2}, {2, 4}});
  EXPECT_TRUE(det(s).is_zero());
}

TEST(Matrix, SolveParticular) {
  auto m = QMatrix::from_ints({{1, 2}, {3, 4}});
  auto rhs = QMatrix::from_ints({{5}, {6}});
  auto x = solve_particular(m, rhs);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m * *x, rhs);
  auto singular = QMatrix::from_ints({{1, 2}, {2, 4}});
  EXPECT_FALSE(solve_particular(singular, rhs).has_value());
}

TEST(JsonIo, MatrixRoundTrip) {
  auto m = QMatrix::from_ints({{1, -2}, {0, 7}});
  m(0, 0) = Rational::parse("3/5");
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  EXPECT_EQ(rational_from_json(json(4)), Rational(4));
  EXPECT_EQ(rational_from_json(json("-1/3")), Rational::parse("-1/3"));
}
