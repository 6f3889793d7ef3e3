#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "octic/arith/random.hpp"
#include "octic/arrangement/arrangement.hpp"

using namespace octic;

namespace {

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(uniform_int(rng, -6, 6));
    if (!det(g).is_zero()) return g;
  }
}

std::vector<Rational> random_distinct_nodes(std::mt19937_64& rng) {
  std::vector<Rational> nodes;
  while (nodes.size() < 8) {
    auto v = Rational(uniform_int(rng, -30, 30)) / Rational(uniform_int(rng, 1, 4));
    if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) nodes.push_back(v);
  }
  return nodes;
}

}  // namespace

TEST(GeneralPosition, DetectsFourConcurrentPlanes) {
  auto arr = vandermonde_point();
  EXPECT_TRUE(is_general_position(arr));
  for (std::size_t j = 0; j < 4; ++j) arr.A(4, j) = arr.A(0, j);  // plane 5 equals plane 1
  auto r = check_general_position(arr);
  EXPECT_FALSE(r.general);
  EXPECT_EQ(r.vanishing.size(), 15u);  // every quadruple containing planes 1 and 5
  for (const auto& q : r.vanishing) {
    EXPECT_EQ(q[0], 0);
    EXPECT_TRUE(q[1] == 4 || q[2] == 4 || q[3] == 4);
  }
  EXPECT_THROW(require_general_position(arr), ArrangementError);
}

TEST(GeneralPosition, HyperellipticArrangementsAlwaysPass) {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 50; ++trial) {
    auto nodes = random_distinct_nodes(rng);
    EXPECT_TRUE(is_general_position(hyperelliptic_arrangement(nodes)));
  }
  auto dup = integer_nodes({1, 2, 3, 4, 5, 6, 7, 7});
  EXPECT_THROW(hyperelliptic_arrangement(dup), ArrangementError);
}

TEST(Normalize, ConstantOnGroupOrbits) {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_moduli_point(1000 + trial);
    auto arr = from_moduli(m);
    EXPECT_EQ(normalize(arr), m);
    // random right GL_4 action and nonzero row rescalings
    QMatrix a = arr.A * random_invertible(rng, 4);
    for (std::size_t i = 0; i < kPlanes; ++i) {
      long s = 0;
      while (s == 0) s = uniform_int(rng, -5, 5);
      for (std::size_t j = 0; j < kDim; ++j) a(i, j) *= Rational(s);
    }
    EXPECT_EQ(normalize(Arrangement(a)), m);
  }
}

TEST(ComplementMatrix, AnnihilatesAndHasRankFour) {
  for (int trial = 0; trial < 20; ++trial) {
    auto arr = trial == 0 ? vandermonde_point() : from_moduli(random_moduli_point(2000 + trial));
    auto B = complement_matrix(arr);
    EXPECT_EQ(B.rows(), 4u);
    EXPECT_EQ(B.cols(), 8u);
    EXPECT_TRUE((B * arr.A).is_zero());
    EXPECT_EQ(rank(B), 4u);
  }
}

TEST(Gauge, SpanHasDimensionTwentyThree) {
  for (int trial = 0; trial < 10; ++trial) {
    auto arr = trial == 0 ? vandermonde_point() : from_moduli(random_moduli_point(3000 + trial));
    EXPECT_EQ(rank(directions_matrix(gauge_basis(arr))), 23u);
    // gauge plus slice directions span the whole 32-dimensional tangent space
    auto dirs = gauge_basis(arr);
    for (const auto& d : moduli_directions()) dirs.push_back(d);
    EXPECT_EQ(rank(directions_matrix(dirs)), 32u);
  }
}

TEST(Gauge, BdotSolvesTheLinearizedRelation) {
  auto arr = from_moduli(random_moduli_point(4));
  auto B = complement_matrix(arr);
  for (const auto& d : moduli_directions()) {
    auto Bdot = bdot_from_adot(arr, B, d.Adot);
    EXPECT_TRUE((Bdot * arr.A + B * d.Adot).is_zero());
  }
}

TEST(RandomPoint, DeterministicAndGeneral) {
  EXPECT_EQ(random_moduli_point(17), random_moduli_point(17));
  EXPECT_FALSE(random_moduli_point(17) == random_moduli_point(18));
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(is_general_position(from_moduli(random_moduli_point(s))));
}

TEST(Json, ArrangementRoundTrip) {
  auto m = random_moduli_point(5);
  EXPECT_EQ(normalize(arrangement_from_json(moduli_to_json(m))), m);
  auto arr = vandermonde_point();
  EXPECT_EQ(arrangement_from_json(arrangement_to_json(arr)).A, arr.A);
  EXPECT_EQ(arrangement_digest(arr), arrangement_digest(arrangement_from_json(arrangement_to_json(arr))));
  EXPECT_THROW(arrangement_from_json(json{{"stars", json::array({1, 2})}}), ArrangementError);
}
