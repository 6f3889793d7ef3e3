#include <gtest/gtest.h>

#include <random>

#include "octic/arith/random.hpp"
#include "octic/groebner/hilbert.hpp"
#include "octic/ivhs/higgs.hpp"

using namespace octic;

namespace {

using FVec = std::vector<Fp>;

FVec random_vector(std::mt19937_64& rng, FpField F, std::size_t n) {
  FVec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(F.from_int(uniform_int(rng, 0, F.p - 1)));
  return v;
}

bool all_zero(const FVec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

bool ideal_vanishes_at(const Ideal<FpField>& I, const FVec& v) {
  for (const auto& g : I.gens)
    if (!g.evaluate(v).is_zero()) return false;
  return true;
}

const Ivhs<FpField>& vandermonde_fp() {
  static const Ivhs<FpField> iv = build_ivhs<FpField>(vandermonde_point(), FpField(kDefaultPrime));
  return iv;
}

const Ivhs<FpField>& random_fp() {
  static const Ivhs<FpField> iv = build_ivhs<FpField>(from_moduli(random_moduli_point(3)), FpField(kDefaultPrime));
  return iv;
}

}  // namespace

// Sign changes with an even number of minus signs, applied directly.
TEST(SignAction, InvariantMonomialsAreExactlyTheConstantParityOnes) {
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 300; ++trial) {
    Monomial m;
    for (std::size_t j = 0; j < 12; ++j) m.set(j, static_cast<int>(uniform_int(rng, 0, 3)));
    if (trial % 10 == 0)
      for (std::size_t j = 0; j < 8; ++j) m.set(j, 2 * static_cast<int>(uniform_int(rng, 0, 1)) + 1);
    bool fixed = true;
    int elements = 0;
    for (unsigned signs = 0; signs < 256; ++signs) {
      if (__builtin_popcount(signs) % 2) continue;
      ++elements;
      int minus = 0;
      for (std::size_t j = 0; j < 8; ++j)
        if (signs >> j & 1u) minus += m[j];
      fixed = fixed && minus % 2 == 0;
    }
    ASSERT_EQ(elements, 128);
    EXPECT_EQ(fixed, is_even_sign_invariant(m));
  }
}

TEST(GradedPiece, InvariantHodgeDimsOverQ) {
  auto jd = build_jacobian<QField>(vandermonde_point());
  EXPECT_EQ(hodge_dims(jd, true), (std::array<std::size_t, 4>{1, 9, 9, 1}));
  auto jr = build_jacobian<QField>(from_moduli(random_moduli_point(9)));
  EXPECT_EQ(hodge_dims(jr, true), (std::array<std::size_t, 4>{1, 9, 9, 1}));
}

TEST(GradedPiece, ReductionAnnihilatesExactlyTheRelations) {
  auto jd = build_jacobian<FpField>(from_moduli(random_moduli_point(21)), FpField(kDefaultPrime));
  for (int p = 1; p <= 2; ++p) {
    auto piece = graded_piece(jd, p, true, PieceMethod::Direct);
    EXPECT_EQ(piece.dim() + piece.relation_rank, piece.ambient.size());
    for (unsigned ch : {0u, 0xffu})
      for (const auto& r : relation_polys(jd, p, ch)) EXPECT_TRUE(all_zero(piece.reduce(r)));
    // every basis monomial maps to its own unit vector
    for (std::size_t k = 0; k < piece.dim(); ++k) {
      auto c = piece.reduce(piece.basis_poly(k));
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j].is_one(), j == k);
    }
    auto reduced = graded_piece(jd, p, true, PieceMethod::Reduced);
    EXPECT_EQ(reduced.dim(), piece.dim());
  }
}

TEST(Higgs, MultiplicationIsSymmetric) {
  std::mt19937_64 rng(502);
  const auto& iv = random_fp();
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_vector(rng, iv.field(), 9), v = random_vector(rng, iv.field(), 9);
    EXPECT_EQ(multiply_into_piece(iv, 1, u, v), multiply_into_piece(iv, 1, v, u));
  }
}

TEST(Higgs, GaugeDirectionsMapToZeroAndSliceIsFull) {
  for (const auto* iv : {&vandermonde_fp(), &random_fp()}) {
    auto G = tangent_classes(*iv, gauge_basis(iv->jd.arrangement));
    EXPECT_TRUE(G.is_zero());
    EXPECT_EQ(rank(moduli_frame(*iv)), 9u);
  }
  auto nodes = integer_nodes({1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(rank(tangent_classes(vandermonde_fp(), hyperelliptic_node_directions(nodes))), 5u);
}

// z lies on the locus of a_{k+1} exactly when mu_{k+1}(z^{k+1}) vanishes.
TEST(Higgs, DualityBetweenLocusAndIteratedMultiplication) {
  std::mt19937_64 rng(503);
  auto nodes = integer_nodes({1, 2, 3, 4, 5, 6, 7, 8});
  for (const auto* iv : {&vandermonde_fp(), &random_fp()}) {
    for (int k = 1; k <= 2; ++k) {
      auto ideal = characteristic_ideal(*iv, k).ideal;
      std::vector<FVec> samples;
      for (int t = 0; t < 50; ++t) samples.push_back(random_vector(rng, iv->field(), 9));
      if (iv == &vandermonde_fp()) {
        auto T = tangent_classes(*iv, hyperelliptic_node_directions(nodes));
        for (std::size_t r = 0; r < T.rows(); ++r) samples.push_back(T.row(r));
      }
      if (k == 2) {
        // points on the cubic: fix eight coordinates, search the ninth
        auto cubic = ideal.gens.at(0);
        for (int t = 0; t < 3; ++t) {
          auto v = random_vector(rng, iv->field(), 9);
          for (std::uint32_t c = 0; c < iv->field().p; ++c) {
            v[8] = iv->field().from_int(c);
            if (cubic.evaluate(v).is_zero()) {
              samples.push_back(v);
              break;
            }
          }
        }
      }
      int on_locus = 0;
      for (const auto& v : samples) {
        bool vanish = ideal_vanishes_at(ideal, v), killed = all_zero(power_class(*iv, v, k + 1));
        EXPECT_EQ(vanish, killed);
        on_locus += vanish;
      }
      if (k == 2 || iv == &vandermonde_fp()) {
        EXPECT_GT(on_locus, 0);
      }
    }
  }
}

TEST(Higgs, LocusInvariantsDoNotDependOnTheBasis) {
  std::mt19937_64 rng(504);
  for (const auto* iv : {&vandermonde_fp(), &random_fp()}) {
    auto ci = characteristic_ideal(*iv, 1);
    auto base = hilbert(buchberger(ci.ideal));
    Matrix<FpField> G(9, 9, iv->field());
    do {
      for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) G(i, j) = iv->field().from_int(uniform_int(rng, -20, 20));
    } while (rank(G) != 9);
    auto twisted = hilbert(buchberger(change_frame(ci, G).ideal));
    EXPECT_EQ(twisted.dimension, base.dimension);
    EXPECT_EQ(twisted.degree, base.degree);
    EXPECT_EQ(twisted.numerator, base.numerator);
  }
}

TEST(Higgs, YukawaCubicIsNonzeroAndMatchesPowerClass) {
  std::mt19937_64 rng(505);
  const auto& iv = random_fp();
  auto cubic = yukawa_cubic(iv);
  ASSERT_FALSE(cubic.is_zero());
  EXPECT_EQ(cubic.degree(), 3);
  // with R~(3) one-dimensional, cubic(v) is a fixed multiple of mu_3(v^3)
  std::optional<Fp> ratio;
  for (int t = 0; t < 10; ++t) {
    auto v = random_vector(rng, iv.field(), 9);
    auto val = cubic.evaluate(v);
    auto cls = power_class(iv, v, 3).at(0);
    if (cls.is_zero()) continue;
    auto r = val / cls;
    if (ratio) {
      EXPECT_EQ(r, *ratio);
    }
    ratio = r;
  }
}
