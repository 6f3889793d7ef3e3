#include <gtest/gtest.h>

#include <random>
#include <unordered_map>

#include "octic/arith/random.hpp"
#include "octic/groebner/buchberger.hpp"
#include "octic/groebner/deadline.hpp"
#include "octic/groebner/hilbert.hpp"
#include "octic/groebner/operations.hpp"
#include "octic/poly/bigrading.hpp"
#include "octic/poly/parse.hpp"

using namespace octic;

namespace {

template <class Field>
Poly<Field> random_form(std::mt19937_64& rng, const RingPtr<Field>& R, int d, int terms) {
  auto ms = monomials_of_degree(0, R->nvars(), d);
  std::vector<Term<Field>> ts;
  for (int k = 0; k < terms; ++k)
    ts.push_back({ms[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(ms.size()) - 1))],
                  R->field.from_int(uniform_int(rng, -5, 5))});
  return Poly<Field>::from_terms(R, std::move(ts));
}

// Membership of a form of degree d by linear algebra on the monomial
// multiples of the generators; exact for homogeneous ideals.
template <class Field>
bool member_by_linear_algebra(const Ideal<Field>& I, const Poly<Field>& f) {
  if (f.is_zero()) return true;
  int d = f.degree();
  std::size_t n = I.ring->nvars();
  auto cols = monomials_of_degree(0, n, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index.emplace(cols[c], c);
  std::vector<Poly<Field>> rows;
  for (const auto& g : I.gens)
    if (g.degree() <= d)
      for (const auto& m : monomials_of_degree(0, n, d - g.degree())) rows.push_back(g.mul_term(m, I.ring->field.one()));
  Matrix<Field> M(rows.size() + 1, cols.size(), I.ring->field);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& t : rows[r].terms()) M(r, index.at(t.mono)) = t.coef;
  std::size_t base = rows.empty() ? 0 : rank(M);
  for (const auto& t : f.terms()) M(rows.size(), index.at(t.mono)) = t.coef;
  return rank(M) == base;
}

}  // namespace

TEST(Buchberger, TwistedCubic) {
  auto R = make_ring(QField{}, {"x", "y", "z", "w"});
  Ideal<QField> I(R, {parse_poly(R, "x*z - y^2"), parse_poly(R, "x*w - y*z"), parse_poly(R, "y*w - z^2")});
  auto gb = buchberger(I);
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
  EXPECT_TRUE(is_reduced(gb));
  auto h = hilbert(gb);
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 3);
  EXPECT_TRUE(ideal_contains(gb, parse_poly(R, "x*z^2 - y^2*z")));
  EXPECT_FALSE(ideal_contains(gb, parse_poly(R, "x*y")));
}

TEST(Buchberger, UnitIdealAndEmptyLocus) {
  auto R = make_ring(FpField(kDefaultPrime), {"x", "y"});
  Ideal<FpField> unit(R, {parse_poly(R, "x + 1"), parse_poly(R, "x")});
  EXPECT_TRUE(buchberger(unit).is_unit());
  Ideal<FpField> point(R, {parse_poly(R, "x^2"), parse_poly(R, "y^3")});
  EXPECT_TRUE(is_projectively_empty(point));
  EXPECT_EQ(hilbert(buchberger(point)).degree, 6);
}

TEST(Buchberger, SPolynomialsReduceToZeroOnRandomIdeals) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 60; ++trial) {
    auto R = make_ring(FpField(101), indexed_names("x", 3 + trial % 2));
    std::vector<Poly<FpField>> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_form(rng, R, 1 + (trial + g) % 3, 3));
    auto gb = buchberger(Ideal<FpField>(R, gens));
    EXPECT_TRUE(satisfies_buchberger_criterion(gb));
    for (const auto& g : gens) EXPECT_TRUE(ideal_contains(gb, g));
  }
}

// Raw generators form a basis exactly when their leading monomials generate
// the lead ideal of the reduced basis.
TEST(Buchberger, CriterionRejectsNonBases) {
  std::mt19937_64 rng(208);
  int bases = 0, non_bases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto R = make_ring(FpField(1009), indexed_names("x", 3 + trial % 2));
    std::vector<Poly<FpField>> gens;
    for (int g = 0; g < 2 + trial % 3; ++g) {
      auto f = random_form(rng, R, 1 + (trial + g) % 2, trial % 4 == 0 ? 1 : 2);
      if (!f.is_zero()) gens.push_back(f.monic());
    }
    if (gens.empty()) continue;
    GroebnerBasis<FpField> raw{R, gens};
    bool expected = true;
    for (const auto& m : buchberger(Ideal<FpField>(R, gens)).lead_monomials()) {
      bool covered = false;
      for (const auto& g : gens) covered = covered || g.lead_mono().divides(m);
      expected = expected && covered;
    }
    EXPECT_EQ(satisfies_buchberger_criterion(raw), expected) << "trial " << trial;
    (expected ? bases : non_bases)++;
  }
  EXPECT_GT(bases, 10);
  EXPECT_GT(non_bases, 10);
}

TEST(Buchberger, MembershipAgreesWithLinearAlgebraOracle) {
  std::mt19937_64 rng(202);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 240; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto R = make_ring(FpField(1009), indexed_names("x", n));
    std::vector<Poly<FpField>> gens;
    int ngens = 1 + trial % 3;
    for (int g = 0; g < ngens; ++g) gens.push_back(random_form(rng, R, 1 + static_cast<int>(uniform_int(rng, 0, 2)), 3));
    Ideal<FpField> I(R, gens);
    if (I.gens.empty()) continue;
    auto gb = buchberger(I);
    int d = static_cast<int>(uniform_int(rng, 3, 6));
    Poly<FpField> f(R);
    if (trial % 2 == 0) {
      for (const auto& g : I.gens)
        if (g.degree() <= d) f += g * random_form(rng, R, d - g.degree(), 2);
    } else {
      f = random_form(rng, R, d, 4);
    }
    bool by_gb = ideal_contains(gb, f), by_la = member_by_linear_algebra(I, f);
    ASSERT_EQ(by_gb, by_la) << "trial " << trial << " f = " << f.str();
    (by_gb ? members : non_members)++;
  }
  EXPECT_GT(members, 50);
  EXPECT_GT(non_members, 50);
}

TEST(Hilbert, IndependentOfMonomialOrder) {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 40; ++trial) {
    auto R = make_ring(FpField(32003), indexed_names("x", 4));
    std::vector<Poly<FpField>> gens;
    for (int g = 0; g < 1 + trial % 4; ++g) gens.push_back(random_form(rng, R, 2, 4));
    Ideal<FpField> I(R, gens);
    auto hg = hilbert(buchberger(I));
    auto hl = hilbert(buchberger(I.with_order(MonomialOrder::lex())));
    EXPECT_EQ(hg, hl);
  }
}

TEST(Hilbert, SeriesMatchesRankBruteForce) {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 30; ++trial) {
    auto R = make_ring(FpField(32003), indexed_names("x", 3 + trial % 3));
    std::vector<Poly<FpField>> gens;
    for (int g = 0; g < 1 + trial % 4; ++g) gens.push_back(random_form(rng, R, 1 + (g + trial) % 3, 4));
    Ideal<FpField> I(R, gens);
    auto h = hilbert(buchberger(I));
    for (int d = 0; d <= 5; ++d) EXPECT_EQ(h.value(d), hilbert_function_by_rank(I, d)) << "degree " << d;
  }
}

TEST(Elimination, ResultIsContainedAndFreeOfEliminatedVariables) {
  std::mt19937_64 rng(205);
  for (int trial = 0; trial < 30; ++trial) {
    auto R = make_ring(FpField(32003), indexed_names("x", 4));
    std::vector<Poly<FpField>> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_form(rng, R, 1 + g % 2, 3));
    Ideal<FpField> I(R, gens);
    std::size_t k = 1 + trial % 2;
    auto E = eliminate(I, k);
    auto gb = buchberger(I);
    for (const auto& g : E.gens) {
      for (std::size_t v = 0; v < k; ++v) EXPECT_FALSE(g.uses_var(v));
      EXPECT_TRUE(ideal_contains(gb, g.in_ring(R)));
    }
  }
}

TEST(Elimination, ParametrizedConicImplicitization) {
  // x = s^2, y = s t, z = t^2 gives y^2 - x z
  auto R = make_ring(QField{}, {"s", "t", "x", "y", "z"});
  Ideal<QField> I(R, {parse_poly(R, "x - s^2"), parse_poly(R, "y - s*t"), parse_poly(R, "z - t^2")});
  auto E = eliminate(I, 2);
  ASSERT_EQ(E.gens.size(), 1u);
  auto expected = parse_poly(E.ring, "y^2 - x*z");
  EXPECT_TRUE(E.gens[0] == expected || E.gens[0] == -expected) << E.gens[0].str();
}

TEST(Elimination, TruncatedMatchesFullElimination) {
  auto R = make_ring(QField{}, {"s", "t", "x", "y", "z"});
  Ideal<QField> I(R, {parse_poly(R, "x*t - s^2"), parse_poly(R, "y*t - s*t"), parse_poly(R, "z*s - t^2")});
  auto T = eliminate_truncated(buchberger(I), 2, 4);
  auto E = eliminate(I, 2);
  for (int d = 0; d <= 4; ++d) {
    // degree-d part of the full elimination, spanned by kept-variable multiples
    auto cols = monomials_of_degree(2, 5, d);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t c = 0; c < cols.size(); ++c) index.emplace(cols[c], c);
    std::vector<Poly<QField>> rows;
    for (const auto& g : E.gens)
      if (g.degree() <= d)
        for (const auto& m : monomials_of_degree(2, 5, d - g.degree())) rows.push_back(g.mul_term(m, Rational(1)));
    std::size_t expected = 0;
    if (!rows.empty()) {
      QMatrix M(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& t : rows[r].terms()) M(r, index.at(t.mono)) = t.coef;
      expected = rank(M);
    }
    EXPECT_EQ(T.dims[d], expected) << "degree " << d;
  }
}

TEST(Operations, IntersectionQuotientSaturation) {
  auto R = make_ring(QField{}, {"x", "y", "z"});
  auto x = Poly<QField>::var(R, 0), y = Poly<QField>::var(R, 1), z = Poly<QField>::var(R, 2);
  auto meet = buchberger(intersect(Ideal<QField>(R, {x}), Ideal<QField>(R, {y})));
  ASSERT_EQ(meet.elements.size(), 1u);
  EXPECT_EQ(meet.elements[0], x * y);
  auto q = buchberger(ideal_quotient(Ideal<QField>(R, {x * y, x * z}), x));
  EXPECT_TRUE(ideal_contains(q, y));
  EXPECT_TRUE(ideal_contains(q, z));
  EXPECT_FALSE(ideal_contains(q, x));
  auto sat = buchberger(saturate_by_linear(Ideal<QField>(R, {x * x * y, x * x * x}), x));
  EXPECT_TRUE(sat.is_unit());
}

TEST(Operations, RadicalMembershipIsMonotoneAndDetectsNilpotents) {
  std::mt19937_64 rng(206);
  auto R = make_ring(FpField(32003), {"x", "y", "z"});
  auto x = Poly<FpField>::var(R, 0), y = Poly<FpField>::var(R, 1);
  Ideal<FpField> I(R, {x.pow(3), y * y * x});
  EXPECT_TRUE(radical_membership(I, x));
  EXPECT_FALSE(radical_membership(I, y));
  auto gb = buchberger(I);
  auto v = radical_membership_certified(gb, I, x);
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.power, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly<FpField>> gens{random_form(rng, R, 2, 3), random_form(rng, R, 2, 3)};
    Ideal<FpField> J(R, gens);
    auto f = J.gens.empty() ? Poly<FpField>(R) : J.gens[0] * random_form(rng, R, 1, 2);
    EXPECT_TRUE(radical_membership(J, f));
  }
}

TEST(Deadline, ExpiredDeadlineAbortsBuchberger) {
  auto R = make_ring(QField{}, indexed_names("x", 6));
  std::mt19937_64 rng(207);
  std::vector<Poly<QField>> gens;
  for (int g = 0; g < 6; ++g) gens.push_back(random_form(rng, R, 3, 12));
  DeadlineScope scope(1e-9);
  EXPECT_THROW(buchberger(Ideal<QField>(R, gens)), ComputationTimeout);
}
