#include <gtest/gtest.h>

#include <map>
#include <random>

#include "octic/arith/random.hpp"
#include "octic/factor/bivariate.hpp"
#include "octic/factor/probe.hpp"
#include "octic/factor/univariate.hpp"
#include "octic/poly/parse.hpp"

using namespace octic;
using fpx::Coeffs;

namespace {

Coeffs random_monic(std::mt19937_64& rng, std::uint32_t p, int d) {
  Coeffs c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) c[i] = static_cast<std::uint32_t>(uniform_int(rng, 0, p - 1));
  c[d] = 1;
  return c;
}

Poly<FpField> to_poly(const RingPtr<FpField>& R, const Coeffs& c) {
  std::vector<Term<FpField>> ts;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) ts.push_back({Monomial::var(0, static_cast<int>(i)), Fp(c[i], R->field.p)});
  return Poly<FpField>::from_terms(R, std::move(ts));
}

// All monic polynomials of degree d over F_p, in counting order.
Coeffs nth_monic(std::uint32_t p, int d, std::uint64_t index) {
  Coeffs c(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  c[d] = 1;
  return c;
}

// Factor degree multiset by trial division with every monic polynomial of
// degree up to deg/2; independent of the library's factoring.
std::vector<int> trial_division_degrees(std::uint32_t p, Coeffs f) {
  fpx::Zp F{p};
  std::vector<int> out;
  for (int d = 1; 2 * d <= fpx::deg(f); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count && 2 * d <= fpx::deg(f); ++k) {
      auto g = nth_monic(p, d, k);
      while (fpx::deg(f) >= d) {
        Coeffs q, r;
        fpx::divmod(F, f, g, q, r);
        if (!r.empty()) break;
        out.push_back(d);
        f = q;
      }
    }
  }
  if (fpx::deg(f) > 0) out.push_back(fpx::deg(f));
  std::sort(out.begin(), out.end());
  return out;
}

// y^d + x * (lower terms) with the y^0 coefficient x * (unit + ...):
// irreducible by Eisenstein at the prime x.
Poly<FpField> eisenstein_piece(std::mt19937_64& rng, const RingPtr<FpField>& R, int d) {
  auto p = R->field.p;
  auto x = Poly<FpField>::var(R, 0), y = Poly<FpField>::var(R, 1);
  auto coef = [&](long lo) { return Fp(uniform_int(rng, lo, p - 1), p); };
  Poly<FpField> f = y.pow(d);
  f += x * Poly<FpField>(R, coef(1));
  for (int j = 1; j < d; ++j) {
    int room = d - j - 1;  // keep total degree at most d
    auto c = Poly<FpField>(R, coef(0));
    if (room >= 1) c += coef(0) * x;
    f += x * c * y.pow(j);
  }
  if (d >= 2) f += coef(0) * x * x;
  return f;
}

// x -> x + a y + b, a linear shear that keeps irreducibility and hides the
// Eisenstein shape.
Poly<FpField> shear(const Poly<FpField>& f, std::uint32_t a, std::uint32_t b) {
  const auto& R = f.ring();
  auto p = R->field.p;
  auto x = Poly<FpField>::var(R, 0), y = Poly<FpField>::var(R, 1);
  return substitute_linear(f, {x + Fp(a, p) * y + Poly<FpField>(R, Fp(b, p)), y});
}

}  // namespace

TEST(Univariate, AgreesWithTrialDivisionAtSmallPrimes) {
  std::mt19937_64 rng(401);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto R = make_ring(FpField(p), {"x"});
    for (int trial = 0; trial < 60; ++trial) {
      int d = 1 + trial % 7;
      auto c = random_monic(rng, p, d);
      auto f = to_poly(R, c);
      auto fl = factor_univariate_fp(f, static_cast<std::uint64_t>(trial));
      EXPECT_EQ(fl.product(R), f);
      EXPECT_EQ(fl.degree_multiset(), trial_division_degrees(p, c)) << "p=" << p << " f=" << f.str();
    }
  }
}

TEST(Univariate, RoundTripAtLargePrimes) {
  std::mt19937_64 rng(402);
  for (std::uint32_t p : {73u, 89u, 32003u}) {
    auto R = make_ring(FpField(p), {"x"});
    for (int trial = 0; trial < 80; ++trial) {
      auto f = to_poly(R, random_monic(rng, p, 1 + trial % 12));
      if (trial % 5 == 0) f = f * f * to_poly(R, random_monic(rng, p, 2));  // repeated factors
      auto fl = factor_univariate_fp(f, p, 1 + static_cast<std::uint64_t>(trial));
      EXPECT_EQ(fl.product(R), f);
      for (const auto& [g, e] : fl.factors) {
        fpx::Zp F{p};
        EXPECT_TRUE(fpx::is_irreducible(F, detail::to_coeffs(g, 0)));
      }
    }
  }
}

TEST(Univariate, FactorsOfFrobeniusPolynomialHaveDividingDegrees) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int k = 1; k <= 4; ++k) {
      std::uint64_t q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      if (q > 700) continue;
      auto R = make_ring(FpField(p), {"x"});
      auto x = Poly<FpField>::var(R, 0);
      auto f = x.pow(static_cast<unsigned>(q)) - x;
      auto fl = factor_univariate_fp(f);
      EXPECT_EQ(fl.product(R), f);
      std::map<int, int> per_degree;
      for (const auto& [g, e] : fl.factors) {
        EXPECT_EQ(e, 1);
        EXPECT_EQ(k % g.degree(), 0) << "p=" << p << " k=" << k;
        ++per_degree[g.degree()];
      }
      // the number of monic irreducibles of degree k, summed over divisors
      std::uint64_t total = 0;
      for (const auto& [d, n] : per_degree) total += static_cast<std::uint64_t>(d) * n;
      EXPECT_EQ(total, q);
    }
  }
}

TEST(Univariate, RejectsZeroAndWrongPrime) {
  auto R = make_ring(FpField(7), {"x"});
  EXPECT_THROW(factor_univariate_fp(Poly<FpField>(R)), std::invalid_argument);
  EXPECT_THROW(factor_univariate_fp(Poly<FpField>::var(R, 0), 11u, 1), std::invalid_argument);
}

TEST(Bivariate, RoundTripOnShearedEisensteinProducts) {
  std::mt19937_64 rng(403);
  int checked = 0;
  for (std::uint32_t p : {73u, 89u, 71u, 79u, 32003u}) {
    auto R = make_ring(FpField(p), {"x", "y"});
    for (int trial = 0; trial < 44; ++trial) {
      std::vector<int> degs;
      int budget = 8;
      Poly<FpField> f(R, Fp(1, p));
      int pieces = 1 + trial % 3;
      for (int k = 0; k < pieces && budget > 0; ++k) {
        int d = static_cast<int>(uniform_int(rng, 1, std::min(4, budget)));
        budget -= d;
        degs.push_back(d);
        f = f * eisenstein_piece(rng, R, d);
      }
      f = shear(f, static_cast<std::uint32_t>(uniform_int(rng, 0, p - 1)),
                static_cast<std::uint32_t>(uniform_int(rng, 0, p - 1)));
      f = Fp(static_cast<std::uint32_t>(uniform_int(rng, 1, p - 1)), p) * f;
      std::sort(degs.begin(), degs.end());
      auto fl = factor_bivariate_with_multiplicity(f, 7 + static_cast<std::uint64_t>(trial));
      EXPECT_EQ(fl.product(R), f) << f.str();
      EXPECT_EQ(fl.degree_multiset(), degs) << f.str();
      ++checked;
    }
  }
  EXPECT_GE(checked, 200);
}

TEST(Bivariate, SquarefreeEntryPointRejectsRepeatedFactors) {
  auto R = make_ring(FpField(73), {"x", "y"});
  auto g = parse_poly(R, "x^2 + y^2 + 3*x + 1");
  EXPECT_THROW(factor_bivariate_fp(g * g), NotSquarefreeError);
  auto fl = factor_bivariate_with_multiplicity(g * g * parse_poly(R, "x - y"));
  EXPECT_EQ(fl.degree_multiset(), (std::vector<int>{1, 2, 2}));
}

// x^2 + y^2 splits over F_p exactly when -1 is a square, i.e. p = 1 mod 4.
TEST(Bivariate, SumOfSquaresSplitsExactlyWhenMinusOneIsASquare) {
  for (std::uint32_t p : {73u, 89u, 71u, 79u}) {
    auto R = make_ring(FpField(p), {"x", "y"});
    auto fl = factor_bivariate_fp(parse_poly(R, "x^2 + y^2 + 1"));
    EXPECT_EQ(fl.factors.size(), 1u) << p;  // a smooth conic stays irreducible
    auto cone = factor_bivariate_fp(parse_poly(R, "x^2 + y^2"));
    EXPECT_EQ(cone.factors.size(), p % 4 == 1 ? 2u : 1u) << p;
  }
}

TEST(Probe, SplitPatternAndDeterminism) {
  for (std::uint32_t p : {73u, 71u}) {
    auto R = make_ring(FpField(p), {"a", "b", "c", "d"});
    auto q = parse_poly(R, "a^2 + b^2 + c*d");
    auto split = parse_poly(R, "a^4 + b^4 + c^4 + d^4 + a*b*c*d");
    auto reducible = q * parse_poly(R, "a^2 - 3*b*c + d^2");
    auto s1 = plane_restriction_probe(reducible, 5, 99), s2 = plane_restriction_probe(reducible, 5, 99);
    EXPECT_EQ(s1.verdict, "2+2");
    EXPECT_EQ(probe_to_json(s1), probe_to_json(s2));
    EXPECT_EQ(plane_restriction_probe(split, 5, 99).verdict, "irreducible");
    EXPECT_EQ(plane_restriction_probe(q * q, 3, 5).verdict, "repeated");
  }
}

TEST(Probe, VerdictVocabulary) {
  EXPECT_EQ(split_verdict({{8, 1}}), "irreducible");
  EXPECT_EQ(split_verdict({{4, 1}, {4, 1}}), "4+4");
  EXPECT_EQ(split_verdict({{5, 1}, {2, 1}, {1, 1}}), "1+2+5");
  EXPECT_EQ(split_verdict({{2, 2}}), "repeated");
}
