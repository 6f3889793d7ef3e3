#include <gtest/gtest.h>

#include <random>

#include "octic/arith/random.hpp"
#include "octic/poly/bigrading.hpp"
#include "octic/poly/parse.hpp"
#include "octic/poly/polynomial.hpp"

using namespace octic;

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  Monomial m;
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<int>(uniform_int(rng, 0, max_exp)));
  return m;
}

template <class Field>
Poly<Field> random_poly(std::mt19937_64& rng, const RingPtr<Field>& R, int terms, int max_exp) {
  std::vector<Term<Field>> ts;
  for (int k = 0; k < terms; ++k)
    ts.push_back({random_monomial(rng, R->nvars(), max_exp), R->field.from_int(uniform_int(rng, -9, 9))});
  return Poly<Field>::from_terms(R, std::move(ts));
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const std::vector<MonomialOrder>& orders() {
  static const std::vector<MonomialOrder> o = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                                               MonomialOrder::block_order(2), MonomialOrder::block_order(4)};
  return o;
}

}  // namespace

TEST(MonomialOrder, TotalMultiplicativeWellOrderedOnRandomTriples) {
  constexpr std::size_t n = 6;
  std::mt19937_64 rng(101);
  for (const auto& ord : orders()) {
    for (int trial = 0; trial < 1200; ++trial) {
      auto a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3), c = random_monomial(rng, n, 3);
      int ab = ord.compare(a, b, n), ba = ord.compare(b, a, n);
      ASSERT_EQ(ab, -ba) << ord.name();
      ASSERT_EQ(ab == 0, a == b) << ord.name();
      ASSERT_EQ(ord.compare(a * c, b * c, n), ab) << ord.name();
      if (ab < 0 && ord.compare(b, c, n) < 0) {
        ASSERT_LT(ord.compare(a, c, n), 0) << ord.name();
      }
      if (!a.is_one()) {
        ASSERT_GT(ord.compare(a, Monomial(), n), 0) << ord.name();
      }
    }
  }
}

TEST(MonomialOrder, BlockOrderEliminatesFirstBlock) {
  std::mt19937_64 rng(102);
  constexpr std::size_t k = 2;
  auto R = make_ring(QField{}, indexed_names("x", 5), MonomialOrder::block_order(k));
  for (int trial = 0; trial < 300; ++trial) {
    auto f = random_poly(rng, R, 1 + trial % 6, 2);
    if (f.is_zero()) continue;
    bool lead_free = f.lead_mono().degree_in(0, k) == 0;
    bool all_free = true;
    for (const auto& t : f.terms()) all_free = all_free && t.mono.degree_in(0, k) == 0;
    EXPECT_EQ(lead_free, all_free);
  }
}

TEST(Bigrading, BidegreeIsAdditive) {
  std::mt19937_64 rng(103);
  auto g = Bigrading::jacobian();
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_monomial(rng, 12, 3), b = random_monomial(rng, 12, 3);
    auto da = bidegree_of(a, g), db = bidegree_of(b, g), dab = bidegree_of(a * b, g);
    EXPECT_EQ(dab.first, da.first + db.first);
    EXPECT_EQ(dab.second, da.second + db.second);
  }
}

TEST(Bigrading, EnumerationCountsMatchBinomials) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (int d = 0; d <= 6; ++d) {
      auto ms = enumerate_monomials(n, d);
      EXPECT_EQ(static_cast<long>(ms.size()), binomial(static_cast<long>(n) + d - 1, d));
      for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_GT(MonomialOrder::grevlex().compare(ms[i - 1], ms[i], n), 0);
    }
  // bidegree (p, 0) of the Jacobian ring: C(p+3,3) y-monomials times x-monomials of degree 2p
  for (int p = 0; p <= 2; ++p)
    EXPECT_EQ(static_cast<long>(enumerate_bidegree({p, 0}, false).size()), binomial(p + 3, 3) * binomial(2 * p + 7, 7));
}

TEST(Bigrading, InvariantMonomialsHaveConstantParity) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 500; ++trial) {
    auto m = random_monomial(rng, 8, 3);
    unsigned par = x_parity(m);
    EXPECT_EQ(is_even_sign_invariant(m), par == 0 || par == 0xFFu);
  }
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(105);
  auto R = make_ring(QField{}, indexed_names("x", 3));
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, R, 4, 2), b = random_poly(rng, R, 4, 2), c = random_poly(rng, R, 3, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Poly, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(106);
  FpField F(kDefaultPrime);
  auto R = make_ring(F, indexed_names("x", 4));
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, R, 5, 3), b = random_poly(rng, R, 5, 3);
    std::vector<Fp> pt;
    for (int i = 0; i < 4; ++i) pt.push_back(F.from_int(uniform_int(rng, 0, 1000)));
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST(Poly, DerivativeObeysLeibniz) {
  std::mt19937_64 rng(107);
  auto R = make_ring(QField{}, indexed_names("x", 3));
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, R, 4, 3), b = random_poly(rng, R, 4, 3);
    for (std::size_t v = 0; v < 3; ++v)
      EXPECT_EQ((a * b).partial_derivative(v), a.partial_derivative(v) * b + a * b.partial_derivative(v));
  }
}

TEST(Poly, ParsePrintRoundTrip) {
  std::mt19937_64 rng(108);
  auto R = make_ring(QField{}, indexed_names("z", 4));
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, R, 5, 3);
    if (trial % 3 == 0) f = Rational(1) / Rational(3 + trial % 5) * f;
    EXPECT_EQ(parse_poly(R, f.str()), f) << f.str();
  }
  EXPECT_EQ(parse_poly(R, "(z1 + z2)^2 - 2*z1*z2"), parse_poly(R, "z1^2 + z2^2"));
  EXPECT_THROW(parse_poly(R, "z1 + w"), PolyParseError);
  EXPECT_THROW(parse_poly(R, "z1 +"), PolyParseError);
}

TEST(Poly, SubstituteLinearMatchesEvaluationOfImages) {
  std::mt19937_64 rng(109);
  FpField F(kDefaultPrime);
  auto R = make_ring(F, indexed_names("x", 3));
  auto S = make_ring(F, {"s", "t"});
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(rng, R, 5, 3);
    std::vector<Poly<FpField>> images;
    for (int i = 0; i < 3; ++i) images.push_back(random_poly(rng, S, 3, 1));
    auto g = substitute_linear(f, images);
    std::vector<Fp> st{F.from_int(uniform_int(rng, 0, 999)), F.from_int(uniform_int(rng, 0, 999))};
    std::vector<Fp> pt;
    for (const auto& im : images) pt.push_back(im.evaluate(st));
    EXPECT_EQ(g.evaluate(st), f.evaluate(pt));
  }
}
