#ifndef OCTIC_FACTOR_UNIVARIATE_HPP
#define OCTIC_FACTOR_UNIVARIATE_HPP

// Factorization of univariate polynomials over F_p: squarefree decomposition,
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
// driven by a seeded generator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octic/arith/random.hpp"
#include "octic/factor/fp_poly.hpp"
#include "octic/poly/polynomial.hpp"

namespace octic {

/// Monic irreducible factors with multiplicities, and the leading unit:
/// input = unit * prod f_i^{e_i}.
struct FactorList {
  Fp unit;
  std::vector<std::pair<Poly<FpField>, int>> factors;

  /// Degrees of the factors, each repeated by its multiplicity, ascending.
  std::vector<int> degree_multiset() const {
    std::vector<int> d;
    for (const auto& [f, e] : factors)
      for (int k = 0; k < e; ++k) d.push_back(f.degree());
    std::sort(d.begin(), d.end());
    return d;
  }

  Poly<FpField> product(const RingPtr<FpField>& ring) const {
    Poly<FpField> r(ring, unit);
    for (const auto& [f, e] : factors) r *= f.pow(static_cast<unsigned>(e));
    return r;
  }
};

namespace fpx {

using RawFactors = std::vector<std::pair<Coeffs, int>>;

/// Sorted by degree, then coefficients, then multiplicity.
inline void sort_factors(RawFactors& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
}

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with the
/// g_i squarefree, pairwise coprime and f = prod g_i^i.
inline RawFactors squarefree_decomposition(const Zp& F, const Coeffs& f) {
  RawFactors out;
  if (deg(f) <= 0) return out;
  Coeffs d = derivative(F, f);
  if (d.empty()) {
    for (auto& [g, e] : squarefree_decomposition(F, pth_root(F, f))) out.emplace_back(g, e * static_cast<int>(F.p));
    return out;
  }
  Coeffs c = gcd(F, f, d);
  Coeffs w = divide_exact(F, f, c);
  int i = 1;
  while (deg(w) > 0) {
    Coeffs y = gcd(F, w, c);
    Coeffs z = divide_exact(F, w, y);
    if (deg(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = divide_exact(F, c, y);
  }
  if (deg(c) > 0)
    for (auto& [g, e] : squarefree_decomposition(F, pth_root(F, c))) out.emplace_back(g, e * static_cast<int>(F.p));
  return out;
}

/// Splits a monic squarefree polynomial into pairs (h_d, d) where h_d is the
/// product of its irreducible factors of degree d.
inline std::vector<std::pair<Coeffs, int>> distinct_degree(const Zp& F, Coeffs f) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs h = rem(F, x_poly(), f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(F, h, static_cast<std::uint64_t>(F.p), f);
    Coeffs g = gcd(F, f, sub(F, h, x_poly()));
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = divide_exact(F, f, g);
      h = rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

inline Coeffs random_below(const Zp& F, int n, std::mt19937_64& rng) {
  Coeffs a(static_cast<std::size_t>(n));
  for (auto& v : a) v = static_cast<std::uint32_t>(uniform_int(rng, 0, F.p - 1));
  trim(a);
  return a;
}

/// Candidate splitter for equal-degree factorization: a^((p^d-1)/2) - 1 for
/// odd p, and the trace a + a^2 + ... + a^(2^(d-1)) for p = 2.
inline Coeffs splitter(const Zp& F, const Coeffs& f, int d, std::mt19937_64& rng) {
  Coeffs a = random_below(F, deg(f), rng);
  if (F.p == 2) {
    Coeffs t = a, s = a;
    for (int i = 1; i < d; ++i) {
      s = mulmod(F, s, s, f);
      t = add(F, t, s);
    }
    return t;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  return sub(F, powmod(F, a, e, f), Coeffs{1});
}

/// Irreducible factors of a monic squarefree f all of whose factors have
/// degree d.
inline void equal_degree(const Zp& F, const Coeffs& f, int d, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  while (true) {
    Coeffs g = gcd(F, f, splitter(F, f, d, rng));
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, divide_exact(F, f, g), d, rng, out);
      return;
    }
  }
}

/// Complete factorization of a monic polynomial.
inline RawFactors factor_monic(const Zp& F, const Coeffs& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RawFactors out;
  for (const auto& [g, e] : squarefree_decomposition(F, f))
    for (const auto& [h, d] : distinct_degree(F, g)) {
      std::vector<Coeffs> irr;
      equal_degree(F, h, d, rng, irr);
      for (auto& q : irr) out.emplace_back(std::move(q), e);
    }
  sort_factors(out);
  return out;
}

inline bool is_squarefree(const Zp& F, const Coeffs& f) {
  if (deg(f) <= 0) return true;
  return deg(gcd(F, f, derivative(F, f))) == 0;
}

inline bool is_irreducible(const Zp& F, const Coeffs& f) {
  if (deg(f) <= 0) return false;
  auto fs = factor_monic(F, monic(F, f), 1);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace fpx

namespace detail {

/// The single variable used by f, or npos for constants.
inline std::size_t sole_variable(const Poly<FpField>& f) {
  std::size_t v = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (f.uses_var(i)) {
      if (v != static_cast<std::size_t>(-1)) throw std::invalid_argument("factor_univariate_fp: input is not univariate");
      v = i;
    }
  return v;
}

inline fpx::Coeffs to_coeffs(const Poly<FpField>& f, std::size_t var) {
  fpx::Coeffs c;
  for (const auto& t : f.terms()) {
    std::size_t e = var < f.ring()->nvars() ? static_cast<std::size_t>(t.mono[var]) : 0;
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] = t.coef.value();
  }
  fpx::trim(c);
  return c;
}

inline Poly<FpField> from_coeffs(const RingPtr<FpField>& R, const fpx::Coeffs& c, std::size_t var) {
  std::vector<Term<FpField>> ts;
  std::uint32_t p = R->field.p;
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) ts.push_back({Monomial::var(var, static_cast<int>(e)), Fp(c[e], p)});
  return Poly<FpField>::from_terms(R, std::move(ts));
}

}  // namespace detail

/// Factors a nonzero univariate f over F_p, where p is the characteristic
/// of f's ring.
inline FactorList factor_univariate_fp(const Poly<FpField>& f, std::uint64_t seed = 1) {
  if (f.is_zero()) throw std::invalid_argument("factor_univariate_fp: zero polynomial");
  const auto& R = f.ring();
  fpx::Zp F{R->field.p};
  std::size_t v = detail::sole_variable(f);
  FactorList out;
  out.unit = f.lead_coef();
  if (v == static_cast<std::size_t>(-1)) return out;
  fpx::Coeffs c = fpx::monic(F, detail::to_coeffs(f, v));
  for (const auto& [g, e] : fpx::factor_monic(F, c, seed)) out.factors.emplace_back(detail::from_coeffs(R, g, v), e);
  return out;
}

/// Overload naming the prime explicitly; it must match the ring of f.
inline FactorList factor_univariate_fp(const Poly<FpField>& f, std::uint32_t p, std::uint64_t seed) {
  if (f.ring()->field.p != p) throw std::invalid_argument("factor_univariate_fp: prime differs from the ring of f");
  return factor_univariate_fp(f, seed);
}

}  // namespace octic

#endif  // OCTIC_FACTOR_UNIVARIATE_HPP
