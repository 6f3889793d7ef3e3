#ifndef OCTIC_FACTOR_BIVARIATE_HPP
#define OCTIC_FACTOR_BIVARIATE_HPP

// Bivariate factorization over F_p. The input is sheared (x -> x + c y) until
// it is monic in y, evaluated at a point x = a where it stays squarefree,
// factored there, Hensel-lifted (x - a)-adically and recombined by subset
// search over the lifted factors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octic/factor/univariate.hpp"

namespace octic {

class NotSquarefreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace fpx {

/// Element j holds the coefficient of y^j, a polynomial in x.
using Bi = std::vector<Coeffs>;

inline void trim(Bi& a) {
  for (auto& c : a) trim(c);
  while (!a.empty() && a.back().empty()) a.pop_back();
}

inline int deg_y(const Bi& a) { return static_cast<int>(a.size()) - 1; }

inline int deg_x(const Bi& a) {
  int d = -1;
  for (const auto& c : a) d = std::max(d, deg(c));
  return d;
}

inline int total_degree(const Bi& a) {
  int d = -1;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!a[j].empty()) d = std::max(d, deg(a[j]) + static_cast<int>(j));
  return d;
}

inline Bi constant_in_x(const Coeffs& u) {
  Bi r;
  for (auto c : u) r.push_back(c ? Coeffs{c} : Coeffs{});
  trim(r);
  return r;
}

inline Bi sub(const Zp& F, const Bi& a, const Bi& b) {
  Bi r(std::max(a.size(), b.size()));
  for (std::size_t j = 0; j < r.size(); ++j)
    r[j] = sub(F, j < a.size() ? a[j] : Coeffs{}, j < b.size() ? b[j] : Coeffs{});
  trim(r);
  return r;
}

inline void truncate_x(Bi& a, int k) {
  for (auto& c : a)
    if (static_cast<int>(c.size()) > k) c.resize(static_cast<std::size_t>(k));
  trim(a);
}

/// Product, with x-degrees truncated below k when k >= 0.
inline Bi mul(const Zp& F, const Bi& a, const Bi& b, int k = -1) {
  if (a.empty() || b.empty()) return {};
  Bi r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].empty() && !b[j].empty()) r[i + j] = add(F, r[i + j], mul(F, a[i], b[j]));
  if (k >= 0) truncate_x(r, k);
  trim(r);
  return r;
}

/// Long division in y by d, whose y-leading coefficient must be a nonzero
/// constant. Returns the quotient and stores the remainder.
inline Bi divmod_y(const Zp& F, const Bi& a, const Bi& d, Bi& r) {
  if (d.empty() || d.back().size() != 1) throw std::logic_error("fpx::divmod_y: divisor lead is not a constant");
  std::uint32_t inv = F.inv(d.back()[0]);
  r = a;
  trim(r);
  if (r.size() < d.size()) return {};
  Bi q(r.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Coeffs c = scale(F, r[k + d.size() - 1], inv);
    if (c.empty()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] = sub(F, r[k + j], mul(F, c, d[j]));
    q[k] = std::move(c);
  }
  trim(r);
  trim(q);
  return q;
}

inline Bi derivative_y(const Zp& F, const Bi& a) {
  Bi r;
  for (std::size_t j = 1; j < a.size(); ++j) r.push_back(scale(F, a[j], static_cast<std::uint32_t>(j % F.p)));
  trim(r);
  return r;
}

inline Coeffs content_x(const Zp& F, const Bi& a) {
  Coeffs g;
  for (const auto& c : a) g = gcd(F, g, c);
  return g;
}

inline Bi primitive_y(const Zp& F, const Bi& a) {
  Coeffs g = content_x(F, a);
  if (g.empty()) return {};
  Bi r;
  for (const auto& c : a) r.push_back(quo(F, c, g));
  trim(r);
  // make the leading coefficient monic
  std::uint32_t inv = F.inv(lead(r.back()));
  for (auto& c : r) c = scale(F, c, inv);
  return r;
}

/// lc(b)^(da-db+1) * a mod b, the pseudo-remainder in y.
inline Bi pseudo_rem(const Zp& F, Bi a, const Bi& b) {
  while (deg_y(a) >= deg_y(b) && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Coeffs la = a.back();
    for (auto& c : a) c = mul(F, c, b.back());
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(F, a[shift + j], mul(F, la, b[j]));
    trim(a);
  }
  return a;
}

/// Primitive gcd in F_p[x][y] of two polynomials without x-content, with
/// monic y-leading coefficient.
inline Bi gcd_y(const Zp& F, Bi a, Bi b) {
  a = primitive_y(F, a);
  b = primitive_y(F, b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (deg_y(a) < deg_y(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg_y(b) == 0) return Bi{Coeffs{1}};
    Bi r = pseudo_rem(F, a, b);
    a = std::move(b);
    b = primitive_y(F, r);
  }
  return a;
}

/// P(x + alpha + beta*y, y).
inline Bi affine_substitute(const Zp& F, const Bi& P, std::uint32_t alpha, std::uint32_t beta) {
  int d = deg_x(P);
  if (d < 0) return {};
  std::vector<Coeffs> upow{{1}};
  for (int i = 1; i <= d; ++i) upow.push_back(mul(F, upow.back(), Coeffs{alpha, 1}));
  std::vector<std::vector<std::uint32_t>> binom(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    binom[i].assign(static_cast<std::size_t>(i) + 1, 1 % F.p);
    for (int k = 1; k < i; ++k) binom[i][k] = F.add(binom[i - 1][k - 1], binom[i - 1][k]);
  }
  Bi r(P.size() + static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < P.size(); ++j)
    for (int i = 0; i <= deg(P[j]); ++i) {
      std::uint32_t c = P[j][i];
      if (c == 0) continue;
      std::uint32_t bk = 1 % F.p;
      for (int k = 0; k <= i; ++k) {
        std::uint32_t w = F.mul(c, F.mul(binom[i][k], bk));
        if (w) r[j + k] = add(F, r[j + k], scale(F, upow[i - k], w));
        bk = F.mul(bk, beta);
      }
    }
  trim(r);
  return r;
}

inline Coeffs evaluate_x(const Zp& F, const Bi& a, std::uint32_t x) {
  Coeffs u;
  for (const auto& c : a) u.push_back(evaluate(F, c, x));
  trim(u);
  return u;
}

/// Value of the top-degree form of P at (x, y) = (c, 1).
inline std::uint32_t top_form_at(const Zp& F, const Bi& P, std::uint32_t c) {
  int D = total_degree(P);
  std::uint32_t v = 0;
  for (std::size_t j = 0; j < P.size(); ++j) {
    int i = D - static_cast<int>(j);
    if (i >= 0 && i < static_cast<int>(P[j].size())) v = F.add(v, F.mul(P[j][i], F.pow(c, i)));
  }
  return v;
}

/// Lifts f = G0*H0 mod x (G0, H0 coprime, monic in y) to f = G*H mod x^k.
inline void hensel_lift(const Zp& F, const Bi& f, const Coeffs& G0, const Coeffs& H0, int k, Bi& G, Bi& H) {
  Coeffs s, t;
  Coeffs g = xgcd(F, G0, H0, s, t);
  if (!is_one(g)) throw std::logic_error("hensel_lift: modular factors are not coprime");
  G = constant_in_x(G0);
  H = constant_in_x(H0);
  for (int e = 1; e < k; ++e) {
    Bi err = sub(F, f, mul(F, G, H, e + 1));
    truncate_x(err, e + 1);
    Coeffs er;
    for (const auto& c : err) er.push_back(static_cast<int>(c.size()) > e ? c[e] : 0);
    trim(er);
    if (er.empty()) continue;
    Coeffs dG = rem(F, mul(F, t, er), G0);
    Coeffs dH = rem(F, mul(F, s, er), H0);
    auto bump = [&](Bi& X, const Coeffs& d) {
      if (X.size() < d.size()) X.resize(d.size());
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] == 0) continue;
        if (static_cast<int>(X[j].size()) <= e) X[j].resize(static_cast<std::size_t>(e) + 1, 0);
        X[j][e] = F.add(X[j][e], d[j]);
      }
      trim(X);
    };
    bump(G, dG);
    bump(H, dH);
  }
}

/// Factors g, monic in y and squarefree, through the evaluation x = a.
/// Returns nullopt when no tested point keeps g(a, y) squarefree.
inline std::optional<std::vector<Bi>> split_monic_squarefree(const Zp& F, const Bi& g, std::mt19937_64& rng) {
  int D = deg_y(g);
  if (D <= 1) return std::vector<Bi>{g};
  std::vector<std::uint32_t> points;
  if (F.p <= 64) {
    for (std::uint32_t a = 0; a < F.p; ++a) points.push_back(a);
  } else {
    for (int i = 0; i < 64; ++i) points.push_back(static_cast<std::uint32_t>(uniform_int(rng, 0, F.p - 1)));
  }
  for (std::uint32_t a : points) {
    Coeffs u = evaluate_x(F, g, a);
    if (!is_squarefree(F, u)) continue;
    auto mods = factor_monic(F, u, rng());
    if (mods.size() == 1) return std::vector<Bi>{g};
    Bi gs = affine_substitute(F, g, a, 0);
    int K = deg_x(gs) + 1;
    std::vector<Bi> lifted;
    Bi rest = gs;
    truncate_x(rest, K);
    for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
      Coeffs H0{1};
      for (std::size_t j = i + 1; j < mods.size(); ++j) H0 = mul(F, H0, mods[j].first);
      Bi G, H;
      hensel_lift(F, rest, mods[i].first, H0, K, G, H);
      lifted.push_back(std::move(G));
      rest = std::move(H);
    }
    lifted.push_back(rest);

    std::vector<Bi> found;
    std::vector<std::size_t> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    Bi cur = gs;
    for (std::size_t s = 1; 2 * s <= live.size();) {
      bool hit = false;
      std::vector<std::size_t> pick(s);
      for (std::size_t i = 0; i < s; ++i) pick[i] = i;
      while (true) {
        Bi cand{Coeffs{1}};
        for (auto i : pick) cand = mul(F, cand, lifted[live[i]], K);
        Bi r;
        Bi q = divmod_y(F, cur, cand, r);
        if (r.empty()) {
          found.push_back(cand);
          cur = std::move(q);
          std::vector<std::size_t> next;
          for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
            if (k < s && pick[k] == i) {
              ++k;
              continue;
            }
            next.push_back(live[i]);
          }
          live = std::move(next);
          hit = true;
          break;
        }
        // next s-subset of [0, live.size()) in lex order
        std::size_t i = s;
        while (i > 0 && pick[i - 1] == live.size() - s + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (!hit) ++s;
    }
    if (deg_y(cur) > 0) found.push_back(cur);
    for (auto& h : found) h = affine_substitute(F, h, F.neg(a), 0);
    return found;
  }
  return std::nullopt;
}

/// Yun's decomposition in F_p(x)[y] of g monic in y; needs p > deg_y g.
inline std::vector<std::pair<Bi, int>> squarefree_decomposition_y(const Zp& F, const Bi& g) {
  std::vector<std::pair<Bi, int>> out;
  if (deg_y(g) <= 0) return out;
  Bi r;
  Bi c = gcd_y(F, g, derivative_y(F, g));
  Bi w = divmod_y(F, g, c, r);
  int i = 1;
  while (deg_y(w) > 0) {
    Bi y = gcd_y(F, w, c);
    Bi z = divmod_y(F, w, y, r);
    if (deg_y(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = divmod_y(F, c, y, r);
  }
  return out;
}

}  // namespace fpx

namespace detail {

struct BiVars {
  std::size_t x = 0, y = 1;
  std::size_t count = 0;
};

inline BiVars bivariate_vars(const Poly<FpField>& f) {
  BiVars v;
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (f.uses_var(i)) used.push_back(i);
  if (used.size() > 2) throw std::invalid_argument("factor_bivariate_fp: more than two variables");
  v.count = used.size();
  if (used.size() == 2) v.x = used[0], v.y = used[1];
  return v;
}

inline fpx::Bi to_bi(const Poly<FpField>& f, const BiVars& v) {
  fpx::Bi b;
  for (const auto& t : f.terms()) {
    auto i = static_cast<std::size_t>(t.mono[v.x]), j = static_cast<std::size_t>(t.mono[v.y]);
    if (b.size() <= j) b.resize(j + 1);
    if (b[j].size() <= i) b[j].resize(i + 1, 0);
    b[j][i] = t.coef.value();
  }
  fpx::trim(b);
  return b;
}

inline Poly<FpField> from_bi(const RingPtr<FpField>& R, const fpx::Bi& b, const BiVars& v) {
  std::vector<Term<FpField>> ts;
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b[j].size(); ++i)
      if (b[j][i]) ts.push_back({Monomial::var(v.x, static_cast<int>(i)) * Monomial::var(v.y, static_cast<int>(j)),
                                 Fp(b[j][i], R->field.p)});
  return Poly<FpField>::from_terms(R, std::move(ts));
}

inline void sort_factor_list(FactorList& fl) {
  std::sort(fl.factors.begin(), fl.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    std::string sa = a.first.str(), sb = b.first.str();
    if (sa != sb) return sa < sb;
    return a.second < b.second;
  });
}

inline constexpr int kMaxShears = 32;

/// Shared driver: factors f, optionally allowing repeated factors.
inline FactorList factor_bivariate_impl(const Poly<FpField>& f, std::uint64_t seed, bool allow_repeated) {
  if (f.is_zero()) throw std::invalid_argument("factor_bivariate_fp: zero polynomial");
  BiVars v = bivariate_vars(f);
  const auto& R = f.ring();
  if (v.count < 2) {
    FactorList fl = factor_univariate_fp(f, seed);
    if (!allow_repeated)
      for (const auto& [g, e] : fl.factors)
        if (e > 1) throw NotSquarefreeError("factor_bivariate_fp: input is not squarefree");
    return fl;
  }
  fpx::Zp F{R->field.p};
  fpx::Bi b = to_bi(f, v);
  int D = fpx::total_degree(b);
  if (static_cast<long>(F.p) <= D)
    throw std::invalid_argument("factor_bivariate_fp: characteristic must exceed the total degree");
  std::mt19937_64 rng(seed);
  bool checked = false;
  for (int attempt = 0; attempt < kMaxShears; ++attempt) {
    auto c = attempt == 0 ? 0u : static_cast<std::uint32_t>(uniform_int(rng, 1, F.p - 1));
    std::uint32_t lc = fpx::top_form_at(F, b, c);
    if (lc == 0) continue;
    fpx::Bi g = fpx::affine_substitute(F, b, 0, c);
    std::uint32_t inv = F.inv(lc);
    for (auto& cf : g) cf = fpx::scale(F, cf, inv);
    auto parts = fpx::squarefree_decomposition_y(F, g);
    if (!checked) {
      checked = true;
      bool repeated = std::any_of(parts.begin(), parts.end(), [](const auto& pe) { return pe.second > 1; });
      if (repeated && !allow_repeated) throw NotSquarefreeError("factor_bivariate_fp: input is not squarefree");
    }
    FactorList fl;
    fl.unit = f.lead_coef();
    bool ok = true;
    for (const auto& [part, e] : parts) {
      auto split = fpx::split_monic_squarefree(F, part, rng);
      if (!split) {
        ok = false;
        break;
      }
      for (const auto& h : *split)
        fl.factors.emplace_back(from_bi(R, fpx::affine_substitute(F, h, 0, F.neg(c)), v).monic(), e);
    }
    if (!ok) continue;
    sort_factor_list(fl);
    return fl;
  }
  throw std::runtime_error("factor_bivariate_fp: no good evaluation point after " + std::to_string(kMaxShears) +
                           " shears");
}

}  // namespace detail

/// Factors a squarefree polynomial in at most two variables over F_p (the
/// characteristic of its ring, which must exceed the total degree).
inline FactorList factor_bivariate_fp(const Poly<FpField>& f, std::uint64_t seed = 1) {
  return detail::factor_bivariate_impl(f, seed, false);
}

/// Variant accepting repeated factors: squarefree decomposition in the
/// lifting variable first, then each part as above.
inline FactorList factor_bivariate_with_multiplicity(const Poly<FpField>& f, std::uint64_t seed = 1) {
  return detail::factor_bivariate_impl(f, seed, true);
}

}  // namespace octic

#endif  // OCTIC_FACTOR_BIVARIATE_HPP
