#ifndef OCTIC_FACTOR_FP_POLY_HPP
#define OCTIC_FACTOR_FP_POLY_HPP

// Dense univariate polynomials over F_p, coefficients stored low degree first
// with no trailing zeros. This is the workhorse for the factorization
// routines; the sparse Poly type is only used at the interface.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace octic::fpx {

using Coeffs = std::vector<std::uint32_t>;

struct Zp {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Zp: inverse of zero");
    return pow(a, p - 2);
  }
  std::uint32_t from_long(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
};

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_one(const Coeffs& a) { return a.size() == 1 && a[0] == 1; }
inline std::uint32_t lead(const Coeffs& a) { return a.empty() ? 0 : a.back(); }

inline Coeffs add(const Zp& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

inline Coeffs sub(const Zp& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

inline Coeffs scale(const Zp& F, const Coeffs& a, std::uint32_t c) {
  if (c == 0) return {};
  Coeffs r(a);
  for (auto& v : r) v = F.mul(v, c);
  return r;
}

inline Coeffs mul(const Zp& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  const std::uint64_t pp = static_cast<std::uint64_t>(F.p) * F.p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      if (acc[i + j] >= pp) acc[i + j] -= pp;
    }
  }
  Coeffs r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % F.p);
  trim(r);
  return r;
}

inline Coeffs monic(const Zp& F, const Coeffs& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

/// a = q*b + r with deg r < deg b.
inline void divmod(const Zp& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  if (b.empty()) throw std::domain_error("fpx::divmod: division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  std::uint32_t inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint32_t c = F.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
}

inline Coeffs rem(const Zp& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divmod(F, a, b, q, r);
  return r;
}

inline Coeffs quo(const Zp& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divmod(F, a, b, q, r);
  return q;
}

/// Exact quotient; throws when b does not divide a.
inline Coeffs divide_exact(const Zp& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divmod(F, a, b, q, r);
  if (!r.empty()) throw std::logic_error("fpx::divide_exact: nonzero remainder");
  return q;
}

/// Monic gcd (zero when both inputs are zero).
inline Coeffs gcd(const Zp& F, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    Coeffs r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

/// Monic g = gcd(a, b) together with s, t such that s*a + t*b = g.
inline Coeffs xgcd(const Zp& F, const Coeffs& a, const Coeffs& b, Coeffs& s, Coeffs& t) {
  Coeffs r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    Coeffs q, r;
    divmod(F, r0, r1, q, r);
    Coeffs s2 = sub(F, s0, mul(F, q, s1));
    Coeffs t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1), r1 = std::move(r);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {}, t = {};
    return r0;
  }
  std::uint32_t inv = F.inv(r0.back());
  s = scale(F, s0, inv);
  t = scale(F, t0, inv);
  return scale(F, r0, inv);
}

inline Coeffs derivative(const Zp& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], static_cast<std::uint32_t>(i % F.p));
  trim(r);
  return r;
}

inline Coeffs mulmod(const Zp& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  return rem(F, mul(F, a, b), m);
}

inline Coeffs powmod(const Zp& F, Coeffs base, const mpz_class& e, const Coeffs& m) {
  Coeffs acc = rem(F, Coeffs{1}, m);
  base = rem(F, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = mulmod(F, acc, acc, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(F, acc, base, m);
  }
  return acc;
}

inline Coeffs powmod(const Zp& F, const Coeffs& base, std::uint64_t e, const Coeffs& m) {
  return powmod(F, base, mpz_class(static_cast<unsigned long>(e)), m);
}

inline std::uint32_t evaluate(const Zp& F, const Coeffs& a, std::uint32_t x) {
  std::uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

/// Coefficients x^i -> x^(i/p); requires every exponent to be a multiple of p.
inline Coeffs pth_root(const Zp& F, const Coeffs& a) {
  Coeffs r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % F.p != 0) throw std::logic_error("fpx::pth_root: not a p-th power");
    if (r.size() <= i / F.p) r.resize(i / F.p + 1, 0);
    r[i / F.p] = a[i];
  }
  return r;
}

inline Coeffs x_poly() { return {0, 1}; }

}  // namespace octic::fpx

#endif  // OCTIC_FACTOR_FP_POLY_HPP
