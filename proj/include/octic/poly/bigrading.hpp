#ifndef OCTIC_POLY_BIGRADING_HPP
#define OCTIC_POLY_BIGRADING_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octic/poly/monomial.hpp"
#include "octic/poly/order.hpp"

namespace octic {

using Bidegree = std::pair<int, int>;

/// Per-variable bidegree weights.
struct Bigrading {
  std::vector<Bidegree> weights;

  /// x_1..x_nx weigh (0,1), y_1..y_ny weigh (1,-2); x variables come first.
  static Bigrading jacobian(std::size_t nx = 8, std::size_t ny = 4) {
    Bigrading g;
    g.weights.assign(nx, {0, 1});
    g.weights.insert(g.weights.end(), ny, {1, -2});
    return g;
  }
};

inline Bidegree bidegree_of(const Monomial& m, const Bigrading& g) {
  Bidegree d{0, 0};
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    d.first += g.weights[i].first * m[i];
    d.second += g.weights[i].second * m[i];
  }
  for (std::size_t i = g.weights.size(); i < kMaxVars; ++i)
    if (m[i] != 0) throw std::invalid_argument("bidegree_of: monomial longer than grading");
  return d;
}

namespace detail {

inline void compositions(std::size_t lo, std::size_t hi, int degree, Monomial& cur,
                         const std::function<void(const Monomial&)>& out) {
  if (lo + 1 == hi) {
    cur.set(lo, degree);
    out(cur);
    cur.set(lo, 0);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.set(lo, e);
    compositions(lo + 1, hi, degree - e, cur, out);
  }
  cur.set(lo, 0);
}

}  // namespace detail

/// All monomials of total degree d in variables [lo, hi), unordered.
inline std::vector<Monomial> monomials_of_degree(std::size_t lo, std::size_t hi, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (lo == hi) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  detail::compositions(lo, hi, d, cur, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

/// x-exponent parity vector over the first nx variables as a bit mask.
inline unsigned x_parity(const Monomial& m, std::size_t nx = 8) {
  unsigned mask = 0;
  for (std::size_t j = 0; j < nx; ++j)
    if (m[j] & 1) mask |= 1u << j;
  return mask;
}

/// Fixed by every even sign change: parity vector all zero or all one.
inline bool is_even_sign_invariant(const Monomial& m, std::size_t nx = 8) {
  unsigned p = x_parity(m, nx);
  return p == 0 || p == (1u << nx) - 1;
}

inline void sort_descending(std::vector<Monomial>& ms, const MonomialOrder& ord, std::size_t n) {
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b, n) > 0; });
}

/// Monomials in n variables of total degree d, descending in `ord`.
inline std::vector<Monomial> enumerate_monomials(std::size_t n, int d,
                                                 const MonomialOrder& ord = MonomialOrder::grevlex()) {
  auto ms = monomials_of_degree(0, n, d);
  sort_descending(ms, ord, n);
  return ms;
}

/// Monomials of the 8+4 variable Jacobian ring with bidegree (p, q), i.e.
/// y-degree p and x-degree q + 2p, descending in grevlex. With
/// invariant_only, keeps the monomials fixed by the even sign changes.
inline std::vector<Monomial> enumerate_bidegree(Bidegree bd, bool invariant_only,
                                                std::size_t nx = 8, std::size_t ny = 4) {
  std::vector<Monomial> out;
  int ydeg = bd.first, xdeg = bd.second + 2 * bd.first;
  if (ydeg < 0 || xdeg < 0) return out;
  auto xs = monomials_of_degree(0, nx, xdeg);
  auto ys = monomials_of_degree(nx, nx + ny, ydeg);
  for (const auto& a : xs) {
    if (invariant_only && !is_even_sign_invariant(a, nx)) continue;
    for (const auto& b : ys) out.push_back(a * b);
  }
  sort_descending(out, MonomialOrder::grevlex(), nx + ny);
  return out;
}

}  // namespace octic

#endif  // OCTIC_POLY_BIGRADING_HPP
