#ifndef OCTIC_GROEBNER_HILBERT_HPP
#define OCTIC_GROEBNER_HILBERT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "octic/arith/matrix.hpp"
#include "octic/groebner/buchberger.hpp"
#include "octic/poly/bigrading.hpp"

namespace octic {

/// Integer univariate polynomial, coefficient k of t^k.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline IntPoly add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}
inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}
inline IntPoly shift(IntPoly a, int k) {
  if (a.empty()) return a;
  a.insert(a.begin(), static_cast<std::size_t>(k), 0);
  return a;
}
/// 1 - t^d
inline IntPoly one_minus_t_pow(int d) {
  IntPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] += 1;
  p[d] -= 1;
  trim(p);
  return p;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  return out;
}

/// Numerator N of the Hilbert series N(t)/(1-t)^n of S/(gens) by pivoting
/// on a variable: N(I) = N(I + (x)) + t * N(I : x).
inline IntPoly hilbert_numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = mul(r, one_minus_t_pow(g.degree()));
    return r;
  }
  // pivot on the variable occurring in the most non-linear generators
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens)
    if (g.degree() > 1)
      for (std::size_t v = 0; v < nvars; ++v)
        if (g[v] > 0) ++count[v];
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x = Monomial::var(var);
  std::vector<Monomial> plus;
  for (const auto& g : gens)
    if (g[var] == 0) plus.push_back(g);
  plus.push_back(x);
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    Monomial q = g;
    if (q[var] > 0) q.set(var, q[var] - 1);
    quot.push_back(q);
  }
  return add(hilbert_numerator_rec(std::move(plus), nvars), shift(hilbert_numerator_rec(std::move(quot), nvars), 1));
}

}  // namespace detail

/// Hilbert series data of a homogeneous quotient S/I with S in n variables.
struct HilbertData {
  IntPoly numerator;            // h(t) with series h(t)/(1-t)^n
  std::size_t nvars = 0;
  IntPoly reduced_numerator;    // after cancelling (1-t) factors
  int dimension = -1;           // Krull dimension of the cone; -1 for the unit ideal
  std::int64_t degree = 0;

  int projective_dimension() const { return dimension - 1; }

  /// dim_k of the degree-d piece.
  std::int64_t value(int d) const {
    // coefficient of t^d in reduced_numerator / (1-t)^dimension
    if (dimension < 0) return 0;
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < reduced_numerator.size() && static_cast<int>(k) <= d; ++k) {
      // C(d-k + dim-1, dim-1)
      std::int64_t m = d - static_cast<int>(k);
      std::int64_t b = dimension == 0 ? (m == 0 ? 1 : 0) : 1;
      if (dimension > 0)
        for (int i = 1; i < dimension; ++i) b = b * (m + i) / i;
      acc += reduced_numerator[k] * b;
    }
    return acc;
  }

  std::string numerator_str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      if (numerator[k] == 0) continue;
      std::int64_t c = numerator[k];
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      std::int64_t a = c < 0 ? -c : c;
      if (k == 0)
        os << a;
      else {
        if (a != 1) os << a << "*";
        os << "t";
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return first ? "0" : os.str();
  }

  friend bool operator==(const HilbertData& a, const HilbertData& b) {
    return a.numerator == b.numerator && a.nvars == b.nvars && a.dimension == b.dimension &&
           a.degree == b.degree;
  }
};

inline HilbertData hilbert_from_monomials(const std::vector<Monomial>& leads, std::size_t nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = detail::hilbert_numerator_rec(leads, nvars);
  if (h.numerator.empty()) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  IntPoly r = h.numerator;
  int cancelled = 0;
  auto at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (at_one(r) == 0) {
    // synthetic division by (1 - t): r = (1-t) q  <=>  q_k = sum_{i<=k} r_i
    IntPoly q(r.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      acc += r[k];
      q[k] = acc;
    }
    detail::trim(q);
    r = q;
    ++cancelled;
  }
  h.reduced_numerator = r;
  h.dimension = static_cast<int>(nvars) - cancelled;
  h.degree = at_one(r);
  return h;
}

/// Hilbert data of a homogeneous ideal from its Groebner basis' leading terms.
template <class Field>
HilbertData hilbert(const GroebnerBasis<Field>& gb) {
  for (const auto& g : gb.elements)
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert: inhomogeneous ideal");
  return hilbert_from_monomials(gb.lead_monomials(), gb.ring->nvars());
}

/// The projective zero set is empty iff the quotient is finite dimensional.
template <class Field>
bool is_projectively_empty(const Ideal<Field>& ideal) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("is_projectively_empty: inhomogeneous ideal");
  auto gb = buchberger(ideal);
  return hilbert(gb).dimension <= 0;
}

/// dim (R/I)_d by plain linear algebra: the number of degree-d monomials
/// minus the rank of all monomial multiples of generators landing in degree
/// d. Independent of any Groebner basis; meant for small d.
template <class Field>
long hilbert_function_by_rank(const Ideal<Field>& ideal, int d) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("hilbert_function_by_rank: inhomogeneous ideal");
  std::size_t n = ideal.ring->nvars();
  auto cols = monomials_of_degree(0, n, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index.emplace(cols[c], c);
  std::vector<Poly<Field>> rows;
  for (const auto& g : ideal.gens) {
    int e = d - g.degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(0, n, e)) rows.push_back(g.mul_term(m, ideal.ring->field.one()));
  }
  Matrix<Field> M(rows.size(), cols.size(), ideal.ring->field);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& t : rows[r].terms()) M(r, index.at(t.mono)) = t.coef;
  return static_cast<long>(cols.size()) - static_cast<long>(rows.empty() ? 0 : rank(M));
}

}  // namespace octic

#endif  // OCTIC_GROEBNER_HILBERT_HPP
