#ifndef OCTIC_GROEBNER_BUCHBERGER_HPP
#define OCTIC_GROEBNER_BUCHBERGER_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "octic/groebner/deadline.hpp"
#include "octic/poly/polynomial.hpp"

namespace octic {

/// Finitely generated ideal; the ring's order is the active monomial order.
template <class Field>
struct Ideal {
  RingPtr<Field> ring;
  std::vector<Poly<Field>> gens;

  Ideal() = default;
  Ideal(RingPtr<Field> r, std::vector<Poly<Field>> g) : ring(std::move(r)) {
    for (auto& p : g) {
      if (!p.ring() || !(*p.ring() == *ring)) throw std::invalid_argument("Ideal: generator ring mismatch");
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }

  bool is_homogeneous() const {
    for (const auto& g : gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  /// The same generators re-sorted for another order on the same variables.
  Ideal with_order(const MonomialOrder& ord) const {
    auto r = make_ring(ring->field, ring->vars, ord);
    std::vector<Poly<Field>> g;
    for (const auto& p : gens) g.push_back(p.in_ring(r));
    return Ideal(r, std::move(g));
  }
};

/// Reduced Groebner basis: monic, interreduced, sorted by ascending leading
/// monomial.
template <class Field>
struct GroebnerBasis {
  RingPtr<Field> ring;
  std::vector<Poly<Field>> elements;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> ms;
    for (const auto& g : elements) ms.push_back(g.lead_mono());
    return ms;
  }
  Ideal<Field> as_ideal() const { return Ideal<Field>(ring, elements); }
};

namespace detail {

template <class Field>
std::size_t find_reducer(const std::vector<const Poly<Field>*>& basis,
                         const std::vector<Monomial>& leads, const Monomial& m) {
  for (std::size_t k = 0; k < leads.size(); ++k)
    if (leads[k].divides(m)) return k;
  return basis.size();
}

/// Full reduction of f by the given divisors (leading terms cancelled first,
/// then the tail).
template <class Field>
Poly<Field> reduce_full(Poly<Field> f, const std::vector<const Poly<Field>*>& basis,
                        const std::vector<Monomial>& leads) {
  std::vector<Term<Field>> rem;
  unsigned steps = 0;
  while (!f.is_zero()) {
    const auto& lt = f.lead_term();
    std::size_t k = find_reducer(basis, leads, lt.mono);
    if (k == basis.size()) {
      rem.push_back(lt);
      auto& ts = f.mutable_terms();
      ts.erase(ts.begin());
      continue;
    }
    if ((++steps & 255) == 0) check_deadline();
    const Poly<Field>& g = *basis[k];
    auto c = lt.coef / g.lead_coef();
    Monomial q = lt.mono / g.lead_mono();
    f = f.sub_mul_term(c, q, g);
  }
  Poly<Field> r(f.ring());
  r.mutable_terms() = std::move(rem);
  return r;
}

template <class Field>
Poly<Field> s_polynomial(const Poly<Field>& f, const Poly<Field>& g) {
  Monomial l = Monomial::lcm(f.lead_mono(), g.lead_mono());
  auto one = f.ring()->field.one();
  Poly<Field> a = f.mul_term(l / f.lead_mono(), one / f.lead_coef());
  return a.sub_mul_term(one / g.lead_coef(), l / g.lead_mono(), g);
}

// Over Q the engine keeps integer primitive polynomials and reduces with
// cross-multiplication, which avoids the denominator growth of monic
// rational arithmetic. Results are made monic at the end.

inline mpz_class integer_content(const Poly<QField>& f) {
  mpz_class g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.value().get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Scales f to integer coefficients with content 1 and positive leading term.
inline Poly<QField> primitive_part(const Poly<QField>& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.value().get_den_mpz_t());
  Poly<QField> h = den == 1 ? f : Rational(den) * f;
  mpz_class c = integer_content(h);
  if (h.lead_coef().sign() < 0) c = -c;
  if (c == 1) return h;
  return Rational(mpz_class(1), c) * h;
}

inline Poly<QField> reduce_full_ff(Poly<QField> f, const std::vector<const Poly<QField>*>& basis,
                                   const std::vector<Monomial>& leads) {
  std::vector<Term<QField>> rem;
  int steps = 0;
  while (!f.is_zero()) {
    const auto& lt = f.lead_term();
    std::size_t k = find_reducer(basis, leads, lt.mono);
    if (k == basis.size()) {
      rem.push_back(lt);
      auto& ts = f.mutable_terms();
      ts.erase(ts.begin());
      continue;
    }
    const Poly<QField>& g = *basis[k];
    mpz_class a = g.lead_coef().num(), b = lt.coef.num(), d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= d;
    b /= d;
    Monomial q = lt.mono / g.lead_mono();
    if (a != 1) {
      Rational ra(a);
      f = ra * f;
      for (auto& t : rem) t.coef *= ra;
    }
    f = f.sub_mul_term(Rational(b), q, g);
    if (++steps % 8 == 0) {
      check_deadline();
      mpz_class c = integer_content(f);
      for (const auto& t : rem) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coef.value().get_num_mpz_t());
      }
      if (c > 1) {
        Rational rc(mpz_class(1), c);
        f = rc * f;
        for (auto& t : rem) t.coef *= rc;
      }
    }
  }
  Poly<QField> r(f.ring());
  r.mutable_terms() = std::move(rem);
  return primitive_part(r);
}

inline Poly<QField> s_polynomial_ff(const Poly<QField>& f, const Poly<QField>& g) {
  Monomial l = Monomial::lcm(f.lead_mono(), g.lead_mono());
  mpz_class a = g.lead_coef().num(), b = f.lead_coef().num(), d;
  mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= d;
  b /= d;
  Poly<QField> x = f.mul_term(l / f.lead_mono(), Rational(a));
  return x.sub_mul_term(Rational(b), l / g.lead_mono(), g);
}

/// Field-dependent pieces of the engine: normalization of new elements,
/// reduction and S-polynomials.
template <class Field>
struct GbArith {
  static Poly<Field> normalize(const Poly<Field>& h) { return h.monic(); }
  static Poly<Field> reduce(Poly<Field> f, const std::vector<const Poly<Field>*>& b, const std::vector<Monomial>& l) {
    return reduce_full(std::move(f), b, l);
  }
  static Poly<Field> spoly(const Poly<Field>& f, const Poly<Field>& g) { return s_polynomial(f, g); }
};

template <>
struct GbArith<QField> {
  static Poly<QField> normalize(const Poly<QField>& h) { return primitive_part(h); }
  static Poly<QField> reduce(Poly<QField> f, const std::vector<const Poly<QField>*>& b,
                             const std::vector<Monomial>& l) {
    return reduce_full_ff(std::move(f), b, l);
  }
  static Poly<QField> spoly(const Poly<QField>& f, const Poly<QField>& g) { return s_polynomial_ff(f, g); }
};

}  // namespace detail

/// Normal form of f modulo a Groebner basis.
template <class Field>
Poly<Field> normal_form(const Poly<Field>& f, const GroebnerBasis<Field>& gb) {
  if (!f.ring() || !(*f.ring() == *gb.ring)) throw std::invalid_argument("normal_form: ring mismatch");
  std::vector<const Poly<Field>*> b;
  std::vector<Monomial> leads;
  for (const auto& g : gb.elements) {
    b.push_back(&g);
    leads.push_back(g.lead_mono());
  }
  return detail::reduce_full(f, b, leads);
}

template <class Field>
bool ideal_contains(const GroebnerBasis<Field>& gb, const Poly<Field>& f) {
  return normal_form(f, gb).is_zero();
}

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t zero_reductions = 0;
};

/// Buchberger's algorithm with Gebauer-Moeller pair pruning and the normal
/// selection strategy (smallest lcm degree, ties by index pair).
template <class Field>
GroebnerBasis<Field> buchberger(const Ideal<Field>& ideal, BuchbergerStats* stats = nullptr) {
  using P = Poly<Field>;
  const auto& ring = ideal.ring;
  std::vector<P> polys;
  std::vector<Monomial> lead;
  std::vector<bool> active;
  using Pair = std::tuple<int, std::size_t, std::size_t>;  // (lcm degree, i, j), i < j
  std::set<Pair> pairs;

  auto reducers = [&](std::vector<const P*>& b, std::vector<Monomial>& l) {
    b.clear();
    l.clear();
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) {
        b.push_back(&polys[k]);
        l.push_back(lead[k]);
      }
  };

  auto insert = [&](P h) {
    h = detail::GbArith<Field>::normalize(h);
    std::size_t hi = polys.size();
    const Monomial hl = h.lead_mono();
    polys.push_back(std::move(h));
    lead.push_back(hl);
    active.push_back(true);

    // candidate new pairs (g, h)
    std::vector<std::size_t> cand;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) cand.push_back(g);
    std::vector<Monomial> lc(hi);
    for (auto g : cand) lc[g] = Monomial::lcm(lead[g], hl);
    std::vector<bool> keep(hi, false);
    // chain criterion among new pairs
    std::vector<std::size_t> d;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      auto g = cand[a];
      bool cop = Monomial::coprime(lead[g], hl);
      bool dominated = false;
      if (!cop) {
        for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
          if (lc[cand[b]].divides(lc[g])) dominated = true;
        for (auto g2 : d)
          if (!dominated && lc[g2].divides(lc[g])) dominated = true;
      }
      if (!dominated) d.push_back(g);
    }
    // drop product-criterion pairs
    std::vector<std::size_t> e;
    for (auto g : d)
      if (!Monomial::coprime(lead[g], hl)) e.push_back(g);
    // prune old pairs
    for (auto it = pairs.begin(); it != pairs.end();) {
      auto [deg, i, j] = *it;
      Monomial l = Monomial::lcm(lead[i], lead[j]);
      if (hl.divides(l) && Monomial::lcm(lead[i], hl) != l && Monomial::lcm(lead[j], hl) != l)
        it = pairs.erase(it);
      else
        ++it;
    }
    for (auto g : e) pairs.insert({lc[g].degree(), g, hi});
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && hl.divides(lead[g])) active[g] = false;
  };

  std::vector<const P*> b;
  std::vector<Monomial> l;
  std::vector<P> input = ideal.gens;
  std::sort(input.begin(), input.end(), [&](const P& x, const P& y) {
    return ring->compare(x.lead_mono(), y.lead_mono()) < 0;
  });
  for (auto& g : input) {
    reducers(b, l);
    P h = detail::GbArith<Field>::reduce(detail::GbArith<Field>::normalize(g), b, l);
    if (!h.is_zero()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    check_deadline();
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (stats) ++stats->pairs_considered;
    P s = detail::GbArith<Field>::spoly(polys[i], polys[j]);
    reducers(b, l);
    P h = detail::GbArith<Field>::reduce(std::move(s), b, l);
    if (h.is_zero()) {
      if (stats) ++stats->zero_reductions;
      continue;
    }
    if (h.is_constant()) {
      GroebnerBasis<Field> unit{ring, {P::constant(ring, 1)}};
      return unit;
    }
    insert(std::move(h));
  }

  // minimal basis, then interreduce
  std::vector<P> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::sort(minimal.begin(), minimal.end(), [&](const P& x, const P& y) {
    return ring->compare(x.lead_mono(), y.lead_mono()) < 0;
  });
  GroebnerBasis<Field> gb{ring, {}};
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const P*> others;
    std::vector<Monomial> ol;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) {
        others.push_back(&minimal[m]);
        ol.push_back(minimal[m].lead_mono());
      }
    // the leading term is irreducible by minimality, so this only rewrites the tail
    gb.elements.push_back(detail::GbArith<Field>::reduce(minimal[k], others, ol).monic());
  }
  return gb;
}

template <class Field>
GroebnerBasis<Field> groebner(const Ideal<Field>& ideal) {
  return buchberger(ideal);
}

/// True when every S-polynomial of the basis reduces to zero. A pair is
/// established when its S-polynomial reduces to zero, when its leading
/// monomials are coprime, or when some lead_k divides lcm(i, j) with (i, k)
/// and (j, k) already established: then S(i, j) is a combination of those
/// two with every term below lcm(i, j). Pairs are visited by ascending lcm
/// degree so the chain step can only refer to earlier pairs.
template <class Field>
bool satisfies_buchberger_criterion(const GroebnerBasis<Field>& gb) {
  std::vector<const Poly<Field>*> b;
  std::vector<Monomial> leads;
  for (const auto& g : gb.elements) {
    b.push_back(&g);
    leads.push_back(g.lead_mono());
  }
  const std::size_t n = b.size();
  std::vector<std::tuple<int, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(Monomial::lcm(leads[i], leads[j]).degree(), i, j);
  std::sort(pairs.begin(), pairs.end());
  std::vector<char> established(n * n, 0);
  auto known = [&](std::size_t i, std::size_t j) { return established[i * n + j] != 0; };
  auto mark = [&](std::size_t i, std::size_t j) { established[i * n + j] = established[j * n + i] = 1; };
  for (const auto& [deg, i, j] : pairs) {
    (void)deg;
    if (Monomial::coprime(leads[i], leads[j])) {
      mark(i, j);
      continue;
    }
    Monomial l = Monomial::lcm(leads[i], leads[j]);
    bool chained = false;
    for (std::size_t k = 0; k < n && !chained; ++k)
      chained = k != i && k != j && known(i, k) && known(j, k) && leads[k].divides(l);
    if (!chained) {
      auto s = detail::s_polynomial(*b[i], *b[j]);
      if (!detail::reduce_full(std::move(s), b, leads).is_zero()) return false;
    }
    mark(i, j);
  }
  return true;
}

/// Structural reducedness: monic, no leading monomial divides any term of
/// another element.
template <class Field>
bool is_reduced(const GroebnerBasis<Field>& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (!gb.elements[i].lead_coef().is_one()) return false;
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.elements[j].terms())
        if (gb.elements[i].lead_mono().divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace octic

#endif  // OCTIC_GROEBNER_BUCHBERGER_HPP
