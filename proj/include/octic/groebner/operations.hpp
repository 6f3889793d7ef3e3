#ifndef OCTIC_GROEBNER_OPERATIONS_HPP
#define OCTIC_GROEBNER_OPERATIONS_HPP

// Ideal operations built on Buchberger: elimination, Rabinowitsch radical
// membership, ideal quotients and saturation by a linear form.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "octic/arith/matrix.hpp"
#include "octic/groebner/buchberger.hpp"
#include "octic/poly/bigrading.hpp"

namespace octic {

/// Exact quotient a / b, or nullopt when b does not divide a.
template <class Field>
std::optional<Poly<Field>> divide_exact(const Poly<Field>& a, const Poly<Field>& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  Poly<Field> r = a, q(a.ring());
  std::vector<Term<Field>> qt;
  while (!r.is_zero()) {
    if (!b.lead_mono().divides(r.lead_mono())) return std::nullopt;
    auto c = r.lead_coef() / b.lead_coef();
    Monomial m = r.lead_mono() / b.lead_mono();
    qt.push_back({m, c});
    r = r.sub_mul_term(c, m, b);
  }
  return Poly<Field>::from_terms(a.ring(), std::move(qt));
}

/// Generators of I intersected with the subring of the last n-k variables,
/// read off a block(k) Groebner basis. Returned in the input ring.
template <class Field>
Ideal<Field> eliminate(const Ideal<Field>& ideal, std::size_t first_k) {
  if (first_k == 0) return buchberger(ideal).as_ideal();
  auto blocked = ideal.with_order(MonomialOrder::block_order(first_k));
  auto gb = buchberger(blocked);
  std::vector<Poly<Field>> keep;
  for (const auto& g : gb.elements) {
    bool uses = false;
    for (std::size_t v = 0; v < first_k && !uses; ++v) uses = g.uses_var(v);
    if (!uses) keep.push_back(g.in_ring(ideal.ring));
  }
  return Ideal<Field>(ideal.ring, std::move(keep));
}

/// I intersected with k[x_{k+1}..x_n], degree by degree up to a bound.
template <class Field>
struct TruncatedElimination {
  std::vector<std::size_t> dims;    // dims[d] = dim of the degree-d part
  int lowest_degree = -1;           // first degree with a nonzero part
  std::vector<Poly<Field>> lowest;  // a basis of that part
  bool principal_pattern = false;   // dims match a single generator up to the bound
};

/// For homogeneous I with Groebner basis gb (any order): the degree-d part
/// of the elimination ideal is the kernel of the normal-form map on degree-d
/// monomials in the kept variables. No elimination order is needed, and the
/// principal pattern dims[d] = C(d - d0 + m - 1, m - 1) certifies that the
/// part up to the bound is generated by one form of degree d0.
template <class Field>
TruncatedElimination<Field> eliminate_truncated(const GroebnerBasis<Field>& gb, std::size_t first_k, int max_degree) {
  const auto& R = gb.ring;
  const auto& F = R->field;
  std::size_t n = R->nvars();
  if (first_k >= n) throw std::invalid_argument("eliminate_truncated: nothing left to keep");
  TruncatedElimination<Field> out;
  std::size_t m = n - first_k;
  auto binom = [](long a, long b) {
    if (b < 0 || a < b) return 0L;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  out.principal_pattern = true;
  for (int d = 0; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(first_k, n, d);
    std::vector<Poly<Field>> nfs;
    std::unordered_map<Monomial, std::size_t, MonomialHash> row;
    for (const auto& mono : monos) {
      nfs.push_back(normal_form(Poly<Field>(R, mono, F.one()), gb));
      for (const auto& t : nfs.back().terms()) row.emplace(t.mono, row.size());
    }
    Matrix<Field> M(row.size(), monos.size(), F);
    for (std::size_t c = 0; c < monos.size(); ++c)
      for (const auto& t : nfs[c].terms()) M(row.at(t.mono), c) = t.coef;
    Matrix<Field> K = row.empty() ? Matrix<Field>::identity(monos.size(), F) : nullspace(M);
    out.dims.push_back(K.cols());
    if (K.cols() > 0 && out.lowest_degree < 0) {
      out.lowest_degree = d;
      for (std::size_t k = 0; k < K.cols(); ++k) {
        std::vector<Term<Field>> ts;
        for (std::size_t c = 0; c < monos.size(); ++c)
          if (!K(c, k).is_zero()) ts.push_back({monos[c], K(c, k)});
        out.lowest.push_back(Poly<Field>::from_terms(R, std::move(ts)).monic());
      }
    }
    long expect = out.lowest_degree < 0 ? 0 : binom(d - out.lowest_degree + static_cast<long>(m) - 1, static_cast<long>(m) - 1);
    if (static_cast<long>(K.cols()) != expect) out.principal_pattern = false;
  }
  if (out.lowest_degree < 0 || out.lowest.size() != 1) out.principal_pattern = false;
  return out;
}

/// Ring with one extra variable appended (used for Rabinowitsch and
/// intersection tricks).
template <class Field>
RingPtr<Field> ring_with_extra_var(const Ring<Field>& r, const std::string& name, bool first,
                                   MonomialOrder ord) {
  std::vector<std::string> names;
  if (first) names.push_back(name);
  names.insert(names.end(), r.vars.begin(), r.vars.end());
  if (!first) names.push_back(name);
  return make_ring(r.field, names, ord);
}

/// Shifts variable indices by `offset` when moving into a larger ring.
template <class Field>
Poly<Field> shift_vars(const Poly<Field>& f, const RingPtr<Field>& target, std::size_t offset) {
  std::vector<Term<Field>> ts;
  std::size_t n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i + offset, t.mono[i]);
    ts.push_back({m, t.coef});
  }
  return Poly<Field>::from_terms(target, std::move(ts));
}

/// Rabinowitsch: f vanishes on V(I) iff 1 lies in I + (1 - t f).
template <class Field>
bool radical_membership(const Ideal<Field>& ideal, const Poly<Field>& f) {
  if (f.is_zero()) return true;
  auto ext = ring_with_extra_var(*ideal.ring, "t_", false, MonomialOrder::grevlex());
  std::vector<Poly<Field>> gens;
  for (const auto& g : ideal.gens) gens.push_back(g.extend_to(ext));
  auto t = Poly<Field>::var(ext, ext->nvars() - 1);
  gens.push_back(Poly<Field>::constant(ext, 1) - t * f.extend_to(ext));
  return buchberger(Ideal<Field>(ext, std::move(gens))).is_unit();
}

struct RadicalVerdict {
  bool member = false;
  int power = 0;       // smallest k <= the bound with f^k in I, 0 if none found
  std::string method;  // "power" or "rabinowitsch"
};

/// Radical membership given a Groebner basis of I: first looks for k with
/// f^k in I (a direct certificate, cheap when k is small), then falls back
/// to the Rabinowitsch test.
template <class Field>
RadicalVerdict radical_membership_certified(const GroebnerBasis<Field>& gb, const Ideal<Field>& ideal,
                                            const Poly<Field>& f, int max_power = 6) {
  RadicalVerdict v;
  Poly<Field> pw = f;
  for (int k = 1; k <= max_power; ++k) {
    if (normal_form(pw, gb).is_zero()) {
      v.member = true;
      v.power = k;
      v.method = "power";
      return v;
    }
    pw *= f;
  }
  v.method = "rabinowitsch";
  v.member = radical_membership(ideal, f);
  return v;
}

/// I intersected with J, via t*I + (1-t)*J and elimination of t.
template <class Field>
Ideal<Field> intersect(const Ideal<Field>& I, const Ideal<Field>& J) {
  if (!(*I.ring == *J.ring)) throw std::invalid_argument("intersect: ideals live in different rings");
  auto ext = ring_with_extra_var(*I.ring, "t_", true, MonomialOrder::block_order(1));
  auto t = Poly<Field>::var(ext, 0);
  auto one_minus_t = Poly<Field>::constant(ext, 1) - t;
  std::vector<Poly<Field>> gens;
  for (const auto& g : I.gens) gens.push_back(t * shift_vars(g, ext, 1));
  for (const auto& g : J.gens) gens.push_back(one_minus_t * shift_vars(g, ext, 1));
  auto gb = buchberger(Ideal<Field>(ext, std::move(gens)));
  std::vector<Poly<Field>> out;
  for (const auto& g : gb.elements) {
    if (g.uses_var(0)) continue;
    std::vector<Term<Field>> ts;
    for (const auto& term : g.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < I.ring->nvars(); ++i) m.set(i, term.mono[i + 1]);
      ts.push_back({m, term.coef});
    }
    out.push_back(Poly<Field>::from_terms(I.ring, std::move(ts)));
  }
  return Ideal<Field>(I.ring, std::move(out));
}

template <class Field>
Ideal<Field> intersect_principal(const Ideal<Field>& ideal, const Poly<Field>& f) {
  return intersect(ideal, Ideal<Field>(ideal.ring, {f}));
}

/// (I : f) = (I intersected with (f)) / f.
template <class Field>
Ideal<Field> ideal_quotient(const Ideal<Field>& ideal, const Poly<Field>& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal_quotient: zero divisor");
  if (f.is_constant()) return ideal;
  auto inter = intersect_principal(ideal, f);
  std::vector<Poly<Field>> q;
  for (const auto& g : inter.gens) {
    auto d = divide_exact(g, f);
    if (!d) throw std::logic_error("ideal_quotient: intersection element not divisible");
    q.push_back(*d);
  }
  return Ideal<Field>(ideal.ring, std::move(q));
}

/// (I : l^infinity) for a nonzero linear form l and homogeneous I. Moves l to
/// the last variable, divides a grevlex basis by the largest power of that
/// variable (repeating until nothing changes), and moves back.
template <class Field>
Ideal<Field> saturate_by_linear(const Ideal<Field>& ideal, const Poly<Field>& l) {
  if (l.is_zero()) throw std::invalid_argument("saturate_by_linear: zero form");
  if (l.degree() != 1 || !l.is_homogeneous())
    throw std::invalid_argument("saturate_by_linear: form must be linear");
  if (!ideal.is_homogeneous()) throw std::invalid_argument("saturate_by_linear: inhomogeneous ideal");
  const auto& R = *ideal.ring;
  std::size_t n = R.nvars();
  auto grev = make_ring(R.field, R.vars, MonomialOrder::grevlex());
  Poly<Field> lg = l.in_ring(grev);
  // pivot variable v with nonzero coefficient, swapped with the last one
  std::size_t v = n;
  for (std::size_t i = n; i-- > 0;)
    if (!lg.coefficient(Monomial::var(i)).is_zero()) {
      v = i;
      break;
    }
  auto sigma = [&](std::size_t i) { return i == v ? n - 1 : i == n - 1 ? v : i; };
  auto cv = lg.coefficient(Monomial::var(v));
  std::vector<Poly<Field>> fwd(n), back(n);
  Poly<Field> rest(grev);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == v) continue;
    auto c = lg.coefficient(Monomial::var(i));
    rest = rest + Poly<Field>(grev, Monomial::var(sigma(i)), c);
    fwd[i] = Poly<Field>::var(grev, sigma(i));
  }
  fwd[v] = cv.inverse() * (Poly<Field>::var(grev, n - 1) - rest);
  for (std::size_t j = 0; j < n; ++j) back[j] = j == n - 1 ? lg : Poly<Field>::var(grev, sigma(j));

  std::vector<Poly<Field>> gens;
  for (const auto& g : ideal.gens) gens.push_back(substitute_linear(g.in_ring(grev), fwd));
  Ideal<Field> cur(grev, gens);
  while (true) {
    auto gb = buchberger(cur);
    bool changed = false;
    std::vector<Poly<Field>> divided;
    for (const auto& g : gb.elements) {
      int k = 1 << 30;
      for (const auto& t : g.terms()) k = std::min(k, t.mono[n - 1]);
      if (k > 0) {
        changed = true;
        std::vector<Term<Field>> ts;
        for (const auto& t : g.terms()) {
          Monomial m = t.mono;
          m.set(n - 1, m[n - 1] - k);
          ts.push_back({m, t.coef});
        }
        divided.push_back(Poly<Field>::from_terms(grev, std::move(ts)));
      } else {
        divided.push_back(g);
      }
    }
    cur = Ideal<Field>(grev, divided);
    if (!changed) break;
  }
  std::vector<Poly<Field>> out;
  for (const auto& g : cur.gens) out.push_back(substitute_linear(g, back).in_ring(ideal.ring));
  return Ideal<Field>(ideal.ring, std::move(out));
}

}  // namespace octic

#endif  // OCTIC_GROEBNER_OPERATIONS_HPP
