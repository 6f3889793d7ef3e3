#ifndef OCTIC_PIPELINE_HYPERELLIPTIC_HPP
#define OCTIC_PIPELINE_HYPERELLIPTIC_HPP

// Restriction of a2 to the tangent directions of the hyperelliptic locus:
// the eight node derivatives span a 5-dimensional subspace of R~(1); a2 is
// pulled back along a parametrization of that span and the dimension of the
// restricted zero locus is read off its Hilbert series.

#include <cstdint>
#include <string>
#include <vector>

#include "octic/pipeline/analysis.hpp"

namespace octic {

template <class Field>
struct RestrictedLocus {
  std::size_t tangent_rank = 0;
  Ideal<Field> restricted;  // in s1..s_rank
  HilbertData hilbert;
  // per node direction: (a2 vanishes on its line, mu_2(v^2) = 0)
  std::vector<std::pair<bool, bool>> line_checks;
};

/// Pulls the ideal in z1..z9 back along z = S^t s for the rows of S.
template <class Field>
Ideal<Field> restrict_to_span(const Ideal<Field>& I, const Matrix<Field>& S) {
  auto R = make_ring(I.ring->field, indexed_names("s", S.rows()));
  std::vector<Poly<Field>> images;
  for (std::size_t i = 0; i < S.cols(); ++i) {
    std::vector<Term<Field>> ts;
    for (std::size_t k = 0; k < S.rows(); ++k)
      if (!S(k, i).is_zero()) ts.push_back({Monomial::var(k), S(k, i)});
    images.push_back(Poly<Field>::from_terms(R, std::move(ts)));
  }
  std::vector<Poly<Field>> gens;
  for (const auto& g : I.gens) gens.push_back(substitute_linear(g, images));
  return Ideal<Field>(R, std::move(gens));
}

/// Nonzero rows of the reduced echelon form: a basis of the row span.
template <class Field>
Matrix<Field> row_span_basis(const Matrix<Field>& M) {
  auto rr = rref(M);
  Matrix<Field> S(rr.rank, M.cols(), M.field());
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) S(r, c) = rr.rref(r, c);
  return S;
}

/// Whether every generator vanishes on the line spanned by v.
template <class Field>
bool vanishes_on_line(const Ideal<Field>& I, const std::vector<typename Field::Elem>& v) {
  Matrix<Field> S(1, v.size(), I.ring->field);
  for (std::size_t c = 0; c < v.size(); ++c) S(0, c) = v[c];
  for (const auto& g : restrict_to_span(I, S).gens)
    if (!g.is_zero()) return false;
  return true;
}

template <class Field>
RestrictedLocus<Field> hyperelliptic_restriction(const std::vector<Rational>& nodes, Field field = Field{}) {
  auto arr = hyperelliptic_arrangement(nodes);
  auto iv = build_ivhs<Field>(arr, field);
  auto a2 = characteristic_ideal(iv, 1);
  auto T = tangent_classes(iv, hyperelliptic_node_directions(nodes));
  RestrictedLocus<Field> out;
  auto S = row_span_basis(T);
  out.tangent_rank = S.rows();
  out.restricted = restrict_to_span(a2.ideal, S);
  out.hilbert = hilbert(buchberger(out.restricted));
  for (std::size_t r = 0; r < T.rows(); ++r) {
    std::vector<typename Field::Elem> v(T.cols());
    for (std::size_t c = 0; c < T.cols(); ++c) v[c] = T(r, c);
    bool square_zero = true;
    for (const auto& e : power_class(iv, v, 2)) square_zero = square_zero && e.is_zero();
    out.line_checks.emplace_back(vanishes_on_line(a2.ideal, v), square_zero);
  }
  return out;
}

/// Report fragment: tangent rank and restricted-locus dimension over each
/// configured prime and over Q, with two-prime agreement.
inline json hyperelliptic_intersection_check(const std::vector<Rational>& nodes, const AnalysisOptions& opt = {}) {
  json out = json::object();
  json nodes_json = json::array();
  for (const auto& a : nodes) nodes_json.push_back(a.str());
  out["nodes"] = nodes_json;
  out["arrangement_digest"] = arrangement_digest(hyperelliptic_arrangement(nodes));
  auto frag = [](std::size_t rank, const HilbertData& h) {
    return json{{"tangent_rank", rank},
                {"cone_dimension", h.dimension},
                {"projective_dimension", h.dimension - 1},
                {"degree", h.degree},
                {"hilbert_numerator", h.numerator_str()}};
  };
  AnalysisReport rep;
  detail::run_stage(rep, "restriction", opt.stage_timeout, [&] {
    std::optional<std::pair<std::size_t, long>> ref;
    for (auto p : opt.primes) {
      auto r = hyperelliptic_restriction<FpField>(nodes, FpField(p));
      out[FpField(p).name()] = frag(r.tangent_rank, r.hilbert);
      std::pair<std::size_t, long> key{r.tangent_rank, r.hilbert.dimension};
      if (ref && *ref != key) throw StageUnstable("rank/dimension differ between primes, bad prime suspected");
      ref = key;
    }
    auto q = hyperelliptic_restriction<QField>(nodes);
    out[QField{}.name()] = frag(q.tangent_rank, q.hilbert);
    json lines = json::array();
    bool agree = true;
    for (const auto& [on_line, square_zero] : q.line_checks) {
      lines.push_back(json{{"a2_vanishes", on_line}, {"square_zero", square_zero}});
      agree = agree && on_line == square_zero;
    }
    out["line_checks"] = json{{"field", QField{}.name()}, {"directions", lines}, {"duality_holds", agree}};
    if (!agree) throw std::logic_error("line restriction disagrees with mu_2(v^2)");
  });
  out["stages"] = rep.body["stages"];
  return out;
}

}  // namespace octic

#endif  // OCTIC_PIPELINE_HYPERELLIPTIC_HPP
