#ifndef OCTIC_FACTOR_PROBE_HPP
#define OCTIC_FACTOR_PROBE_HPP

// Splitting probe for a projective hypersurface over F_p: restrict it to
// random planes and factor the resulting plane curves. A hypersurface that
// splits over F_p splits on every plane; an absolutely irreducible one stays
// irreducible on almost every plane.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octic/arith/json_io.hpp"
#include "octic/factor/bivariate.hpp"

namespace octic {

struct ProbeTrial {
  std::vector<int> degrees;             // factor degrees with multiplicity, ascending
  std::vector<std::pair<int, int>> parts;  // (degree, multiplicity) per distinct factor
  int resamples = 0;                    // planes discarded for degree drop
  std::string verdict;
};

struct ProbeSummary {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  std::vector<ProbeTrial> trials;
  std::string verdict;
};

/// "irreducible", "repeated" (some factor occurs twice) or the split pattern
/// such as "4+4".
inline std::string split_verdict(const std::vector<std::pair<int, int>>& parts) {
  for (const auto& [d, e] : parts)
    if (e > 1) return "repeated";
  if (parts.size() == 1) return "irreducible";
  std::vector<int> ds;
  for (const auto& [d, e] : parts) ds.push_back(d);
  std::sort(ds.begin(), ds.end());
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "+" : "") + std::to_string(ds[i]);
  return s;
}

/// Restricts the homogeneous f (variables of its ring that it uses, at most
/// four) to `trials` random planes x = P + s Q + t R and factors each affine
/// restriction. Trials whose restriction drops degree are resampled.
inline ProbeSummary plane_restriction_probe(const Poly<FpField>& f, int trials, std::uint64_t seed) {
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("plane_restriction_probe: need a nonzero form");
  if (trials <= 0) throw std::invalid_argument("plane_restriction_probe: trial count must be positive");
  const auto& R = f.ring();
  std::uint32_t p = R->field.p;
  ProbeSummary out;
  out.prime = p;
  out.seed = seed;
  out.degree = f.degree();
  auto plane = make_ring(FpField(p), {"s", "t"});
  std::mt19937_64 rng(seed);
  constexpr int kMaxResamples = 100;
  for (int k = 0; k < trials; ++k) {
    ProbeTrial tr;
    Poly<FpField> g(plane);
    while (true) {
      std::vector<Poly<FpField>> images;
      for (std::size_t i = 0; i < R->nvars(); ++i) {
        auto coef = [&] { return Fp(uniform_int(rng, 0, p - 1), p); };
        Poly<FpField> img(plane, coef());
        img += coef() * Poly<FpField>::var(plane, 0);
        img += coef() * Poly<FpField>::var(plane, 1);
        images.push_back(img);
      }
      g = substitute_linear(f, images);
      if (g.degree() == out.degree && !g.is_zero()) break;
      if (++tr.resamples > kMaxResamples) throw std::runtime_error("plane_restriction_probe: restrictions keep degenerating");
    }
    FactorList fl = factor_bivariate_with_multiplicity(g, rng());
    for (const auto& [h, e] : fl.factors) tr.parts.emplace_back(h.degree(), e);
    std::sort(tr.parts.begin(), tr.parts.end());
    tr.degrees = fl.degree_multiset();
    tr.verdict = split_verdict(tr.parts);
    out.trials.push_back(std::move(tr));
  }
  // majority, ties to the verdict seen first
  std::map<std::string, int> votes;
  for (const auto& t : out.trials) ++votes[t.verdict];
  int best = -1;
  for (const auto& t : out.trials)
    if (votes[t.verdict] > best) best = votes[t.verdict], out.verdict = t.verdict;
  return out;
}

inline json probe_to_json(const ProbeSummary& s) {
  json tr = json::array();
  for (const auto& t : s.trials) {
    json parts = json::array();
    for (const auto& [d, e] : t.parts) parts.push_back(json{{"degree", d}, {"multiplicity", e}});
    tr.push_back(json{{"degrees", t.degrees}, {"factors", parts}, {"resamples", t.resamples}, {"verdict", t.verdict}});
  }
  return json{{"prime", s.prime}, {"seed", s.seed}, {"degree", s.degree}, {"trials", tr}, {"verdict", s.verdict}};
}

}  // namespace octic

#endif  // OCTIC_FACTOR_PROBE_HPP
