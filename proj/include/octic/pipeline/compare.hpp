#ifndef OCTIC_PIPELINE_COMPARE_HPP
#define OCTIC_PIPELINE_COMPARE_HPP

// Comparison of a computed a2 locus with the reference varieties through
// the triple (emptiness, cone dimension, degree).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/arith/json_io.hpp"
#include "octic/groebner/hilbert.hpp"
#include "octic/ivhs/models.hpp"
#include "octic/pipeline/analysis.hpp"

namespace octic {

struct LocusInvariants {
  bool empty = true;
  long cone_dimension = 0;
  long degree = 0;

  friend bool operator==(const LocusInvariants&, const LocusInvariants&) = default;
};

inline json to_json(const LocusInvariants& v) {
  return json{{"empty", v.empty}, {"cone_dimension", v.cone_dimension}, {"degree", v.degree}};
}

inline LocusInvariants invariants_of(const HilbertData& h) {
  return LocusInvariants{h.dimension <= 0, h.dimension, h.degree};
}

/// Reads the a2 invariants from an analysis report: the first modular entry
/// of "a2", else the exact one.
inline LocusInvariants report_invariants(const json& report) {
  auto from_entry = [](const json& e) {
    LocusInvariants v;
    v.empty = e.at("empty").get<bool>();
    v.cone_dimension = e.at("cone_dimension").get<long>();
    v.degree = e.contains("degree") ? e.at("degree").get<long>() : 0;
    return v;
  };
  if (report.contains("a2"))
    for (const auto& [k, e] : report.at("a2").items())
      if (e.is_object() && e.contains("cone_dimension")) return from_entry(e);
  if (report.contains("a2_exact") && report.at("a2_exact").contains("cone_dimension"))
    return from_entry(report.at("a2_exact"));
  throw std::invalid_argument("report carries no a2 invariants");
}

/// Report-shaped fragment for a reference model, verified at each prime.
inline json model_report(ModelKind kind, const std::vector<std::uint32_t>& primes = {kDefaultPrime, kSecondPrime}) {
  json a2 = json::object();
  std::optional<LocusInvariants> ref;
  for (auto p : primes) {
    auto I = reference_model(kind, FpField(p));
    auto h = hilbert(buchberger(I));
    a2[FpField(p).name()] = detail::hilbert_json(h, I.gens.size());
    auto v = invariants_of(h);
    if (ref && !(*ref == v)) throw StageUnstable("model invariants differ between primes");
    ref = v;
  }
  a2["agreement"] = true;
  return json{{"model", model_name(kind)}, {"a2", a2}};
}

inline LocusInvariants model_invariants(ModelKind kind, std::uint32_t p = kDefaultPrime) {
  return report_invariants(model_report(kind, {p}));
}

/// "compatible" when every invariant agrees, else "incompatible" with the
/// differing fields listed.
inline json compare_with_models(const json& report, ModelKind kind, std::uint32_t p = kDefaultPrime) {
  auto ours = report_invariants(report);
  auto theirs = model_invariants(kind, p);
  json differing = json::array();
  if (ours.empty != theirs.empty) differing.push_back("empty");
  if (ours.cone_dimension != theirs.cone_dimension) differing.push_back("cone_dimension");
  if (ours.degree != theirs.degree) differing.push_back("degree");
  return json{{"model", model_name(kind)},
              {"field", FpField(p).name()},
              {"computed", to_json(ours)},
              {"reference", to_json(theirs)},
              {"differing", differing},
              {"verdict", differing.empty() ? "compatible" : "incompatible"}};
}

}  // namespace octic

#endif  // OCTIC_PIPELINE_COMPARE_HPP
