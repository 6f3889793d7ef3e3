#ifndef OCTIC_PIPELINE_ANALYSIS_HPP
#define OCTIC_PIPELINE_ANALYSIS_HPP

// End-to-end analysis of one arrangement: invariant pieces, the quadrics a2,
// their Hilbert data at two primes (and optionally over Q), elimination,
// hyperplane memberships, splitting probes of the eliminant and the Yukawa
// cubic. Every stage writes into a JSON report; failures and timeouts become
// markers in report["stages"] instead of aborting the run.

#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octic/arith/json_io.hpp"
#include "octic/factor/probe.hpp"
#include "octic/groebner/deadline.hpp"
#include "octic/groebner/hilbert.hpp"
#include "octic/groebner/operations.hpp"
#include "octic/ivhs/higgs.hpp"
#include "octic/poly/parse.hpp"

namespace octic {

inline const std::vector<std::string>& all_stages() {
  static const std::vector<std::string> s = {"pieces", "a2", "a2_exact", "elimination", "membership", "probes", "yukawa"};
  return s;
}

struct AnalysisOptions {
  std::vector<std::uint32_t> primes{kDefaultPrime, kSecondPrime};
  std::set<std::string> stages{"pieces", "a2", "elimination", "membership", "probes", "yukawa"};
  std::string frame = "moduli";  // coordinates z of R~(1): "moduli" or "monomial"
  std::size_t eliminate_first = 5;
  int exact_elimination_degree = 9;
  std::vector<std::string> hyperplanes;  // linear forms in z1..z9
  std::vector<std::uint32_t> probe_primes{73, 89, 71, 79};
  int probe_trials = 5;
  std::uint64_t probe_seed = 20240601;
  double stage_timeout = 600;
  bool timings = false;

  bool runs(const std::string& stage) const { return stages.count(stage) > 0; }
};

/// Result of one analysis. `body` is the canonical part; `timing` is only
/// emitted on request because it changes from run to run.
struct AnalysisReport {
  json body = json::object();
  json timing = json::object();

  std::string stage_status(const std::string& s) const {
    if (!body.contains("stages") || !body["stages"].contains(s)) return "skipped";
    return body["stages"][s].get<std::string>();
  }
  bool all_stages_ok() const {
    if (!body.contains("stages")) return true;
    for (const auto& [k, v] : body["stages"].items())
      if (v.get<std::string>() != "ok" && v.get<std::string>().rfind("skipped", 0) != 0) return false;
    return true;
  }
  json to_json(bool with_timing = false) const {
    json j = body;
    if (with_timing) j["timing"] = timing;
    return j;
  }
  std::string canonical() const { return body.dump(2) + "\n"; }
};

class StageUnstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class Fn>
void run_stage(AnalysisReport& rep, const std::string& name, double timeout, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::string status = "ok";
  try {
    DeadlineScope scope(timeout);
    fn();
  } catch (const ComputationTimeout&) {
    status = "timed out";
  } catch (const StageUnstable& e) {
    status = std::string("unstable: ") + e.what();
  } catch (const std::exception& e) {
    status = std::string("failed: ") + e.what();
  }
  rep.body["stages"][name] = status;
  rep.timing[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Field>
CharacteristicIdeal<Field> framed_ideal(const Ivhs<Field>& iv, int k, const std::string& frame) {
  auto ci = characteristic_ideal(iv, k);
  if (frame == "moduli") return change_frame(ci, moduli_frame(iv));
  if (frame == "monomial") return ci;
  throw std::invalid_argument("unknown frame '" + frame + "'");
}

inline json hilbert_json(const HilbertData& h, std::size_t generators) {
  return json{{"generators", generators},
              {"empty", h.dimension <= 0},
              {"cone_dimension", h.dimension},
              {"projective_dimension", h.dimension - 1},
              {"degree", h.degree},
              {"hilbert_numerator", h.numerator_str()}};
}

/// Integer primitive form of a rational polynomial, for printing.
inline Poly<QField> integral_form(const Poly<QField>& f) { return detail::primitive_part(f); }

inline Poly<FpField> reduce_mod(const Poly<QField>& f, std::uint32_t p) {
  FpField F(p);
  auto R = make_ring(F, f.ring()->vars, f.ring()->order);
  return f.map_coefficients(R, [&](const Rational& c) { return F.from_rational(c); });
}

/// Per-field state kept between stages.
template <class Field>
struct FieldRun {
  Ivhs<Field> iv;
  CharacteristicIdeal<Field> a2;
  std::optional<GroebnerBasis<Field>> gb;
  std::optional<HilbertData> hilbert;
};

}  // namespace detail

inline AnalysisReport analyze_point(const Arrangement& arr, const AnalysisOptions& opt = {}) {
  require_general_position(arr);
  AnalysisReport rep;
  auto& B = rep.body;
  B["arrangement"] = json{{"digest", arrangement_digest(arr)}, {"matrix", to_json(arr.A)}};
  B["frame"] = opt.frame;
  B["stages"] = json::object();
  json fields = json::array();
  for (auto p : opt.primes) fields.push_back(FpField(p).name());
  bool want_q = opt.runs("a2_exact") || opt.runs("elimination") || (opt.runs("membership") && !opt.hyperplanes.empty());
  if (want_q) fields.push_back(QField{}.name());
  B["fields"] = fields;
  B["seeds"] = json{{"probe", opt.probe_seed}};

  std::map<std::uint32_t, detail::FieldRun<FpField>> modular;
  std::optional<detail::FieldRun<QField>> exact;

  detail::run_stage(rep, "pieces", opt.stage_timeout, [&] {
    json dims = json::object();
    for (auto p : opt.primes) {
      auto& run = modular[p];
      run.iv = build_ivhs<FpField>(arr, FpField(p));
      json d = json::array();
      for (int k = 0; k <= 3; ++k) d.push_back(run.iv.piece(k).dim());
      dims[FpField(p).name()] = d;
    }
    if (want_q) {
      exact.emplace();
      exact->iv = build_ivhs<QField>(arr);
      json d = json::array();
      for (int k = 0; k <= 3; ++k) d.push_back(exact->iv.piece(k).dim());
      dims[QField{}.name()] = d;
    }
    B["invariant_dims"] = dims;
    B["basis_digest"] = modular.empty() ? exact->iv.piece(1).digest() : modular.begin()->second.iv.piece(1).digest();
  });
  if (rep.stage_status("pieces") != "ok") return rep;

  bool a2_empty = false, a2_known = false;
  if (opt.runs("a2")) {
    detail::run_stage(rep, "a2", opt.stage_timeout, [&] {
      json out = json::object();
      std::optional<std::pair<long, long>> ref;
      for (auto& [p, run] : modular) {
        run.a2 = detail::framed_ideal(run.iv, 1, opt.frame);
        run.gb = buchberger(run.a2.ideal);
        run.hilbert = hilbert(*run.gb);
        out[FpField(p).name()] = detail::hilbert_json(*run.hilbert, run.a2.ideal.gens.size());
        std::pair<long, long> key{run.hilbert->dimension, run.hilbert->degree};
        if (ref && *ref != key) {
          B["a2"] = out;
          throw StageUnstable("dimension/degree differ between primes, bad prime suspected");
        }
        ref = key;
      }
      out["agreement"] = true;
      B["a2"] = out;
      if (ref) {
        a2_known = true;
        a2_empty = ref->first <= 0;
      }
    });
  }

  // Over Q, emptiness is first certified by reduction: for p dividing no
  // denominator the degree-d rank of the Q generators is at least the rank of
  // their reductions, so H_Q(d) <= H_p(d) and a vanishing H_p forces H_Q = 0.
  // Only when no reduction is empty is the basis over Q computed.
  std::optional<int> exact_empty_degree;
  if (exact) {
    detail::run_stage(rep, "a2_exact", opt.stage_timeout, [&] {
      exact->a2 = detail::framed_ideal(exact->iv, 1, opt.frame);
      json out;
      for (auto p : opt.primes) {
        std::vector<Poly<FpField>> reduced;
        try {
          for (const auto& g : exact->a2.ideal.gens) reduced.push_back(detail::reduce_mod(g, p));
        } catch (const std::domain_error&) {
          continue;  // p divides a denominator
        }
        auto R = reduced.empty() ? make_ring(FpField(p), exact->a2.ideal.ring->vars) : reduced.front().ring();
        auto h = hilbert(buchberger(Ideal<FpField>(R, reduced)));
        if (h.dimension > 0) continue;
        exact_empty_degree = static_cast<int>(h.reduced_numerator.size());
        out = detail::hilbert_json(h, exact->a2.ideal.gens.size());
        out["cone_dimension"] = 0;
        out["projective_dimension"] = -1;
        out.erase("degree");
        out.erase("hilbert_numerator");
        out["method"] = "reduction certificate";
        out["certificate_field"] = FpField(p).name();
        out["vanishing_degree"] = *exact_empty_degree;
        break;
      }
      if (!exact_empty_degree) {
        exact->gb = buchberger(exact->a2.ideal);
        exact->hilbert = hilbert(*exact->gb);
        out = detail::hilbert_json(*exact->hilbert, exact->a2.ideal.gens.size());
        out["method"] = "groebner basis";
      }
      B["a2_exact"] = out;
      if (!a2_known) {
        a2_known = true;
        a2_empty = exact_empty_degree || exact->hilbert->dimension <= 0;
      }
    });
  }

  std::optional<Poly<QField>> eliminant;
  if (opt.runs("elimination")) {
    if (a2_known && a2_empty) {
      B["stages"]["elimination"] = "skipped: a2 projectively empty";
    } else {
      detail::run_stage(rep, "elimination", opt.stage_timeout, [&] {
        json out = json::object();
        out["eliminated"] = opt.eliminate_first;
        std::optional<std::pair<std::size_t, int>> ref;
        for (auto& [p, run] : modular) {
          if (run.a2.ideal.gens.empty()) run.a2 = detail::framed_ideal(run.iv, 1, opt.frame);
          auto E = eliminate(run.a2.ideal, opt.eliminate_first);
          int deg = E.gens.size() == 1 ? E.gens[0].degree() : -1;
          out[FpField(p).name()] = json{{"generators", E.gens.size()}, {"is_principal", E.gens.size() == 1}, {"degree", deg}};
          std::pair<std::size_t, int> key{E.gens.size(), deg};
          if (ref && *ref != key) {
            B["elimination"] = out;
            throw StageUnstable("elimination differs between primes, bad prime suspected");
          }
          ref = key;
        }
        if (exact && exact->gb) {
          auto T = eliminate_truncated(*exact->gb, opt.eliminate_first, opt.exact_elimination_degree);
          json q = json{{"dims_by_degree", T.dims},
                        {"lowest_degree", T.lowest_degree},
                        {"principal_through_degree", T.principal_pattern ? opt.exact_elimination_degree : -1}};
          if (T.lowest.size() == 1) {
            eliminant = detail::integral_form(T.lowest[0]);
            q["generator"] = eliminant->str();
          }
          out[QField{}.name()] = q;
        }
        B["elimination"] = out;
      });
    }
  }

  if (opt.runs("membership") && !opt.hyperplanes.empty()) {
    detail::run_stage(rep, "membership", opt.stage_timeout, [&] {
      if (!exact || (!exact->gb && !exact_empty_degree)) throw std::runtime_error("exact a2 unavailable");
      json out = json::array();
      for (const auto& text : opt.hyperplanes) {
        auto f = parse_poly(exact->a2.ideal.ring, text);
        if (f.degree() != 1 || !f.is_homogeneous()) throw std::invalid_argument("hyperplane is not a linear form: " + text);
        RadicalVerdict v;
        if (exact_empty_degree) {
          // the ideal contains every form of the vanishing degree
          v = RadicalVerdict{true, *exact_empty_degree, "empty locus"};
        } else {
          v = radical_membership_certified(*exact->gb, exact->a2.ideal, f);
        }
        out.push_back(json{{"form", f.str()}, {"field", QField{}.name()}, {"member", v.member}, {"method", v.method},
                           {"power", v.power}});
      }
      B["membership"] = out;
    });
  }

  if (opt.runs("probes")) {
    if (a2_known && a2_empty) {
      B["stages"]["probes"] = "skipped: a2 projectively empty";
    } else {
      detail::run_stage(rep, "probes", opt.stage_timeout, [&] {
        json out = json::array();
        for (auto p : opt.probe_primes) {
          Poly<FpField> f;
          std::string source;
          if (eliminant) {
            f = detail::reduce_mod(*eliminant, p);
            source = "q-eliminant mod p";
          } else {
            auto iv = build_ivhs<FpField>(arr, FpField(p));
            auto E = eliminate(detail::framed_ideal(iv, 1, opt.frame).ideal, opt.eliminate_first);
            if (E.gens.size() != 1) throw std::runtime_error("eliminant mod " + std::to_string(p) + " is not principal");
            f = E.gens[0];
            source = "elimination mod p";
          }
          auto s = plane_restriction_probe(f, opt.probe_trials, opt.probe_seed);
          json j = probe_to_json(s);
          j["field"] = FpField(p).name();
          j["source"] = source;
          out.push_back(j);
        }
        B["probes"] = out;
      });
    }
  }

  if (opt.runs("yukawa")) {
    detail::run_stage(rep, "yukawa", opt.stage_timeout, [&] {
      json out = json::object();
      for (auto& [p, run] : modular) {
        auto a3 = characteristic_ideal(run.iv, 2);
        bool nonzero = !a3.ideal.gens.empty();
        out[FpField(p).name()] = json{{"generators", a3.ideal.gens.size()}, {"principal", a3.ideal.gens.size() == 1},
                                      {"nonzero", nonzero}};
        if (a2_known && a2_empty && !nonzero) throw std::logic_error("a2 empty but a3 vanishes identically");
      }
      B["yukawa"] = out;
    });
  }
  return rep;
}

}  // namespace octic

#endif  // OCTIC_PIPELINE_ANALYSIS_HPP
