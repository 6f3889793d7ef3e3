// Command line front end. Exit codes: 0 success, 1 input or validation
// error, 2 stage failure or timeout.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "octic/pipeline/analysis.hpp"
#include "octic/pipeline/compare.hpp"
#include "octic/pipeline/hyperelliptic.hpp"
#include "octic/pipeline/survey.hpp"

namespace {

using namespace octic;

constexpr int kInputError = 1;
constexpr int kStageError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) parts.push_back(item);
  return parts;
}

// "q" or "fp:P"; returns 0 for Q.
std::uint32_t parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return 0;
  if (s.rfind("fp:", 0) == 0) {
    long p = std::stol(s.substr(3));
    if (p < 2 || p > 2147483647L) throw InputError("prime out of range: " + s);
    FpField{static_cast<std::uint32_t>(p)};  // validates primality
    return static_cast<std::uint32_t>(p);
  }
  throw InputError("field must be q or fp:PRIME, got '" + s + "'");
}

std::string ideal_text(const std::vector<std::string>& gens) {
  std::string t;
  for (const auto& g : gens) t += g + "\n";
  return t;
}

template <class Field>
std::vector<std::string> char_ideal_lines(const Arrangement& arr, int k, const std::string& frame, Field field) {
  auto iv = build_ivhs<Field>(arr, field);
  auto ci = detail::framed_ideal(iv, k, frame);
  std::vector<std::string> lines;
  for (const auto& g : ci.ideal.gens) {
    if constexpr (std::is_same_v<Field, QField>) {
      lines.push_back(detail::integral_form(g).str());
    } else {
      lines.push_back(g.str());
    }
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IVHS computations for double octics over eight-plane arrangements"};
  app.require_subcommand(1);

  std::string input, out, field = "q", frame = "moduli", kind, nodes_text = "1,2,3,4,5,6,7,8", stages_text, store,
                      compare_path;
  int level = 1;
  bool invariant_only = false, timings = false;
  std::vector<std::string> hyperplanes;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::uint32_t prime = kDefaultPrime;
  double timeout = 600;

  auto* position = app.add_subcommand("check-position", "Check that no four planes meet in a point");
  position->add_option("--input", input, "arrangement JSON")->required();

  auto* hodge = app.add_subcommand("hodge-dims", "Dimensions of the pieces R^(0..3)");
  hodge->add_option("--input", input, "arrangement JSON")->required();
  hodge->add_flag("--invariant-only", invariant_only, "only the sign-invariant part");
  hodge->add_option("--field", field, "q or fp:PRIME");

  auto* chari = app.add_subcommand("char-ideal", "Generators of the characteristic ideal a_{k+1}");
  chari->add_option("--input", input, "arrangement JSON")->required();
  chari->add_option("--k", level, "1 for the quadrics, 2 for the Yukawa cubic")->check(CLI::Range(1, 2));
  chari->add_option("--field", field, "q or fp:PRIME");
  chari->add_option("--frame", frame, "moduli or monomial");
  chari->add_option("--out", out, "output file, one generator per line");

  auto* analyze = app.add_subcommand("analyze", "Full analysis report of one arrangement");
  analyze->add_option("--input", input, "arrangement JSON")->required();
  analyze->add_option("--stages", stages_text, "comma separated subset of the stages");
  analyze->add_option("--hyperplane", hyperplanes, "linear form in z1..z9 to test for radical membership");
  analyze->add_option("--frame", frame, "moduli or monomial");
  analyze->add_option("--seed", seed, "probe seed")->default_val(20240601);
  analyze->add_option("--timeout", timeout, "seconds per stage, 0 for none");
  analyze->add_flag("--timings", timings, "include stage timings (not canonical)");
  analyze->add_option("--out", out, "report file");

  auto* hyper = app.add_subcommand("hyperelliptic", "Restrict a2 to the hyperelliptic tangent span");
  hyper->add_option("--nodes", nodes_text, "eight distinct rationals, comma separated");
  hyper->add_option("--out", out, "report file");

  auto* models = app.add_subcommand("models", "Invariants of a reference model");
  models->add_option("--kind", kind, "segre22, veronese2 or quadric_plus_point")->required();
  models->add_option("--compare", compare_path, "analysis report to compare against the model");
  models->add_option("--out", out, "output file");

  auto* surv = app.add_subcommand("survey", "Seeded survey of a2 emptiness at random points");
  surv->add_option("--n", count, "number of samples")->required();
  surv->add_option("--seed", seed, "base seed")->required();
  surv->add_option("--prime", prime, "prime field");
  surv->add_option("--store", store, "JSON-lines store; a CSV summary is written beside it")->required();

  auto* yuk = app.add_subcommand("yukawa", "The Yukawa cubic");
  yuk->add_option("--input", input, "arrangement JSON")->required();
  yuk->add_option("--field", field, "q or fp:PRIME");
  yuk->add_option("--frame", frame, "moduli or monomial");
  yuk->add_option("--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*position) {
      auto arr = load_arrangement(input);
      auto r = check_general_position(arr);
      json v = json::array();
      for (const auto& q : r.vanishing) v.push_back({q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1});
      emit(json{{"general_position", r.general}, {"vanishing_minors", v}}.dump(2) + "\n", out);
      return r.general ? 0 : kInputError;
    }
    if (*hodge) {
      auto arr = load_arrangement(input);
      auto p = parse_field(field);
      std::array<std::size_t, 4> d{};
      if (p == 0) {
        d = hodge_dims(build_jacobian<QField>(arr), invariant_only);
      } else {
        d = hodge_dims(build_jacobian<FpField>(arr, FpField(p)), invariant_only);
      }
      emit(json{{"field", p == 0 ? QField{}.name() : FpField(p).name()}, {"invariant_only", invariant_only}, {"dims", d}}
                   .dump(2) + "\n",
           out);
      return 0;
    }
    if (*chari || *yuk) {
      auto arr = load_arrangement(input);
      int k = *yuk ? 2 : level;
      auto p = parse_field(field);
      auto lines = p == 0 ? char_ideal_lines(arr, k, frame, QField{}) : char_ideal_lines(arr, k, frame, FpField(p));
      emit(ideal_text(lines), out);
      return 0;
    }
    if (*analyze) {
      auto arr = load_arrangement(input);
      AnalysisOptions opt;
      if (!stages_text.empty()) {
        opt.stages.clear();
        for (const auto& s : split(stages_text, ',')) {
          if (std::find(all_stages().begin(), all_stages().end(), s) == all_stages().end())
            throw InputError("unknown stage '" + s + "'");
          opt.stages.insert(s);
        }
      }
      opt.hyperplanes = hyperplanes;
      opt.frame = frame;
      opt.probe_seed = seed;
      opt.stage_timeout = timeout;
      opt.timings = timings;
      auto rep = analyze_point(arr, opt);
      emit(rep.to_json(timings).dump(2) + "\n", out);
      return rep.all_stages_ok() ? 0 : kStageError;
    }
    if (*hyper) {
      std::vector<Rational> nodes;
      for (const auto& t : split(nodes_text, ',')) nodes.push_back(Rational::parse(t));
      if (nodes.size() != 8) throw InputError("need exactly eight nodes");
      auto j = hyperelliptic_intersection_check(nodes);
      emit(j.dump(2) + "\n", out);
      return j["stages"]["restriction"] == "ok" ? 0 : kStageError;
    }
    if (*models) {
      auto m = parse_model_kind(kind);
      json j = compare_path.empty() ? model_report(m) : compare_with_models(load_json(compare_path), m);
      emit(j.dump(2) + "\n", out);
      return 0;
    }
    if (*surv) {
      FpField{prime};  // validates primality
      SurveyStore s(store);
      auto records = survey(count, seed, prime, &s);
      bool clean = true;
      for (const auto& r : records) {
        std::cout << r.to_json().dump() << "\n";
        clean = clean && r.error.empty();
      }
      return clean ? 0 : kStageError;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {  // includes ArrangementError
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kStageError;
  }
  return 0;
}
