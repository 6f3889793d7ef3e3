#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "octic/pipeline/analysis.hpp"
#include "octic/pipeline/compare.hpp"
#include "octic/pipeline/hyperelliptic.hpp"
#include "octic/pipeline/survey.hpp"

using namespace octic;
namespace fs = std::filesystem;

namespace {

AnalysisOptions light_options() {
  AnalysisOptions o;
  o.stages = {"pieces", "a2", "yukawa"};
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "octic_pipeline_tests";
  fs::create_directories(dir);
  auto p = dir / name;
  fs::remove(p);
  return p;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(OCTIC_CLI) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Analysis, GenericPointIsEmptyAndYukawaNonzero) {
  auto rep = analyze_point(from_moduli(random_moduli_point(3)), light_options());
  EXPECT_TRUE(rep.all_stages_ok()) << rep.canonical();
  const auto& B = rep.body;
  for (const char* f : {"fp:32003", "fp:31013"}) {
    EXPECT_TRUE(B["a2"][f]["empty"].get<bool>());
    EXPECT_EQ(B["invariant_dims"][f], json::array({1, 9, 9, 1}));
    EXPECT_TRUE(B["yukawa"][f]["nonzero"].get<bool>());
  }
  EXPECT_FALSE(B.contains("elimination"));  // stage not requested
  EXPECT_FALSE(B.contains("timing"));
}

TEST(Analysis, SkipsEliminationWhenEmpty) {
  auto opt = light_options();
  opt.stages.insert("elimination");
  opt.stages.insert("probes");
  auto rep = analyze_point(from_moduli(random_moduli_point(4)), opt);
  EXPECT_EQ(rep.stage_status("elimination"), "skipped: a2 projectively empty");
  EXPECT_EQ(rep.stage_status("probes"), "skipped: a2 projectively empty");
  EXPECT_TRUE(rep.all_stages_ok());
}

TEST(Analysis, ExactEmptinessCertificate) {
  AnalysisOptions o;
  o.stages = {"pieces", "a2_exact", "membership"};
  o.hyperplanes = {"z1 + 2*z9"};
  auto rep = analyze_point(from_moduli(random_moduli_point(5)), o);
  ASSERT_TRUE(rep.all_stages_ok()) << rep.canonical();
  EXPECT_TRUE(rep.body["a2_exact"]["empty"].get<bool>());
  EXPECT_EQ(rep.body["a2_exact"]["method"], "reduction certificate");
  EXPECT_TRUE(rep.body["membership"][0]["member"].get<bool>());
}

TEST(Analysis, RejectsDegenerateInputWithMinors) {
  auto arr = vandermonde_point();
  for (std::size_t j = 0; j < 4; ++j) arr.A(7, j) = arr.A(6, j);
  try {
    analyze_point(arr, light_options());
    FAIL() << "expected ArrangementError";
  } catch (const ArrangementError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2,7,8}"), std::string::npos) << e.what();
  }
}

TEST(Analysis, FailedStageBecomesMarker) {
  AnalysisOptions o = light_options();
  o.stages.insert("membership");
  o.stages.insert("a2_exact");
  o.hyperplanes = {"z1*z2"};  // not linear
  auto rep = analyze_point(from_moduli(random_moduli_point(6)), o);
  EXPECT_EQ(rep.stage_status("membership").rfind("failed:", 0), 0u) << rep.stage_status("membership");
  EXPECT_FALSE(rep.all_stages_ok());
  EXPECT_EQ(rep.stage_status("a2"), "ok");
}

TEST(Analysis, TimeoutBecomesMarker) {
  AnalysisOptions o;
  o.stages = {"pieces", "a2"};
  o.stage_timeout = 1e-6;
  auto rep = analyze_point(from_moduli(random_moduli_point(7)), o);
  EXPECT_TRUE(rep.stage_status("pieces") == "timed out" || rep.stage_status("a2") == "timed out");
}

TEST(Analysis, ReportsAreDeterministic) {
  auto a = analyze_point(from_moduli(random_moduli_point(8)), light_options());
  auto b = analyze_point(from_moduli(random_moduli_point(8)), light_options());
  EXPECT_EQ(a.canonical(), b.canonical());
}

TEST(Compare, ModelsAgainstThemselvesAndGenericPoints) {
  for (auto kind : {ModelKind::Segre22, ModelKind::Veronese2, ModelKind::QuadricPlusPoint})
    EXPECT_EQ(compare_with_models(model_report(kind), kind)["verdict"], "compatible") << model_name(kind);
  auto rep = analyze_point(from_moduli(random_moduli_point(3)), light_options());
  for (auto kind : {ModelKind::Segre22, ModelKind::Veronese2}) {
    auto c = compare_with_models(rep.body, kind);
    EXPECT_EQ(c["verdict"], "incompatible");
    EXPECT_NE(std::find(c["differing"].begin(), c["differing"].end(), "empty"), c["differing"].end());
  }
  EXPECT_EQ(model_invariants(ModelKind::Segre22), (LocusInvariants{false, 5, 6}));
  EXPECT_EQ(model_invariants(ModelKind::Veronese2), (LocusInvariants{false, 3, 4}));
  EXPECT_THROW(report_invariants(json::object()), std::invalid_argument);
}

TEST(Hyperelliptic, RestrictedLocusHasSmallDimension) {
  auto j = hyperelliptic_intersection_check(integer_nodes({1, 2, 3, 4, 5, 6, 7, 8}));
  ASSERT_EQ(j["stages"]["restriction"], "ok");
  for (const char* f : {"Q", "fp:32003", "fp:31013"}) {
    EXPECT_EQ(j[f]["tangent_rank"], 5);
    EXPECT_LE(j[f]["projective_dimension"].get<int>(), 1);
  }
  EXPECT_TRUE(j["line_checks"]["duality_holds"].get<bool>());
}

TEST(Survey, RecordsAreReproducibleAndPersisted) {
  auto path = scratch("records.jsonl");
  SurveyStore store(path);
  fs::remove(store.csv_path());
  auto first = survey(2, 77, kDefaultPrime, &store);
  ASSERT_EQ(first.size(), 2u);
  for (const auto& r : first) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.general_position);
    EXPECT_TRUE(r.c1_empty);
    EXPECT_EQ(r.invariant_dims, (std::vector<std::size_t>{1, 9, 9, 1}));
  }
  EXPECT_EQ(first[1].seed, 78u);
  auto text = slurp(path);
  auto again = survey(2, 77, kDefaultPrime);
  std::string expected;
  for (const auto& r : again) expected += r.to_json().dump() + "\n";
  EXPECT_EQ(text, expected);
  auto csv = slurp(store.csv_path());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);  // header and two rows
  EXPECT_THROW(survey(0, 1, kDefaultPrime), std::invalid_argument);
}

TEST(Cli, ExitCodes) {
  std::string data = OCTIC_DATA_DIR;
  EXPECT_EQ(run_cli("check-position --input " + data + "/vandermonde.json"), 0);
  EXPECT_EQ(run_cli("check-position --input " + data + "/degenerate.json"), 1);
  EXPECT_EQ(run_cli("analyze --input " + data + "/degenerate.json"), 1);
  EXPECT_EQ(run_cli("check-position --input /nonexistent.json"), 1);
  EXPECT_EQ(run_cli("char-ideal --input " + data + "/vandermonde.json --field fp:8"), 1);
  EXPECT_EQ(run_cli("survey --n 0 --seed 1 --store " + scratch("empty.jsonl").string()), 1);
  EXPECT_EQ(run_cli("models --kind nonsense"), 1);
  EXPECT_EQ(run_cli("bogus-command"), 1);
  EXPECT_EQ(run_cli("analyze --input " + data + "/random_seed7.json --stages pieces,a2 --timeout 0.000001"), 2);
  EXPECT_EQ(run_cli("hodge-dims --input " + data + "/random_seed7.json --invariant-only"), 0);
  EXPECT_EQ(run_cli("models --kind veronese2"), 0);
}
