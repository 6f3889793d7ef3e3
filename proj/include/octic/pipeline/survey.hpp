#ifndef OCTIC_PIPELINE_SURVEY_HPP
#define OCTIC_PIPELINE_SURVEY_HPP

// Seeded random survey of a2 emptiness over one prime. Record i uses seed
// `seed + i`, so a survey is reproducible record by record. Samples are
// analyzed in parallel; records are appended to the store in index order.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "octic/pipeline/analysis.hpp"

namespace octic {

struct SurveyRecord {
  std::uint64_t seed = 0;
  ModuliPoint point;
  bool general_position = false;
  bool c1_empty = false;
  std::vector<std::size_t> invariant_dims;
  long cone_dimension = -1;
  long degree = 0;
  std::uint32_t prime = 0;
  std::string error;  // analysis or persistence failure, empty when fine

  json to_json() const {
    json j{{"seed", seed},
           {"point", moduli_to_json(point)},
           {"prime", prime},
           {"general_position", general_position},
           {"c1_empty", c1_empty},
           {"invariant_dims", invariant_dims},
           {"cone_dimension", cone_dimension},
           {"degree", degree}};
    if (!error.empty()) j["error"] = error;
    return j;
  }
  std::string csv_row() const {
    std::string dims;
    for (std::size_t i = 0; i < invariant_dims.size(); ++i) dims += (i ? ";" : "") + std::to_string(invariant_dims[i]);
    return std::to_string(seed) + "," + std::to_string(prime) + "," + (general_position ? "1" : "0") + "," +
           (c1_empty ? "1" : "0") + "," + dims + "," + std::to_string(cone_dimension) + "," + std::to_string(degree);
  }
};

inline SurveyRecord survey_sample(std::uint64_t seed, std::uint32_t prime) {
  SurveyRecord r;
  r.seed = seed;
  r.prime = prime;
  try {
    r.point = random_moduli_point(seed);
    auto arr = from_moduli(r.point);
    r.general_position = is_general_position(arr);
    auto iv = build_ivhs<FpField>(arr, FpField(prime));
    for (int k = 0; k <= 3; ++k) r.invariant_dims.push_back(iv.piece(k).dim());
    // emptiness does not depend on the frame, so the monomial one is used
    auto h = hilbert(buchberger(characteristic_ideal(iv, 1).ideal));
    r.cone_dimension = h.dimension;
    r.degree = h.degree;
    r.c1_empty = h.dimension <= 0;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// Append-only JSON-lines store with a CSV summary next to it.
class SurveyStore {
 public:
  explicit SurveyStore(std::filesystem::path jsonl) : jsonl_(std::move(jsonl)) {
    csv_ = jsonl_;
    csv_.replace_extension(".csv");
  }
  const std::filesystem::path& jsonl_path() const { return jsonl_; }
  const std::filesystem::path& csv_path() const { return csv_; }

  /// Appends one record; a failure is written into the record's error.
  void append(SurveyRecord& r) {
    std::lock_guard lock(mu_);
    bool fresh_csv = !std::filesystem::exists(csv_);
    std::ofstream js(jsonl_, std::ios::app), cs(csv_, std::ios::app);
    if (!js || !cs) {
      r.error = "cannot open store " + jsonl_.string();
      return;
    }
    js << r.to_json().dump() << '\n';
    if (fresh_csv) cs << "seed,prime,general_position,c1_empty,invariant_dims,cone_dimension,degree\n";
    cs << r.csv_row() << '\n';
    if (!js || !cs) r.error = "write failed for " + jsonl_.string();
  }

 private:
  std::filesystem::path jsonl_, csv_;
  std::mutex mu_;
};

inline std::vector<SurveyRecord> survey(std::size_t n, std::uint64_t seed, std::uint32_t prime, SurveyStore* store = nullptr,
                                        unsigned workers = 0) {
  if (n == 0) throw std::invalid_argument("survey: need at least one sample");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SurveyRecord> out(n);
  for (std::size_t start = 0; start < n; start += workers) {
    std::size_t stop = std::min(n, start + workers);
    std::vector<std::future<SurveyRecord>> batch;
    for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, survey_sample, seed + i, prime));
    for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
  }
  if (store)
    for (auto& r : out) store->append(r);
  return out;
}

}  // namespace octic

#endif  // OCTIC_PIPELINE_SURVEY_HPP
