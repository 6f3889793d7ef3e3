#ifndef OCTIC_ARITH_JSON_IO_HPP
#define OCTIC_ARITH_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "octic/arith/matrix.hpp"

namespace octic {

using json = nlohmann::json;

/// Rationals travel as "p/q" strings; bare JSON integers are accepted on input.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

inline json to_json(const Matrix<QField>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

inline Matrix<QField> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected a nonempty array of rows");
  std::size_t cols = j.front().size();
  Matrix<QField> m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

}  // namespace octic

#endif  // OCTIC_ARITH_JSON_IO_HPP
