#ifndef OCTIC_ARRANGEMENT_ARRANGEMENT_HPP
#define OCTIC_ARRANGEMENT_ARRANGEMENT_HPP

// Eight planes in P^3, stored as an 8x4 rational matrix whose i-th row holds
// the coefficients of the i-th plane.

#include <array>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/arith/json_io.hpp"
#include "octic/arith/matrix.hpp"
#include "octic/arith/random.hpp"

namespace octic {

inline constexpr std::size_t kPlanes = 8;
inline constexpr std::size_t kDim = 4;


class ArrangementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 4-subset of plane indices (0-based) whose minor vanishes.
using PlaneQuad = std::array<int, 4>;

struct GeneralPositionReport {
  bool general = true;
  std::vector<PlaneQuad> vanishing;
};

struct Arrangement {
  QMatrix A{kPlanes, kDim};

  Arrangement() = default;
  explicit Arrangement(QMatrix a) : A(std::move(a)) {
    if (A.rows() != kPlanes || A.cols() != kDim) throw ArrangementError("arrangement matrix must be 8x4");
  }
};

/// The nine free entries of the normal form: rows 6..8, columns 2..4 of A,
/// row-major.
struct ModuliPoint {
  std::array<Rational, 9> stars;
  friend bool operator==(const ModuliPoint& a, const ModuliPoint& b) { return a.stars == b.stars; }
};

/// A first-order deformation of the arrangement matrix.
struct TangentDirection {
  QMatrix Adot{kPlanes, kDim};
};

inline std::vector<PlaneQuad> all_plane_quads() {
  std::vector<PlaneQuad> q;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) q.push_back({a, b, c, d});
  return q;
}

inline GeneralPositionReport check_general_position(const Arrangement& arr) {
  GeneralPositionReport r;
  for (const auto& q : all_plane_quads()) {
    auto sub = arr.A.select({std::size_t(q[0]), std::size_t(q[1]), std::size_t(q[2]), std::size_t(q[3])}, {0, 1, 2, 3});
    if (det(sub).is_zero()) r.vanishing.push_back(q);
  }
  r.general = r.vanishing.empty();
  return r;
}

inline bool is_general_position(const Arrangement& arr) { return check_general_position(arr).general; }

inline void require_general_position(const Arrangement& arr) {
  auto r = check_general_position(arr);
  if (!r.general) {
    std::string msg = "arrangement not in general position; vanishing minors:";
    for (const auto& q : r.vanishing)
      msg += " {" + std::to_string(q[0] + 1) + "," + std::to_string(q[1] + 1) + "," + std::to_string(q[2] + 1) +
             "," + std::to_string(q[3] + 1) + "}";
    throw ArrangementError(msg);
  }
}

inline Arrangement from_moduli(const ModuliPoint& m) {
  QMatrix A(kPlanes, kDim);
  for (std::size_t i = 0; i < 4; ++i) A(i, i) = Rational(1L);
  for (std::size_t j = 0; j < 4; ++j) A(4, j) = Rational(1L);
  for (std::size_t r = 0; r < 3; ++r) {
    A(5 + r, 0) = Rational(1L);
    for (std::size_t c = 0; c < 3; ++c) A(5 + r, 1 + c) = m.stars[3 * r + c];
  }
  return Arrangement(A);
}

/// Normal form under the right GL_4 action and row rescalings: rows 1-4 the
/// identity, row 5 all ones, rows 6-8 starting with 1.
inline ModuliPoint normalize(const Arrangement& arr) {
  require_general_position(arr);
  QMatrix top = arr.A.select({0, 1, 2, 3}, {0, 1, 2, 3});
  auto inv = solve_particular(top, QMatrix::identity(4));
  QMatrix a = arr.A * *inv;
  ModuliPoint m;
  for (std::size_t r = 0; r < 3; ++r) {
    Rational lead = a(5 + r, 0) / a(4, 0);
    for (std::size_t c = 0; c < 3; ++c) m.stars[3 * r + c] = (a(5 + r, 1 + c) / a(4, 1 + c)) / lead;
  }
  return m;
}

/// Rows (1, a, a^2, a^3): the planes attached to eight points of P^1.
inline Arrangement hyperelliptic_arrangement(const std::vector<Rational>& nodes) {
  if (nodes.size() != kPlanes) throw ArrangementError("hyperelliptic arrangement needs 8 nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw ArrangementError("hyperelliptic arrangement: repeated node " + nodes[i].str());
  QMatrix A(kPlanes, kDim);
  for (std::size_t i = 0; i < kPlanes; ++i) {
    Rational p(1L);
    for (std::size_t j = 0; j < kDim; ++j) {
      A(i, j) = p;
      p *= nodes[i];
    }
  }
  return Arrangement(A);
}

inline std::vector<Rational> integer_nodes(const std::vector<long>& v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

/// The point with nodes 1..8.
inline Arrangement vandermonde_point() { return hyperelliptic_arrangement(integer_nodes({1, 2, 3, 4, 5, 6, 7, 8})); }

/// B with B*A = 0, rank 4: rows are the RREF nullspace basis of A^t.
inline QMatrix complement_matrix(const Arrangement& arr) {
  if (rank(arr.A) != kDim) throw ArrangementError("complement_matrix: rank-deficient arrangement");
  return nullspace(arr.A.transpose()).transpose();
}

/// Directions of the trivial deformations: A*E_kl (16) then diag(e_i)*A (8).
inline std::vector<TangentDirection> gauge_basis(const Arrangement& arr) {
  std::vector<TangentDirection> out;
  for (std::size_t k = 0; k < kDim; ++k)
    for (std::size_t l = 0; l < kDim; ++l) {
      QMatrix E(kDim, kDim);
      E(k, l) = Rational(1L);
      out.push_back({arr.A * E});
    }
  for (std::size_t i = 0; i < kPlanes; ++i) {
    QMatrix d(kPlanes, kDim);
    for (std::size_t j = 0; j < kDim; ++j) d(i, j) = arr.A(i, j);
    out.push_back({d});
  }
  return out;
}

/// The 9 coordinate directions of the normal-form slice.
inline std::vector<TangentDirection> moduli_directions() {
  std::vector<TangentDirection> out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      TangentDirection t;
      t.Adot(5 + r, 1 + c) = Rational(1L);
      out.push_back(t);
    }
  return out;
}

/// d/da_i of the Vandermonde rows: row i becomes (0, 1, 2a_i, 3a_i^2).
inline std::vector<TangentDirection> hyperelliptic_node_directions(const std::vector<Rational>& nodes) {
  std::vector<TangentDirection> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    TangentDirection t;
    t.Adot(i, 1) = Rational(1L);
    t.Adot(i, 2) = Rational(2L) * nodes[i];
    t.Adot(i, 3) = Rational(3L) * nodes[i] * nodes[i];
    out.push_back(t);
  }
  return out;
}

/// Flattens directions into rows of a (count x 32) matrix.
inline QMatrix directions_matrix(const std::vector<TangentDirection>& dirs) {
  QMatrix m(dirs.size(), kPlanes * kDim);
  for (std::size_t k = 0; k < dirs.size(); ++k)
    for (std::size_t i = 0; i < kPlanes; ++i)
      for (std::size_t j = 0; j < kDim; ++j) m(k, i * kDim + j) = dirs[k].Adot(i, j);
  return m;
}

/// One Bdot with Bdot*A = -B*Adot, free variables zero.
inline QMatrix bdot_from_adot(const Arrangement& arr, const QMatrix& B, const QMatrix& Adot) {
  if (!(B * arr.A).is_zero()) throw ArrangementError("bdot_from_adot: B*A != 0");
  QMatrix rhs = -(B * Adot);
  auto x = solve_particular(arr.A.transpose(), rhs.transpose());
  if (!x) throw ArrangementError("bdot_from_adot: inconsistent system");
  return x->transpose();
}

/// A seeded moduli point with integer stars in [-50, 50], resampled until the
/// arrangement is in general position.
inline ModuliPoint random_moduli_point(std::uint64_t seed, long bound = 50) {
  std::mt19937_64 rng(seed);
  while (true) {
    ModuliPoint m;
    for (auto& s : m.stars) s = Rational(uniform_int(rng, -bound, bound));
    if (is_general_position(from_moduli(m))) return m;
  }
}

inline json arrangement_to_json(const Arrangement& a) { return json{{"matrix", to_json(a.A)}}; }

inline json moduli_to_json(const ModuliPoint& m) {
  json s = json::array();
  for (const auto& v : m.stars) s.push_back(v.str());
  return json{{"stars", s}};
}

/// Accepts either {"matrix": 8x4} or {"stars": 9 entries}.
inline Arrangement arrangement_from_json(const json& j) {
  if (j.contains("matrix")) return Arrangement(matrix_from_json(j.at("matrix")));
  if (j.contains("stars")) {
    const auto& s = j.at("stars");
    if (!s.is_array() || s.size() != 9) throw ArrangementError("stars: expected 9 entries");
    ModuliPoint m;
    for (std::size_t i = 0; i < 9; ++i) m.stars[i] = rational_from_json(s[i]);
    return from_moduli(m);
  }
  throw ArrangementError("arrangement JSON needs a \"matrix\" or \"stars\" field");
}

/// Short stable digest of the matrix entries (FNV-1a over the JSON text).
inline std::string arrangement_digest(const Arrangement& a) {
  std::string s = to_json(a.A).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace octic

#endif  // OCTIC_ARRANGEMENT_ARRANGEMENT_HPP
