#ifndef OCTIC_IVHS_MODELS_HPP
#define OCTIC_IVHS_MODELS_HPP

// Reference varieties that a characteristic subvariety would have to match
// for special families: the Segre P2 x P2 in P8, the Veronese surface in P5,
// and a smooth quadric in a hyperplane of P8 together with a point off it.

#include <stdexcept>
#include <string>
#include <vector>

#include "octic/groebner/operations.hpp"
#include "octic/poly/polynomial.hpp"

namespace octic {

enum class ModelKind { Segre22, Veronese2, QuadricPlusPoint };

inline std::string model_name(ModelKind k) {
  switch (k) {
    case ModelKind::Segre22: return "segre22";
    case ModelKind::Veronese2: return "veronese2";
    case ModelKind::QuadricPlusPoint: return "quadric_plus_point";
  }
  return "";
}

inline ModelKind parse_model_kind(const std::string& s) {
  if (s == "segre22") return ModelKind::Segre22;
  if (s == "veronese2") return ModelKind::Veronese2;
  if (s == "quadric_plus_point") return ModelKind::QuadricPlusPoint;
  throw std::invalid_argument("unknown model kind '" + s + "'");
}

template <class Field>
struct ReferenceModel {
  ModelKind kind{};
  Ideal<Field> ideal;
  std::vector<Ideal<Field>> components;  // prime components when known
};

namespace detail {

/// All 2x2 minors of the 3x3 matrix whose (r, c) entry is variable idx[r][c].
template <class Field>
std::vector<Poly<Field>> minors_2x2(const RingPtr<Field>& R, const int (&idx)[3][3]) {
  auto z = [&](int r, int c) { return Poly<Field>::var(R, static_cast<std::size_t>(idx[r][c])); };
  std::vector<Poly<Field>> out;
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1) {
          auto m = z(r0, c0) * z(r1, c1) - z(r0, c1) * z(r1, c0);
          bool dup = false;
          for (const auto& o : out) dup = dup || o == m || o == -m;
          if (!m.is_zero() && !dup) out.push_back(m);
        }
  return out;
}

}  // namespace detail

template <class Field>
ReferenceModel<Field> reference_model_full(ModelKind kind, Field field = Field{}) {
  ReferenceModel<Field> m;
  m.kind = kind;
  switch (kind) {
    case ModelKind::Segre22: {
      auto R = make_ring(field, indexed_names("z", 9));
      const int idx[3][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
      m.ideal = Ideal<Field>(R, detail::minors_2x2(R, idx));
      m.components = {m.ideal};
      break;
    }
    case ModelKind::Veronese2: {
      auto R = make_ring(field, indexed_names("z", 6));
      const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
      m.ideal = Ideal<Field>(R, detail::minors_2x2(R, idx));
      m.components = {m.ideal};
      break;
    }
    case ModelKind::QuadricPlusPoint: {
      auto R = make_ring(field, indexed_names("z", 9));
      auto z = [&](std::size_t i) { return Poly<Field>::var(R, i); };
      // smooth quadric of rank 8 inside the hyperplane z9 = 0
      auto q = z(0) * z(1) + z(2) * z(3) + z(4) * z(5) + z(6) * z(7);
      Ideal<Field> quadric(R, {z(8), q});
      std::vector<Poly<Field>> pt;
      for (std::size_t i = 0; i < 8; ++i) pt.push_back(z(i));
      Ideal<Field> point(R, pt);
      m.ideal = intersect(quadric, point);
      m.components = {quadric, point};
      break;
    }
  }
  return m;
}

template <class Field>
Ideal<Field> reference_model(ModelKind kind, Field field = Field{}) {
  return reference_model_full(kind, field).ideal;
}

}  // namespace octic

#endif  // OCTIC_IVHS_MODELS_HPP
