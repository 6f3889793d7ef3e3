#ifndef OCTIC_IVHS_JACOBIAN_HPP
#define OCTIC_IVHS_JACOBIAN_HPP

// The Cayley-trick potential F = sum_i y_i f_i, f_i = sum_j b_ij x_j^2, in
// the 12-variable ring with variables x1..x8, y1..y4 (in that order).

#include <cstddef>
#include <vector>

#include "octic/arrangement/arrangement.hpp"
#include "octic/poly/bigrading.hpp"
#include "octic/poly/polynomial.hpp"

namespace octic {

inline constexpr std::size_t kNx = 8;
inline constexpr std::size_t kNy = 4;

template <class Field>
RingPtr<Field> jacobian_ring(Field f) {
  auto names = indexed_names("x", kNx);
  auto ys = indexed_names("y", kNy);
  names.insert(names.end(), ys.begin(), ys.end());
  return make_ring(f, names);
}

template <class Field>
struct JacobianData {
  Arrangement arrangement;
  QMatrix B;
  Field field;
  RingPtr<Field> ring;
  std::vector<Poly<Field>> quadrics;  // f_1..f_4
  Poly<Field> potential;
  std::vector<Poly<Field>> dx;        // dF/dx_j, bidegree (1,-1)
  std::vector<Poly<Field>> dy;        // dF/dy_i = f_i, bidegree (0,2)

  /// All twelve generators: the x-derivatives then the y-derivatives.
  std::vector<Poly<Field>> generators() const {
    auto g = dx;
    g.insert(g.end(), dy.begin(), dy.end());
    return g;
  }
  typename Field::Elem b(std::size_t i, std::size_t j) const { return field.from_rational(B(i, j)); }
};

template <class Field>
JacobianData<Field> build_jacobian(const Arrangement& arr, Field field = Field{}) {
  require_general_position(arr);
  JacobianData<Field> jd;
  jd.arrangement = arr;
  jd.B = complement_matrix(arr);
  jd.field = field;
  jd.ring = jacobian_ring(field);
  const auto& R = jd.ring;
  jd.potential = Poly<Field>(R);
  for (std::size_t i = 0; i < kNy; ++i) {
    std::vector<Term<Field>> ts;
    for (std::size_t j = 0; j < kNx; ++j) ts.push_back({Monomial::var(j, 2), jd.b(i, j)});
    jd.quadrics.push_back(Poly<Field>::from_terms(R, std::move(ts)));
    jd.potential += Poly<Field>::var(R, kNx + i) * jd.quadrics.back();
  }
  for (std::size_t j = 0; j < kNx; ++j) jd.dx.push_back(jd.potential.partial_derivative(j));
  for (std::size_t i = 0; i < kNy; ++i) jd.dy.push_back(jd.potential.partial_derivative(kNx + i));
  return jd;
}

}  // namespace octic

#endif  // OCTIC_IVHS_JACOBIAN_HPP
