#ifndef OCTIC_IVHS_HIGGS_HPP
#define OCTIC_IVHS_HIGGS_HPP

// Multiplication maps mu_k : Sym^k R~(1) -> R~(k) on the invariant pieces,
// the characteristic ideals they induce in k[z_1..z_9], the Yukawa cubic and
// the map from arrangement deformations to R~(1).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/groebner/buchberger.hpp"
#include "octic/ivhs/graded_piece.hpp"

namespace octic {

/// Jacobian data plus the four invariant pieces.
template <class Field>
struct Ivhs {
  using Elem = typename Field::Elem;
  JacobianData<Field> jd;
  std::array<GradedPiece<Field>, 4> pieces;

  const GradedPiece<Field>& piece(int p) const { return pieces.at(static_cast<std::size_t>(p)); }
  std::size_t tangent_dim() const { return pieces[1].dim(); }
  const Field& field() const { return jd.field; }
};

template <class Field>
Ivhs<Field> build_ivhs(const Arrangement& arr, Field field = Field{}, PieceMethod method = PieceMethod::Reduced) {
  Ivhs<Field> iv;
  iv.jd = build_jacobian<Field>(arr, field);
  for (int p = 0; p <= 3; ++p) iv.pieces[p] = graded_piece(iv.jd, p, true, method);
  return iv;
}

/// Multisets of size k from {0..n-1} in colex order: (i_1 <= ... <= i_k)
/// sorted by i_k, then i_{k-1}, and so on. For k = 2 the 0-based position of
/// (i,j) is j(j+1)/2 + i.
inline std::vector<std::vector<std::size_t>> colex_multisets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0) return {{}};
  std::vector<std::vector<std::size_t>> prev = colex_multisets(n, k - 1);
  for (std::size_t last = 0; last < n; ++last)
    for (const auto& p : prev) {
      if (!p.empty() && p.back() > last) continue;
      auto t = p;
      t.push_back(last);
      out.push_back(t);
    }
  return out;
}

/// Number of distinct orderings of a sorted multiset.
inline long multinomial(const std::vector<std::size_t>& sorted) {
  long fact[8] = {1, 1, 2, 6, 24, 120, 720, 5040};
  long r = fact[sorted.size()];
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    r /= fact[j - i];
    i = j;
  }
  return r;
}

/// Class of (representative of `cls` in R~(p)) * (representative of u in R~(1)).
template <class Field>
std::vector<typename Field::Elem> multiply_into_piece(const Ivhs<Field>& iv, int p,
                                                      const std::vector<typename Field::Elem>& cls,
                                                      const std::vector<typename Field::Elem>& u) {
  if (p < 0 || p >= 3) throw std::invalid_argument("multiply_into_piece: no target piece above level 3");
  auto prod = iv.piece(p).representative(cls) * iv.piece(1).representative(u);
  return iv.piece(p + 1).reduce(prod);
}

template <class Field>
struct HiggsMatrix {
  int k = 0;
  Matrix<Field> matrix;                            // dim R~(k) x #multisets
  std::vector<std::vector<std::size_t>> columns;   // column c <-> multiset of basis indices
  std::string convention = "colex";
};

/// Matrix of mu_k on the monomial basis u_{i_1}...u_{i_k} of Sym^k R~(1).
template <class Field>
HiggsMatrix<Field> higgs_matrix(const Ivhs<Field>& iv, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("higgs_matrix: k must be 1, 2 or 3");
  const auto& src = iv.piece(1);
  const auto& dst = iv.piece(k);
  HiggsMatrix<Field> h;
  h.k = k;
  h.columns = colex_multisets(src.dim(), static_cast<std::size_t>(k));
  h.matrix = Matrix<Field>(dst.dim(), h.columns.size(), iv.field());
  auto basis = src.basis();
  for (std::size_t c = 0; c < h.columns.size(); ++c) {
    Monomial m;
    for (auto i : h.columns[c]) m = m * basis[i];
    auto it = dst.column.find(m);
    if (it == dst.column.end()) throw std::logic_error("higgs_matrix: product outside the target piece");
    for (const auto& [r, v] : dst.reduction[it->second]) h.matrix(r, c) = v;
  }
  return h;
}

/// mu_k(v^k) for v given in the R~(1) basis.
template <class Field>
std::vector<typename Field::Elem> power_class(const Ivhs<Field>& iv, const std::vector<typename Field::Elem>& v,
                                              int k) {
  std::vector<typename Field::Elem> cls(iv.piece(0).dim(), iv.field().one());
  for (int p = 0; p < k; ++p) cls = multiply_into_piece(iv, p, cls, v);
  return cls;
}

template <class Field>
RingPtr<Field> char_ring(Field field, std::size_t n = 9) {
  return make_ring(field, indexed_names("z", n));
}

template <class Field>
struct CharacteristicIdeal {
  int k = 0;
  Ideal<Field> ideal;
  std::string arrangement_digest;
  std::string basis_digest;
  std::string field_name;
  std::string convention = "colex";
};

/// Generators f_r = sum over multisets T of mult(T) * M_{r,T} * z^T, where M
/// is the matrix of mu_{k+1}. For k = 1 this is the dual of mu_2 written in
/// the basis u_i^* u_j^*, whose off-diagonal elements are half the dual
/// basis of {u_i u_j}; hence the factor 2 for i != j.
template <class Field>
CharacteristicIdeal<Field> characteristic_ideal(const Ivhs<Field>& iv, int k) {
  if (k < 1 || k > 2) throw std::invalid_argument("characteristic_ideal: k must be 1 or 2");
  auto h = higgs_matrix(iv, k + 1);
  auto R = char_ring(iv.field(), iv.tangent_dim());
  std::vector<Poly<Field>> gens;
  for (std::size_t r = 0; r < h.matrix.rows(); ++r) {
    std::vector<Term<Field>> ts;
    for (std::size_t c = 0; c < h.columns.size(); ++c) {
      const auto& v = h.matrix(r, c);
      if (v.is_zero()) continue;
      Monomial m;
      for (auto i : h.columns[c]) m = m * Monomial::var(i);
      ts.push_back({m, iv.field().from_int(multinomial(h.columns[c])) * v});
    }
    gens.push_back(Poly<Field>::from_terms(R, std::move(ts)));
  }
  CharacteristicIdeal<Field> ci;
  ci.k = k;
  ci.ideal = Ideal<Field>(R, std::move(gens));
  ci.arrangement_digest = arrangement_digest(iv.jd.arrangement);
  ci.basis_digest = iv.piece(1).digest();
  ci.field_name = iv.field().name();
  return ci;
}

/// The cubic z |-> mu_3(v^3) in the one-dimensional R~(3).
template <class Field>
Poly<Field> yukawa_cubic(const Ivhs<Field>& iv) {
  if (iv.piece(3).dim() != 1) throw std::logic_error("yukawa_cubic: R~(3) is not one-dimensional");
  auto ci = characteristic_ideal(iv, 2);
  if (ci.ideal.gens.empty()) return Poly<Field>(ci.ideal.ring);
  return ci.ideal.gens.front();
}

/// Class in R~(1) of sum_ij bdot_ij y_i x_j^2 for the deformation Adot.
template <class Field>
std::vector<typename Field::Elem> tangent_class(const Ivhs<Field>& iv, const TangentDirection& dir) {
  QMatrix bdot = bdot_from_adot(iv.jd.arrangement, iv.jd.B, dir.Adot);
  const auto& R = iv.jd.ring;
  std::vector<Term<Field>> ts;
  for (std::size_t i = 0; i < kNy; ++i)
    for (std::size_t j = 0; j < kNx; ++j) {
      if (bdot(i, j).is_zero()) continue;
      ts.push_back({Monomial::var(kNx + i) * Monomial::var(j, 2), iv.field().from_rational(bdot(i, j))});
    }
  return iv.piece(1).reduce(Poly<Field>::from_terms(R, std::move(ts)));
}

/// Matrix whose rows are the tangent classes of `dirs`.
template <class Field>
Matrix<Field> tangent_classes(const Ivhs<Field>& iv, const std::vector<TangentDirection>& dirs) {
  Matrix<Field> m(dirs.size(), iv.tangent_dim(), iv.field());
  for (std::size_t r = 0; r < dirs.size(); ++r) {
    auto v = tangent_class(iv, dirs[r]);
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[c];
  }
  return m;
}

/// Rewrites a characteristic ideal in the coordinates of another basis
/// of R~(1): row r of `frame` holds the basis vector u'_r in the current
/// basis, so z = frame^t * z'.
template <class Field>
CharacteristicIdeal<Field> change_frame(const CharacteristicIdeal<Field>& ci, const Matrix<Field>& frame) {
  const auto& R = ci.ideal.ring;
  std::size_t n = R->nvars();
  if (frame.rows() != n || frame.cols() != n) throw std::invalid_argument("change_frame: frame must be square");
  if (rank(frame) != n) throw std::invalid_argument("change_frame: frame is singular");
  std::vector<Poly<Field>> images;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Term<Field>> ts;
    for (std::size_t r = 0; r < n; ++r)
      if (!frame(r, k).is_zero()) ts.push_back({Monomial::var(r), frame(r, k)});
    images.push_back(Poly<Field>::from_terms(R, std::move(ts)));
  }
  auto out = ci;
  std::vector<Poly<Field>> gens;
  for (const auto& g : ci.ideal.gens) gens.push_back(substitute_linear(g, images));
  out.ideal = Ideal<Field>(R, std::move(gens));
  return out;
}

/// The frame of tangent classes of the nine moduli-slice directions
/// (rows 6..8, columns 2..4 of A, row-major).
template <class Field>
Matrix<Field> moduli_frame(const Ivhs<Field>& iv) {
  return tangent_classes(iv, moduli_directions());
}

}  // namespace octic

#endif  // OCTIC_IVHS_HIGGS_HPP
