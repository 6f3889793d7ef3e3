#ifndef OCTIC_IVHS_GRADED_PIECE_HPP
#define OCTIC_IVHS_GRADED_PIECE_HPP

// Bidegree (p,0) pieces of the Jacobian ring and their sign-invariant parts.
//
// Relations landing in bidegree (p,0) are m*f_i with m of bidegree (p,-2) and
// m*dF/dx_j with m of bidegree (p-1,1). Every relation is homogeneous for the
// x-parity character, so the piece splits into character blocks; the
// invariant part is the sum of the blocks 0 and 0xff.
//
// Two constructions are provided. `Direct` eliminates the relation matrix of
// each character block in the 12-variable ring. `Reduced` (invariant part
// only) uses that invariant monomials only involve X_j = x_j^2, that the f_i
// cut X = A*w out of the X-space, and that x_j*dF/dx_j = 2 X_j l_j(y); so the
// invariant piece is the (p,p) part of k[w_1..w_4, y_1..y_4] / (L_j(w) l_j(y))
// with L_j the j-th row of A and l_j(y) = sum_i b_ij y_i. The basis is picked
// among the 12-variable monomials either way.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "octic/arith/matrix.hpp"
#include "octic/ivhs/echelon.hpp"
#include "octic/ivhs/jacobian.hpp"

namespace octic {

enum class PieceMethod { Reduced, Direct };

template <class Field>
struct GradedPiece {
  using Elem = typename Field::Elem;
  using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

  int level = 0;
  bool invariant_only = true;
  Field field;
  RingPtr<Field> ring;
  std::vector<Monomial> ambient;  // descending grevlex within each character block
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  std::vector<std::size_t> basis_columns;  // ascending
  std::vector<SparseVec> reduction;        // per ambient column: coordinates in the basis
  std::size_t relation_count = 0;
  std::size_t relation_rank = 0;

  std::size_t dim() const { return basis_columns.size(); }

  std::vector<Monomial> basis() const {
    std::vector<Monomial> b;
    for (auto c : basis_columns) b.push_back(ambient[c]);
    return b;
  }

  /// Coordinates of the class of f, which must live in this piece's span.
  std::vector<Elem> reduce(const Poly<Field>& f) const {
    std::vector<Elem> out(dim(), field.zero());
    for (const auto& t : f.terms()) {
      auto it = column.find(t.mono);
      if (it == column.end())
        throw std::invalid_argument("GradedPiece::reduce: monomial " + f.mono_str(t.mono) + " outside the piece");
      for (const auto& [k, v] : reduction[it->second]) out[k] += t.coef * v;
    }
    return out;
  }

  /// The polynomial sum_k c_k * basis_k.
  Poly<Field> representative(const std::vector<Elem>& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("GradedPiece::representative: wrong length");
    std::vector<Term<Field>> ts;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) ts.push_back({ambient[basis_columns[k]], coords[k]});
    return Poly<Field>::from_terms(ring, std::move(ts));
  }

  Poly<Field> basis_poly(std::size_t k) const { return Poly<Field>(ring, ambient[basis_columns[k]], field.one()); }

  /// Stable digest of the chosen basis monomials.
  std::string digest() const {
    std::uint64_t h = 1469598103934665603ull;
    Poly<Field> probe(ring);
    for (auto c : basis_columns)
      for (unsigned char ch : probe.mono_str(ambient[c]) + ";") h = (h ^ ch) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

namespace detail {

/// x-monomials of degree d with the given parity mask.
inline std::vector<Monomial> x_monomials_with_parity(int d, unsigned parity) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (const auto& m : monomials_of_degree(0, kNx, d))
    if (x_parity(m) == parity) out.push_back(m);
  return out;
}

inline std::vector<unsigned> piece_characters(bool invariant_only) {
  std::vector<unsigned> chars;
  if (invariant_only) return {0u, 0xffu};
  for (unsigned c = 0; c < 256; ++c) chars.push_back(c);
  return chars;
}

}  // namespace detail

/// Monomial multiples of the Jacobian generators landing in bidegree (p,0)
/// with x-parity `character`.
template <class Field>
std::vector<Poly<Field>> relation_polys(const JacobianData<Field>& jd, int p, unsigned character) {
  std::vector<Poly<Field>> out;
  auto ys = monomials_of_degree(kNx, kNx + kNy, p);
  for (const auto& mx : detail::x_monomials_with_parity(2 * p - 2, character))
    for (const auto& my : ys)
      for (const auto& f : jd.quadrics) out.push_back(f.mul_term(mx * my, jd.field.one()));
  if (p >= 1) {
    auto ys1 = monomials_of_degree(kNx, kNx + kNy, p - 1);
    for (std::size_t j = 0; j < kNx; ++j)
      for (const auto& mx : detail::x_monomials_with_parity(2 * p - 1, character ^ (1u << j)))
        for (const auto& my : ys1) out.push_back(jd.dx[j].mul_term(mx * my, jd.field.one()));
  }
  return out;
}

namespace detail {

template <class Field>
std::vector<Monomial> block_ambient(int p, unsigned character) {
  std::vector<Monomial> out;
  auto ys = monomials_of_degree(kNx, kNx + kNy, p);
  for (const auto& mx : x_monomials_with_parity(2 * p, character))
    for (const auto& my : ys) out.push_back(mx * my);
  sort_descending(out, MonomialOrder::grevlex(), kNx + kNy);
  return out;
}

/// Eliminates one character block, appending its ambient monomials, basis
/// and reduction rows to `piece`.
template <class Field>
void add_direct_block(GradedPiece<Field>& piece, const JacobianData<Field>& jd, unsigned character) {
  auto amb = block_ambient<Field>(piece.level, character);
  if (amb.empty()) return;
  std::size_t offset = piece.ambient.size();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> local;
  for (std::size_t c = 0; c < amb.size(); ++c) local.emplace(amb[c], static_cast<std::uint32_t>(c));
  RowEchelon<Field> ech(piece.field, amb.size());
  auto rels = relation_polys(jd, piece.level, character);
  piece.relation_count += rels.size();
  for (const auto& r : rels) {
    typename RowEchelon<Field>::SparseRow row;
    for (const auto& t : r.terms()) row.emplace_back(local.at(t.mono), t.coef);
    ech.add_row(row);
    if (ech.full()) break;
  }
  piece.relation_rank += ech.rank();
  auto red = ech.reduction_operator();
  auto freec = ech.free_columns();
  std::size_t base = piece.basis_columns.size();
  for (auto c : freec) piece.basis_columns.push_back(offset + c);
  for (std::size_t c = 0; c < amb.size(); ++c) {
    typename GradedPiece<Field>::SparseVec sv;
    for (std::size_t k = 0; k < red[c].size(); ++k)
      if (!red[c][k].is_zero()) sv.emplace_back(static_cast<std::uint32_t>(base + k), red[c][k]);
    piece.reduction.push_back(std::move(sv));
    piece.column.emplace(amb[c], offset + c);
    piece.ambient.push_back(amb[c]);
  }
}

/// Invariant piece through the w,y model described at the top of the file.
template <class Field>
void build_reduced_invariant(GradedPiece<Field>& piece, const JacobianData<Field>& jd) {
  using Elem = typename Field::Elem;
  const int p = piece.level;
  const Field& F = piece.field;
  constexpr std::size_t nw = kDim, nm = kDim + kNy;

  // model ambient and relations
  std::vector<Monomial> model;
  for (const auto& a : monomials_of_degree(0, nw, p))
    for (const auto& b : monomials_of_degree(nw, nm, p)) model.push_back(a * b);
  sort_descending(model, MonomialOrder::grevlex(), nm);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> mcol;
  for (std::size_t c = 0; c < model.size(); ++c) mcol.emplace(model[c], static_cast<std::uint32_t>(c));

  std::vector<std::vector<Elem>> L(kNx, std::vector<Elem>(nw)), ell(kNx, std::vector<Elem>(kNy));
  for (std::size_t j = 0; j < kNx; ++j) {
    for (std::size_t k = 0; k < nw; ++k) L[j][k] = F.from_rational(jd.arrangement.A(j, k));
    for (std::size_t i = 0; i < kNy; ++i) ell[j][i] = jd.b(i, j);
  }
  RowEchelon<Field> ech(F, model.size());
  if (p >= 1) {
    for (const auto& a : monomials_of_degree(0, nw, p - 1))
      for (const auto& b : monomials_of_degree(nw, nm, p - 1))
        for (std::size_t j = 0; j < kNx; ++j) {
          typename RowEchelon<Field>::SparseRow row;
          for (std::size_t k = 0; k < nw; ++k)
            for (std::size_t i = 0; i < kNy; ++i) {
              Elem c = L[j][k] * ell[j][i];
              if (c.is_zero()) continue;
              row.emplace_back(mcol.at(a * b * Monomial::var(k) * Monomial::var(nw + i)), c);
            }
          ech.add_row(row);
        }
  }
  auto mred = ech.reduction_operator();
  const std::size_t d = ech.cols() - ech.rank();

  // image of every invariant 12-variable monomial in the model quotient
  auto amb = block_ambient<Field>(p, 0);
  std::vector<std::vector<Elem>> pi(amb.size(), std::vector<Elem>(d, F.zero()));
  for (std::size_t c = 0; c < amb.size(); ++c) {
    std::unordered_map<Monomial, Elem, MonomialHash> acc{{Monomial(), F.one()}};
    for (std::size_t j = 0; j < kNx; ++j)
      for (int e = 0; e < amb[c][j] / 2; ++e) {
        std::unordered_map<Monomial, Elem, MonomialHash> next;
        for (const auto& [m, v] : acc)
          for (std::size_t k = 0; k < nw; ++k) {
            if (L[j][k].is_zero()) continue;
            auto [it, fresh] = next.try_emplace(m * Monomial::var(k), v * L[j][k]);
            if (!fresh) it->second += v * L[j][k];
          }
        acc = std::move(next);
      }
    Monomial ypart;
    for (std::size_t i = 0; i < kNy; ++i) ypart.set(nw + i, amb[c][kNx + i]);
    for (const auto& [m, v] : acc) {
      if (v.is_zero()) continue;
      const auto& r = mred[mcol.at(m * ypart)];
      for (std::size_t k = 0; k < d; ++k)
        if (!r[k].is_zero()) pi[c][k] += v * r[k];
    }
  }
  // basis: the smallest monomials with independent images
  RowEchelon<Field> pick(F, d);
  std::vector<std::size_t> chosen;
  for (std::size_t c = amb.size(); c-- > 0 && chosen.size() < d;) {
    typename RowEchelon<Field>::SparseRow row;
    for (std::size_t k = 0; k < d; ++k)
      if (!pi[c][k].is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), pi[c][k]);
    if (pick.add_row(row)) chosen.push_back(c);
  }
  if (chosen.size() != d) throw std::logic_error("graded_piece: quotient basis selection failed");
  std::sort(chosen.begin(), chosen.end());
  Matrix<Field> T(d, d, F);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) T(r, k) = pi[chosen[r]][k];
  auto Tinv = d ? solve_particular(T, Matrix<Field>::identity(d, F)) : std::optional<Matrix<Field>>(T);
  if (!Tinv) throw std::logic_error("graded_piece: singular basis transform");

  piece.relation_count = relation_polys(jd, p, 0).size();
  piece.relation_rank = amb.size() - d;
  piece.basis_columns = chosen;
  for (std::size_t c = 0; c < amb.size(); ++c) {
    typename GradedPiece<Field>::SparseVec sv;
    for (std::size_t k = 0; k < d; ++k) {
      Elem s = F.zero();
      for (std::size_t r = 0; r < d; ++r)
        if (!pi[c][r].is_zero()) s += pi[c][r] * (*Tinv)(r, k);
      if (!s.is_zero()) sv.emplace_back(static_cast<std::uint32_t>(k), s);
    }
    piece.reduction.push_back(std::move(sv));
    piece.column.emplace(amb[c], c);
    piece.ambient.push_back(amb[c]);
  }
}

}  // namespace detail

/// The piece R^(p) of bidegree (p,0), or its sign-invariant part.
template <class Field>
GradedPiece<Field> graded_piece(const JacobianData<Field>& jd, int p, bool invariant_only = true,
                                PieceMethod method = PieceMethod::Reduced) {
  if (p < 0 || p > 3) throw std::invalid_argument("graded_piece: level must be in 0..3");
  GradedPiece<Field> piece;
  piece.level = p;
  piece.invariant_only = invariant_only;
  piece.field = jd.field;
  piece.ring = jd.ring;
  if (invariant_only && method == PieceMethod::Reduced) {
    detail::build_reduced_invariant(piece, jd);
    return piece;
  }
  for (unsigned ch : detail::piece_characters(invariant_only)) detail::add_direct_block(piece, jd, ch);
  return piece;
}

/// Dimensions of bidegree (p,0) character blocks, keyed by character; the
/// direct elimination without storing reduction data.
template <class Field>
std::map<unsigned, std::size_t> character_dims(const JacobianData<Field>& jd, int p) {
  std::map<unsigned, std::size_t> out;
  for (unsigned ch = 0; ch < 256; ++ch) {
    auto amb = detail::block_ambient<Field>(p, ch);
    if (amb.empty()) continue;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> local;
    for (std::size_t c = 0; c < amb.size(); ++c) local.emplace(amb[c], static_cast<std::uint32_t>(c));
    RowEchelon<Field> ech(jd.field, amb.size());
    for (const auto& r : relation_polys(jd, p, ch)) {
      typename RowEchelon<Field>::SparseRow row;
      for (const auto& t : r.terms()) row.emplace_back(local.at(t.mono), t.coef);
      ech.add_row(row);
      if (ech.full()) break;
    }
    out[ch] = amb.size() - ech.rank();
  }
  return out;
}

/// dim R^(p) for p = 0..3, invariant part or the whole piece.
template <class Field>
std::array<std::size_t, 4> hodge_dims(const JacobianData<Field>& jd, bool invariant_only) {
  std::array<std::size_t, 4> d{};
  for (int p = 0; p <= 3; ++p) {
    if (invariant_only) {
      d[p] = graded_piece(jd, p, true).dim();
    } else {
      for (const auto& [ch, n] : character_dims(jd, p)) d[p] += n;
    }
  }
  return d;
}

}  // namespace octic

#endif  // OCTIC_IVHS_GRADED_PIECE_HPP
