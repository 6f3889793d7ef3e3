#ifndef OCTIC_IVHS_ECHELON_HPP
#define OCTIC_IVHS_ECHELON_HPP

// Incremental row echelon form over a field for the relation matrices of the
// graded pieces. Columns are indexed 0..n-1 with column 0 the largest
// monomial; the pivot of a row is its smallest column index, so the columns
// left without a pivot are the smallest monomials.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace octic {

template <class Field>
class RowEchelon {
 public:
  using Elem = typename Field::Elem;
  using SparseRow = std::vector<std::pair<std::uint32_t, Elem>>;

  RowEchelon(Field field, std::size_t ncols)
      : field_(field), n_(ncols), pivot_row_(ncols, kNone), acc_(ncols, field.zero()), live_(ncols, 0) {}

  std::size_t cols() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] != kNone; }

  /// Reduces `row` against the current pivots; keeps it when it survives.
  bool add_row(const SparseRow& row) {
    if (full()) return false;
    std::size_t lo = n_;
    for (const auto& [c, v] : row) {
      if (v.is_zero()) continue;
      if (!live_[c]) {
        live_[c] = 1;
        acc_[c] = v;
      } else {
        acc_[c] += v;
      }
      if (c < lo) lo = c;
    }
    SparseRow kept;
    for (std::size_t c = lo; c < n_; ++c) {
      if (!live_[c]) continue;
      if (acc_[c].is_zero()) {
        live_[c] = 0;
        continue;
      }
      if (kept.empty() && pivot_row_[c] != kNone) {
        Elem f = acc_[c];
        for (const auto& [cc, vv] : rows_[pivot_row_[c]]) {
          if (!live_[cc]) {
            live_[cc] = 1;
            acc_[cc] = -(f * vv);
          } else {
            acc_[cc] -= f * vv;
          }
        }
        live_[c] = 0;
        continue;
      }
      kept.emplace_back(static_cast<std::uint32_t>(c), acc_[c]);
      live_[c] = 0;
    }
    if (kept.empty()) return false;
    Elem inv = kept.front().second.inverse();
    for (auto& e : kept) e.second *= inv;
    pivot_row_[kept.front().first] = rows_.size();
    rows_.push_back(std::move(kept));
    return true;
  }

  /// Non-pivot columns, ascending.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] == kNone) out.push_back(c);
    return out;
  }

  /// For each column c, the coordinates of [e_c] in the quotient
  /// basis given by the free columns (in ascending order). Pivot columns are
  /// resolved from the largest index down, so every tail entry is final when
  /// it is used.
  std::vector<std::vector<Elem>> reduction_operator() const {
    auto freec = free_columns();
    std::vector<std::size_t> pos(n_, kNone);
    for (std::size_t k = 0; k < freec.size(); ++k) pos[freec[k]] = k;
    std::vector<std::vector<Elem>> red(n_, std::vector<Elem>(freec.size(), field_.zero()));
    for (std::size_t c = n_; c-- > 0;) {
      if (pivot_row_[c] == kNone) {
        red[c][pos[c]] = field_.one();
        continue;
      }
      auto& out = red[c];
      const auto& row = rows_[pivot_row_[c]];
      for (std::size_t t = 1; t < row.size(); ++t) {
        const auto& [cc, v] = row[t];
        const auto& src = red[cc];
        for (std::size_t k = 0; k < out.size(); ++k)
          if (!src[k].is_zero()) out[k] -= v * src[k];
      }
    }
    return red;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  Field field_;
  std::size_t n_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Elem> acc_;
  std::vector<char> live_;
};

}  // namespace octic

#endif  // OCTIC_IVHS_ECHELON_HPP
