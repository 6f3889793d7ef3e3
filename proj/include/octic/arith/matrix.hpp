#ifndef OCTIC_ARITH_MATRIX_HPP
#define OCTIC_ARITH_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "octic/arith/field.hpp"

namespace octic {

/// Dense row-major matrix over an exact field.
template <class Field>
class Matrix {
 public:
  using Elem = typename Field::Elem;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field{})
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, field.zero()) {}

  static Matrix identity(std::size_t n, Field field = Field{}) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from nested integer rows.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, Field field = Field{}) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
  }
  std::vector<Elem> col(std::size_t j) const {
    std::vector<Elem> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Sub-matrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size(), field_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    check_field(x, y);
    Matrix r(x.rows_, y.cols_, x.field_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Elem& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in sum");
    check_field(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in difference");
    check_field(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x) {
    for (auto& e : x.a_) e = -e;
    return x;
  }
  friend Matrix operator*(const Elem& s, Matrix x) {
    for (auto& e : x.a_) e *= s;
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "\n" : "") << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "]";
    }
    return os.str();
  }

 private:
  static void check_field(const Matrix& x, const Matrix& y) {
    if (!(x.field_ == y.field_)) throw std::invalid_argument("Matrix: mixed fields");
  }

  std::size_t rows_ = 0, cols_ = 0;
  Field field_{};
  std::vector<Elem> a_;
};
using QMatrix = Matrix<QField>;

template <class Field>
struct RrefResult {
  Matrix<Field> rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are the first nonzero entries found
/// scanning columns left to right, rows top to bottom.
template <class Field>
RrefResult<Field> rref(Matrix<Field> m) {
  using Elem = typename Field::Elem;
  RrefResult<Field> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Elem inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Elem f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.rref = std::move(m);
  return res;
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return rref(m).rank;
}

/// Basis of the right kernel, one column per free variable.
template <class Field>
Matrix<Field> nullspace(const Matrix<Field>& m) {
  auto rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<Field> basis(m.cols(), free.size(), f);
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i) basis(rr.pivots[i], k) = -rr.rref(i, free[k]);
  }
  return basis;
}

/// Exact determinant. Over Q uses fraction-free Bareiss elimination on the
/// integer matrix obtained by clearing row denominators.
template <class Field>
typename Field::Elem det(const Matrix<Field>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  const Field& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return f.one();
  if constexpr (is_rational_field_v<Field>) {
    std::vector<mpz_class> a(n * n);
    mpq_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class l(1);
      for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
      scale /= l;
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class v = m(i, j).value() * l;
        a[i * n + j] = v.get_num();
      }
    }
    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k * n + k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return f.zero();
        for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
          mpz_divexact(a[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        }
      prev = a[k * n + k];
    }
    mpq_class d(a[n * n - 1] * sign);
    d *= scale;
    return Rational(d);
  } else {
    Matrix<Field> a = m;
    auto d = f.one();
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return f.zero();
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
        d = -d;
      }
      d *= a(k, k);
      auto inv = a(k, k).inverse();
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k).is_zero()) continue;
        auto g = a(i, k) * inv;
        for (std::size_t j = k; j < n; ++j) a(i, j) -= g * a(k, j);
      }
    }
    return d;
  }
}

/// One solution X of m * X = rhs with all free variables zero, or nullopt
/// when the system is inconsistent.
template <class Field>
std::optional<Matrix<Field>> solve_particular(const Matrix<Field>& m, const Matrix<Field>& rhs) {
  if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_particular: shape mismatch");
  if (!(m.field() == rhs.field())) throw std::invalid_argument("solve_particular: mixed fields");
  Matrix<Field> aug(m.rows(), m.cols() + rhs.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
  }
  // Eliminate only over the coefficient columns.
  auto rr = rref(aug);
  std::size_t coef_rank = 0;
  for (auto p : rr.pivots)
    if (p < m.cols()) ++coef_rank;
  if (coef_rank != rr.rank) return std::nullopt;
  Matrix<Field> x(m.cols(), rhs.cols(), m.field());
  for (std::size_t i = 0; i < coef_rank; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(rr.pivots[i], j) = rr.rref(i, m.cols() + j);
  return x;
}

}  // namespace octic

#endif  // OCTIC_ARITH_MATRIX_HPP
