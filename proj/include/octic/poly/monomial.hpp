#ifndef OCTIC_POLY_MONOMIAL_HPP
#define OCTIC_POLY_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace octic {

/// Upper bound on the number of ring variables.
inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector. Slots past the ring's variable count stay zero, so
/// monomials of one ring compare and hash consistently.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() { e_.fill(0); }
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    e_.fill(0);
    std::size_t i = 0;
    for (int v : exps) set(i++, v);
  }
  explicit Monomial(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    e_.fill(0);
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial var(std::size_t i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int v) {
    if (i >= kMaxVars) throw std::out_of_range("Monomial: variable index");
    if (v < 0 || v > 0xFFFF) throw std::invalid_argument("Monomial: exponent out of range");
    deg_ += v - e_[i];
    e_[i] = static_cast<Exp>(v);
  }
  int degree() const { return static_cast<int>(deg_); }
  bool is_one() const { return deg_ == 0; }

  /// Sum of exponents over variables [lo, hi).
  int degree_in(std::size_t lo, std::size_t hi) const {
    int s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += e_[i];
    return s;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      if (s > 0xFFFF) throw std::overflow_error("Monomial: exponent overflow");
      r.e_[i] = static_cast<Exp>(s);
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }
  /// Exact quotient; the caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<Exp>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ = 0;
    for (auto v : r.e_) r.deg_ += v;
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ = 0;
    for (auto v : r.e_) r.deg_ += v;
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::vector<int> exponents(std::size_t n) const {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = e_[i];
    return v;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

 private:
  std::array<Exp, kMaxVars> e_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace octic

#endif  // OCTIC_POLY_MONOMIAL_HPP
