#ifndef OCTIC_ARITH_FIELD_HPP
#define OCTIC_ARITH_FIELD_HPP

// Exact coefficient fields: the rationals (GMP backed) and prime fields F_p.
//
// A field is described by a small descriptor type (QField, FpField) whose
// nested Elem type is a regular value type with the usual arithmetic
// operators. Generic algorithms are templated on the descriptor.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace octic {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& num) : v_(num) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optional sign, decimal digits only).
  static Rational parse(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    mpz_class num, den(1);
    auto bad = [&] {
      throw std::invalid_argument("Rational: cannot parse '" + str + "'");
    };
    auto int_ok = [](const std::string& t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    std::string a = str.substr(0, slash);
    if (!a.empty() && a[0] == '+') a = a.substr(1);
    if (!int_ok(a) || num.set_str(a, 10) != 0) bad();
    if (slash != std::string::npos) {
      std::string b = str.substr(slash + 1);
      if (!int_ok(b) || b[0] == '-' || b[0] == '+' || den.set_str(b, 10) != 0) bad();
      if (den == 0) throw std::domain_error("Rational: zero denominator");
    }
    return Rational(num, den);
  }

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.v_ = -a.v_; return a; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(v_.get_den(), v_.get_num()));
  }

 private:
  mpq_class v_;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Residue modulo a prime below 2^31. Every element carries its modulus;
/// combining elements of different moduli throws.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const { return std::to_string(v_); }

  Fp& operator+=(const Fp& o) {
    check(o);
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(Fp a) {
    if (a.v_ != 0) a.v_ = a.p_ - a.v_;
    return a;
  }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp& r) { return os << r.v_; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m; a = m; m = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
  }

 private:
  void check(const Fp& o) const {
    if (o.p_ != p_) throw std::invalid_argument("Fp: mixed moduli");
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

/// The field of rational numbers.
struct QField {
  using Elem = Rational;
  Elem zero() const { return Rational(0L); }
  Elem one() const { return Rational(1L); }
  Elem from_int(long v) const { return Rational(v); }
  Elem from_rational(const Rational& q) const { return q; }
  Elem parse(std::string_view s) const { return Rational::parse(s); }
  std::string name() const { return "Q"; }
  std::uint32_t characteristic() const { return 0; }
  friend bool operator==(const QField&, const QField&) { return true; }
};

/// The prime field F_p.
struct FpField {
  std::uint32_t p = 32003;

  FpField() = default;
  explicit FpField(std::uint32_t prime) : p(prime) {
    if (!is_prime(prime) || prime >= (1u << 31))
      throw std::invalid_argument("FpField: modulus must be a prime below 2^31");
  }
  using Elem = Fp;
  Elem zero() const { return Fp(0, p); }
  Elem one() const { return Fp(1, p); }
  Elem from_int(long v) const { return Fp(v, p); }
  /// Reduces a rational; throws if p divides the denominator.
  Elem from_rational(const Rational& q) const {
    mpz_class n = q.num() % p, d = q.den() % p;
    if (d == 0) throw std::domain_error("FpField: denominator divisible by p");
    return Fp(n.get_si(), p) / Fp(d.get_si(), p);
  }
  Elem parse(std::string_view s) const { return from_rational(Rational::parse(s)); }
  std::string name() const { return "fp:" + std::to_string(p); }
  std::uint32_t characteristic() const { return p; }
  friend bool operator==(const FpField& a, const FpField& b) { return a.p == b.p; }
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 31013;

template <class F>
inline constexpr bool is_rational_field_v = std::is_same_v<F, QField>;

}  // namespace octic

#endif  // OCTIC_ARITH_FIELD_HPP
