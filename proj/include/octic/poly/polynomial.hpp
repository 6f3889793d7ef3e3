#ifndef OCTIC_POLY_POLYNOMIAL_HPP
#define OCTIC_POLY_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "octic/arith/field.hpp"
#include "octic/poly/monomial.hpp"
#include "octic/poly/order.hpp"

namespace octic {

/// Polynomial ring descriptor: coefficient field, variable names, order.
template <class Field>
struct Ring {
  Field field{};
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();

  Ring() = default;
  Ring(Field f, std::vector<std::string> names, MonomialOrder ord = MonomialOrder::grevlex())
      : field(f), vars(std::move(names)), order(ord) {
    if (vars.size() > kMaxVars) throw std::invalid_argument("Ring: too many variables");
  }

  std::size_t nvars() const { return vars.size(); }
  int compare(const Monomial& a, const Monomial& b) const { return order.compare(a, b, vars.size()); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    throw std::invalid_argument("Ring: unknown variable '" + name + "'");
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field == b.field && a.vars == b.vars && a.order == b.order;
  }
};

template <class Field>
using RingPtr = std::shared_ptr<const Ring<Field>>;

template <class Field>
RingPtr<Field> make_ring(Field f, std::vector<std::string> names,
                         MonomialOrder ord = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<Field>>(f, std::move(names), ord);
}

/// Variable names prefix1..prefixN.
inline std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n,
                                              std::size_t first = 1) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(first + i));
  return v;
}

template <class Field>
struct Term {
  Monomial mono;
  typename Field::Elem coef;
};

/// Sparse polynomial; terms are kept strictly descending in the ring order
/// with no zero coefficients.
template <class Field>
class Poly {
 public:
  using Elem = typename Field::Elem;
  using TermT = Term<Field>;

  Poly() = default;
  explicit Poly(RingPtr<Field> ring) : ring_(std::move(ring)) {}
  Poly(RingPtr<Field> ring, const Elem& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.push_back({Monomial(), c});
  }
  Poly(RingPtr<Field> ring, const Monomial& m, const Elem& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.push_back({m, c});
  }

  static Poly var(RingPtr<Field> ring, std::size_t i) {
    auto one = ring->field.one();
    return Poly(ring, Monomial::var(i), one);
  }
  static Poly constant(RingPtr<Field> ring, long c) {
    auto v = ring->field.from_int(c);
    return Poly(ring, v);
  }

  /// Builds from unsorted terms, combining duplicates.
  static Poly from_terms(RingPtr<Field> ring, std::vector<TermT> ts) {
    Poly p(ring);
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Monomial& lead_mono() const { return front().mono; }
  const Elem& lead_coef() const { return front().coef; }
  const TermT& lead_term() const { return front(); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  /// Degree in variable i (-1 for zero).
  int degree_in(std::size_t i) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono[i]);
    return d;
  }
  bool uses_var(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i] > 0) return true;
    return false;
  }

  Elem coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return ring_->field.zero();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Elem inv = lead_coef().inverse();
    for (auto& t : r.terms_) t.coef *= inv;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = combine(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = combine(*this, o, true); }
  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
  friend Poly operator-(Poly a) {
    for (auto& t : a.terms_) t.coef = -t.coef;
    return a;
  }
  friend Poly operator*(const Elem& c, Poly a) {
    if (c.is_zero()) return Poly(a.ring_);
    for (auto& t : a.terms_) t.coef *= c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coef);
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Monomial m = s.mono * t.mono;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, s.coef * t.coef);
        else
          it->second += s.coef * t.coef;
      }
    std::vector<TermT> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) ts.push_back({m, c});
    Poly r(a.ring_);
    r.terms_ = std::move(ts);
    r.sort_terms();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// this * c * m; order is preserved since monomial orders are multiplicative.
  Poly mul_term(const Monomial& m, const Elem& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
  }

  /// this - c * m * g, merged in one pass.
  Poly sub_mul_term(const Elem& c, const Monomial& m, const Poly& g) const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    const Ring<Field>& R = *ring_;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : R.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, -(c * g.terms_[j].coef)});
        ++j;
      } else {
        Elem v = terms_[i].coef - c * g.terms_[j].coef;
        if (!v.is_zero()) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Poly pow(unsigned e) const {
    Poly acc = constant(ring_, 1), base = *this;
    while (e) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  Poly partial_derivative(std::size_t var) const {
    std::vector<TermT> ts;
    for (const auto& t : terms_) {
      int e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      ts.push_back({m, t.coef * ring_->field.from_int(e)});
    }
    return from_terms(ring_, std::move(ts));
  }

  /// Homogeneous component of total degree d.
  Poly homogeneous_part(int d) const {
    Poly r(ring_);
    for (const auto& t : terms_)
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (point.size() != ring_->nvars()) throw std::invalid_argument("Poly::evaluate: arity");
    Elem acc = ring_->field.zero();
    for (const auto& t : terms_) {
      Elem v = t.coef;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Same terms in another ring with the same variable count (re-sorted).
  Poly in_ring(RingPtr<Field> other) const {
    if (other->nvars() != ring_->nvars() || !(other->field == ring_->field))
      throw std::invalid_argument("Poly::in_ring: incompatible ring");
    Poly r(other);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  /// Embeds into a ring with more variables (old variables keep their indices).
  Poly extend_to(RingPtr<Field> other) const {
    if (other->nvars() < ring_->nvars() || !(other->field == ring_->field))
      throw std::invalid_argument("Poly::extend_to: incompatible ring");
    Poly r(other);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  /// Maps coefficients into another field (e.g. Q -> F_p).
  template <class Field2, class Map>
  Poly<Field2> map_coefficients(RingPtr<Field2> target, Map&& f) const {
    std::vector<Term<Field2>> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.mono, f(t.coef)});
    return Poly<Field2>::from_terms(std::move(target), std::move(ts));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coef.str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono = mono_str(t.mono);
      if (mono.empty())
        os << c;
      else if (c == "1")
        os << mono;
      else
        os << c << "*" << mono;
    }
    return os.str();
  }

  std::string mono_str(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->vars[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Mutable access for algorithms that rebuild term lists in bulk.
  std::vector<TermT>& mutable_terms() { return terms_; }
  void set_ring(RingPtr<Field> r) { ring_ = std::move(r); }

  void sort_terms() {
    const Ring<Field>& R = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const TermT& x, const TermT& y) { return R.compare(x.mono, y.mono) > 0; });
  }

 private:
  const TermT& front() const {
    if (terms_.empty()) throw std::logic_error("Poly: leading term of zero polynomial");
    return terms_.front();
  }

  void normalize() {
    sort_terms();
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      Elem c = terms_[i].coef;
      while (j < terms_.size() && terms_[j].mono == terms_[i].mono) c += terms_[j++].coef;
      if (!c.is_zero()) out.push_back({terms_[i].mono, std::move(c)});
      i = j;
    }
    terms_ = std::move(out);
  }

  static void check_ring(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_))
      throw std::invalid_argument("Poly: ring mismatch");
  }

  static Poly combine(const Poly& a, const Poly& b, bool subtract) {
    check_ring(a, b);
    Poly r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    const Ring<Field>& R = *a.ring_;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp = i == a.size() ? -1 : j == b.size() ? 1 : R.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        Elem v = subtract ? a.terms_[i].coef - b.terms_[j].coef : a.terms_[i].coef + b.terms_[j].coef;
        if (!v.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<Field> ring_;
  std::vector<TermT> terms_;
};

/// Ring homomorphism sending variable i to images[i]; all images share one
/// target ring.
template <class Field>
Poly<Field> substitute_linear(const Poly<Field>& f, const std::vector<Poly<Field>>& images) {
  if (images.size() != f.ring()->nvars())
    throw std::invalid_argument("substitute_linear: need one image per variable");
  if (images.empty()) throw std::invalid_argument("substitute_linear: empty image list");
  const auto& target = images.front().ring();
  for (const auto& g : images)
    if (!(g.ring() == target || *g.ring() == *target))
      throw std::invalid_argument("substitute_linear: images live in different rings");
  // cache powers of each image
  std::vector<std::vector<Poly<Field>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Poly<Field>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly<Field>::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  std::unordered_map<Monomial, typename Field::Elem, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Poly<Field> prod(target, t.coef);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i)
      if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
    for (const auto& s : prod.terms()) {
      auto it = acc.find(s.mono);
      if (it == acc.end())
        acc.emplace(s.mono, s.coef);
      else
        it->second += s.coef;
    }
  }
  std::vector<Term<Field>> ts;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) ts.push_back({m, c});
  return Poly<Field>::from_terms(target, std::move(ts));
}

}  // namespace octic

#endif  // OCTIC_POLY_POLYNOMIAL_HPP
