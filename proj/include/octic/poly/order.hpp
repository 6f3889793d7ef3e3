#ifndef OCTIC_POLY_ORDER_HPP
#define OCTIC_POLY_ORDER_HPP

#include <cstddef>
#include <string>

#include "octic/poly/monomial.hpp"

namespace octic {

/// Monomial order: graded reverse lex, lex, or a two-block elimination order
/// (grevlex on the first k variables, ties broken by grevlex on the rest).
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_order(std::size_t k) { return {Kind::Block, k}; }

  /// Three-way comparison in a ring of n variables: >0 when a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t n) const {
    switch (kind) {
      case Kind::Lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Grevlex:
        return grevlex_range(a, b, 0, n);
      case Kind::Block: {
        int c = grevlex_range(a, b, 0, block);
        if (c != 0) return c;
        return grevlex_range(a, b, block, n);
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::Lex: return "lex";
      case Kind::Grevlex: return "grevlex";
      case Kind::Block: return "block(" + std::to_string(block) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::Block || a.block == b.block);
  }

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = a.degree_in(lo, hi), db = b.degree_in(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace octic

#endif  // OCTIC_POLY_ORDER_HPP
