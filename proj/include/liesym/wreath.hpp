#pragma once

#include <vector>

#include "liesym/metabelian.hpp"
#include "liesym/poly.hpp"

namespace liesym {

/// Element of the abelian wreath-product model W: a free K[x_1..x_n]-module
/// on a_1..a_n plus an abelian part spanned by b_1..b_n.  The generator x_i
/// maps to a_i + b_i, and W carries the Lie bracket
///   [(p, l), (q, m)] = (p * lin(m) - q * lin(l), 0),
/// where lin(l) = sum l_j x_j.  The span of the images of x_1..x_n is a free
/// metabelian algebra, which makes W an independent route to normal forms:
/// no Jacobi rewriting is involved, only polynomial arithmetic.
struct WreathElement {
  int rank = 0;
  std::vector<CommPoly> module;   // coefficient of a_i at index i-1
  std::vector<Rational> linear;   // coefficient of b_i at index i-1

  static WreathElement zero(int rank);
  bool is_zero() const;

  WreathElement& operator+=(const WreathElement& o);
  WreathElement& operator-=(const WreathElement& o);
  WreathElement& operator*=(const Rational& c);
  friend WreathElement operator+(WreathElement a, const WreathElement& b) { return a += b; }
  friend WreathElement operator-(WreathElement a, const WreathElement& b) { return a -= b; }
  friend WreathElement operator*(const Rational& c, WreathElement a) { return a *= c; }
  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.rank == b.rank && a.module == b.module && a.linear == b.linear;
  }
  friend bool operator!=(const WreathElement& a, const WreathElement& b) { return !(a == b); }
};

/// Image of x_i: a_i + b_i.
WreathElement wreath_generator(int rank, int i);

WreathElement wreath_bracket(const WreathElement& u, const WreathElement& v);

/// Image of a metabelian element under the embedding.  A basis monomial
/// [x_{k1},x_{k2}]x_T maps to a_{k1} x_{k2} x_T - a_{k2} x_{k1} x_T.
WreathElement wreath_embed(const MetabelianElement& e);

/// Inverts wreath_embed on the image of the algebra.  Works down from
/// a_n: that component is only touched by monomials with k1 = n, and the
/// smallest variable of each polynomial term recovers k2.  Throws when a
/// residual remains (the element was outside the embedded algebra).
MetabelianElement wreath_extract(const WreathElement& w, const AlgebraSpec& spec);

}  // namespace liesym
