#pragma once

#include <map>
#include <vector>

#include "liesym/algebra_spec.hpp"
#include "liesym/permutation.hpp"
#include "liesym/rational.hpp"

namespace liesym {

/// Basis monomial [x_{k1},x_{k2}]x_{k3}...x_{kl} of the commutator ideal,
/// in normal shape: k1 > k2 <= k3 <= ... <= kl.  The tail is kept sorted.
struct BahturinMonomial {
  int k1 = 2;
  int k2 = 1;
  std::vector<int> tail;

  int degree() const { return 2 + static_cast<int>(tail.size()); }
  bool well_formed(int rank) const;

  // (degree, head, tail) lexicographic; total order on basis monomials.
  friend bool operator<(const BahturinMonomial& a, const BahturinMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.k1 != b.k1) return a.k1 < b.k1;
    if (a.k2 != b.k2) return a.k2 < b.k2;
    return a.tail < b.tail;
  }
  friend bool operator==(const BahturinMonomial& a, const BahturinMonomial& b) {
    return a.k1 == b.k1 && a.k2 == b.k2 && a.tail == b.tail;
  }
};

class CommPoly;

/// Element of F_n or L_{n,c}: a linear part sum c_i x_i plus a module part
/// supported on Bahturin monomials.  All arithmetic keeps both parts reduced
/// (no zero coefficients) and respects the ambient degree cap.
class MetabelianElement {
 public:
  explicit MetabelianElement(const AlgebraSpec& spec) : spec_(spec) {}

  static MetabelianElement zero(const AlgebraSpec& spec) { return MetabelianElement(spec); }
  static MetabelianElement generator(const AlgebraSpec& spec, int i);
  static MetabelianElement monomial(const AlgebraSpec& spec, const BahturinMonomial& m,
                                    const Rational& c = Rational(1));

  const AlgebraSpec& spec() const { return spec_; }
  bool is_zero() const { return linear_.empty() && comm_.empty(); }
  bool in_commutator_ideal() const { return linear_.empty(); }

  /// Largest degree with a nonzero term; 0 for the zero element.
  int max_degree() const;
  Rational linear_coefficient(int i) const;
  Rational coefficient(const BahturinMonomial& m) const;
  const std::map<int, Rational>& linear_terms() const { return linear_; }
  const std::map<BahturinMonomial, Rational>& comm_terms() const { return comm_; }

  MetabelianElement& operator+=(const MetabelianElement& o);
  MetabelianElement& operator-=(const MetabelianElement& o);
  MetabelianElement& operator*=(const Rational& c);
  friend MetabelianElement operator+(MetabelianElement a, const MetabelianElement& b) {
    return a += b;
  }
  friend MetabelianElement operator-(MetabelianElement a, const MetabelianElement& b) {
    return a -= b;
  }
  friend MetabelianElement operator*(const Rational& c, MetabelianElement a) { return a *= c; }
  MetabelianElement operator-() const;
  friend bool operator==(const MetabelianElement& a, const MetabelianElement& b) {
    return a.spec_ == b.spec_ && a.linear_ == b.linear_ && a.comm_ == b.comm_;
  }
  friend bool operator!=(const MetabelianElement& a, const MetabelianElement& b) {
    return !(a == b);
  }

  /// Homogeneous component of the given degree (generators have degree 1).
  MetabelianElement degree_slice(int d) const;
  /// Drops every term of degree > maxdeg.
  MetabelianElement truncated(int maxdeg) const;
  /// Substitutes x_i -> x_{pi(i)} and renormalizes.
  MetabelianElement relabeled(const Permutation& pi) const;
  /// Reinterprets the element under another spec (renormalizing, so a cap
  /// may drop terms).  Rank must match.
  MetabelianElement converted(const AlgebraSpec& target) const;

  void add_linear(int i, const Rational& c);
  void add_monomial(const BahturinMonomial& m, const Rational& c);

 private:
  AlgebraSpec spec_;
  std::map<int, Rational> linear_;
  std::map<BahturinMonomial, Rational> comm_;
};

/// Rewrites [x_a,x_b]x_{t1}...x_{tk} (tail in any order) into the basis.
/// Inside the commutator ideal the Jacobi identity gives
///   [x_a,x_b]x_m = [x_a,x_m]x_b + [x_m,x_b]x_a,
/// which strictly decreases the second head index, so the recursion ends.
MetabelianElement normalize_monomial(int a, int b, std::vector<int> tail,
                                     const AlgebraSpec& spec);

MetabelianElement bracket(const MetabelianElement& u, const MetabelianElement& v);

/// Action of the polynomial algebra K[x_1..x_n] on the commutator ideal:
/// v * x_i means [..[v,x_i]..].  Rejects elements with a linear part.
MetabelianElement module_act(const MetabelianElement& v, const CommPoly& p);

std::vector<BahturinMonomial> basis_monomials(const AlgebraSpec& spec, int d);
/// Homogeneous basis of degree d: generators for d = 1, Bahturin monomials
/// for d >= 2, empty above the degree cap.
std::vector<MetabelianElement> basis(const AlgebraSpec& spec, int d);

}  // namespace liesym
