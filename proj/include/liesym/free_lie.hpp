#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liesym/algebra_spec.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/permutation.hpp"
#include "liesym/rational.hpp"

namespace liesym {

/// Word in the free associative algebra; letters are generator indices.
using NCWord = std::vector<int>;

/// Graded order: length first, then lexicographic.
struct WordLess {
  bool operator()(const NCWord& a, const NCWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Homogeneous computations above this degree are rejected unless the caller
/// raises the cap; word counts grow as rank^degree.
inline constexpr int kFreeLieDegreeCap = 8;

/// Element of the free Lie algebra L_n, stored by its word-algebra expansion.
/// Values are built only from generators, linear combinations and
/// free_bracket, so membership in the Lie subalgebra holds by construction.
class FreeLieElement {
 public:
  explicit FreeLieElement(int rank);

  static FreeLieElement zero(int rank) { return FreeLieElement(rank); }
  static FreeLieElement generator(int rank, int i);

  int rank() const { return rank_; }
  const std::map<NCWord, Rational, WordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Length of the longest word; 0 for the zero element.
  int max_degree() const;
  Rational coefficient(const NCWord& w) const;
  FreeLieElement degree_slice(int d) const;

  FreeLieElement& operator+=(const FreeLieElement& o);
  FreeLieElement& operator-=(const FreeLieElement& o);
  FreeLieElement& operator*=(const Rational& c);
  friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) { return a += b; }
  friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b) { return a -= b; }
  friend FreeLieElement operator*(const Rational& c, FreeLieElement a) { return a *= c; }
  FreeLieElement operator-() const;
  friend bool operator==(const FreeLieElement& a, const FreeLieElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeLieElement& a, const FreeLieElement& b) {
    return !(a == b);
  }

  /// Relabels generators x_i -> x_{pi(i)} letterwise.
  FreeLieElement relabeled(const Permutation& pi) const;

 private:
  void add_word(const NCWord& w, const Rational& c);

  int rank_;
  std::map<NCWord, Rational, WordLess> terms_;

  friend FreeLieElement free_bracket(const FreeLieElement&, const FreeLieElement&, int);
  friend FreeLieElement apply_linear(const FreeLieElement&,
                                     const std::vector<std::vector<Rational>>&);
};

/// Commutator e1*e2 - e2*e1 in the word algebra.  Throws DegreeCapError when
/// the result degree would exceed max_degree.
FreeLieElement free_bracket(const FreeLieElement& e1, const FreeLieElement& e2,
                            int max_degree = kFreeLieDegreeCap);

/// Substitution x_i -> sum_j m[i-1][j-1] x_j, extended multiplicatively to
/// words.  A Lie endomorphism, so Lie elements stay Lie elements.
FreeLieElement apply_linear(const FreeLieElement& e,
                            const std::vector<std::vector<Rational>>& m);

/// True when w is strictly smaller than every proper suffix.
bool is_lyndon(const NCWord& w);

/// All Lyndon words of length d over {1..n}, lexicographic (Duval generation).
std::vector<NCWord> lyndon_words(int n, int d);

/// w = u.v with v the lexicographically least proper suffix (equivalently the
/// longest proper Lyndon suffix); both factors are Lyndon and u < v.
std::pair<NCWord, NCWord> standard_factorization(const NCWord& w);

/// Right-normed bracketing along the standard factorization.  The smallest
/// word of the expansion is w itself, with coefficient 1; this triangularity
/// is what lyndon_decompose eliminates against.
FreeLieElement dynkin_bracket(const NCWord& w, int rank);

/// Coordinates of e in the Lyndon basis: e = sum c_w dynkin_bracket(w).
/// A non-Lyndon leading word or a residual signals a non-Lie input.
std::map<NCWord, Rational, WordLess> lyndon_decompose(const FreeLieElement& e);

/// Quotient map onto F_n or L_{n,c} in Bahturin normal form.  Routed through
/// the wreath model (Lyndon coordinates, bracket trees evaluated in W, then
/// triangular inversion), so it shares no code with normalize_monomial and
/// can serve as its oracle.
MetabelianElement project_metabelian(const FreeLieElement& e, const AlgebraSpec& spec);

}  // namespace liesym
