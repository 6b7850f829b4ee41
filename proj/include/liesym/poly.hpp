#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liesym/permutation.hpp"
#include "liesym/rational.hpp"

namespace liesym {

/// Exponents of a commutative monomial x_1^{e_1}...x_n^{e_n}.
using ExponentVector = std::vector<uint32_t>;

inline int total_degree(const ExponentVector& e) {
  int d = 0;
  for (uint32_t x : e) d += static_cast<int>(x);
  return d;
}

/// Graded lexicographic order: by total degree, then lexicographic on exponents.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse commutative polynomial in x_1..x_n over Rational.
/// Invariant: no stored coefficient is zero; all exponent vectors have length rank.
class CommPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

  explicit CommPoly(int rank);

  static CommPoly zero(int rank) { return CommPoly(rank); }
  static CommPoly constant(int rank, const Rational& c);
  static CommPoly one(int rank) { return constant(rank, Rational(1)); }
  /// The variable x_i (1-based).
  static CommPoly variable(int rank, int i);
  static CommPoly monomial(int rank, ExponentVector e, const Rational& c);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree, -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Rational& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const Rational& c, const CommPoly& p);

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

  /// Substitution x_i -> x_{pi(i)}: permutes each exponent vector by pi.
  CommPoly permuted(const Permutation& pi) const;

  /// Drops all terms of total degree > maxdeg.
  CommPoly truncated_above(int maxdeg) const;

  /// Exact quotient this/divisor, or nullopt when the division does not come out
  /// exact. Leading-term division in grlex order. Throws on a zero divisor.
  std::optional<CommPoly> divide_exact(const CommPoly& divisor) const;

  void add_term(const ExponentVector& e, const Rational& c);

 private:
  int rank_;
  TermMap terms_;
};

}  // namespace liesym
