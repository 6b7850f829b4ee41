#pragma once

#include <vector>

#include "liesym/free_lie.hpp"
#include "liesym/linalg.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/poly.hpp"
#include "liesym/symmetry.hpp"

namespace liesym {

/// Endomorphism of F_n or L_{n,c}, stored by generator images.  Application
/// recomputes everything through normalization; nothing is cached.
class Endomorphism {
 public:
  Endomorphism(AlgebraSpec spec, std::vector<MetabelianElement> images);

  static Endomorphism identity(const AlgebraSpec& spec);
  /// x_i -> sum_j m[i-1][j-1] x_j.
  static Endomorphism from_linear(const AlgebraSpec& spec, const QMatrix& m);

  const AlgebraSpec& spec() const { return spec_; }
  const std::vector<MetabelianElement>& images() const { return images_; }

  MetabelianElement apply(const MetabelianElement& e) const;
  /// this after sigma: result(x_i) = this(sigma(x_i)).
  Endomorphism compose(const Endomorphism& sigma) const;
  bool is_identity() const;
  /// Degree-1 coefficient matrix; row i-1 holds the linear part of x_i's image.
  QMatrix linear_part() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.spec_ == b.spec_ && a.images_ == b.images_;
  }
  friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

 private:
  AlgebraSpec spec_;
  std::vector<MetabelianElement> images_;
};

/// psi_u = 1 + ad u for u in the commutator ideal: x_i -> x_i + [x_i, u].
/// An automorphism of F_n for every such u, with psi_u^{-1} = psi_{-u}.
Endomorphism inner_psi(const MetabelianElement& u);

/// eps_u = exp(ad u) truncated by nilpotency:
/// x_i -> sum_{k=0}^{c-1} (1/k!) (ad u)^k x_i.  Identity when u lies in the
/// top graded piece (brackets with u then exceed the class).
Endomorphism inner_eps(const MetabelianElement& u);

/// x1 -> a x1 + b x2, x2 -> b x1 + a x2.
QMatrix xi_matrix(const Rational& a, const Rational& b);
/// The stated inverse (1/(a^2-b^2)) (a x1 - b x2), (1/(a^2-b^2)) (-b x1 + a x2);
/// throws NonInvertibleError when a^2 = b^2.
QMatrix xi_inverse_matrix(const Rational& a, const Rational& b);
/// xi(a,b) as an endomorphism of the given rank-2 metabelian or nilpotent
/// algebra; throws NonInvertibleError when a^2 = b^2.
Endomorphism xi_endomorphism(const AlgebraSpec& spec, const Rational& a, const Rational& b);

/// x -> x + [x,y] f(x,y), y -> y - [x,y] f(y,x) on L_{2,c}; only the part of
/// f with degree <= c-2 contributes.
Endomorphism phi_f(const CommPoly& f, int c);
/// The same shape with an independent g: x -> x + [x,y] f, y -> y + [x,y] g.
Endomorphism phi_pair(const AlgebraSpec& spec, const CommPoly& f, const CommPoly& g);

/// Linear endomorphism of the free algebra L_n.  Substitution beyond linear
/// images is deliberately not offered for free-Lie elements; rank 2 needs
/// nothing more (each automorphism of L_2 is linear), and general nonlinear
/// substitution in L_n is outside this toolkit's scope.
class LinearEndo {
 public:
  LinearEndo(int rank, QMatrix m);

  static LinearEndo identity(int rank);

  int rank() const { return rank_; }
  const QMatrix& matrix() const { return m_; }

  FreeLieElement apply(const FreeLieElement& e) const;
  LinearEndo compose(const LinearEndo& sigma) const;
  /// Throws NonInvertibleError on a singular matrix.
  LinearEndo inverse() const;
  bool is_identity() const;

  friend bool operator==(const LinearEndo& a, const LinearEndo& b) {
    return a.rank_ == b.rank_ && a.m_ == b.m_;
  }
  friend bool operator!=(const LinearEndo& a, const LinearEndo& b) { return !(a == b); }

 private:
  int rank_;
  QMatrix m_;
};

/// xi(a,b) on the free L_2; throws NonInvertibleError when a^2 = b^2.
LinearEndo linear_xi(const Rational& a, const Rational& b);

/// Checks apply(phi, s) for every s in the symmetric basis up to degree dmax
/// (capped by the class under a nilpotent spec).  The paranoid flag swaps in
/// the all-permutations symmetry test.
SymmetricWitness<MetabelianElement> preserves_symmetric(const Endomorphism& phi, int dmax,
                                                        bool paranoid = false);
SymmetricWitness<FreeLieElement> preserves_symmetric(const LinearEndo& phi, int dmax,
                                                     bool paranoid = false);

}  // namespace liesym
