#pragma once

#include <optional>
#include <vector>

#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/permutation.hpp"
#include "liesym/poly.hpp"

namespace liesym {

/// Generator relabeling x_i -> x_{pi(i)}, renormalized.  Satisfies
/// act(pi o sigma, e) = act(pi, act(sigma, e)).
MetabelianElement act(const Permutation& pi, const MetabelianElement& e);
FreeLieElement act(const Permutation& pi, const FreeLieElement& e);
CommPoly act(const Permutation& pi, const CommPoly& p);

inline int element_rank(const MetabelianElement& e) { return e.spec().rank; }
inline int element_rank(const FreeLieElement& e) { return e.rank(); }
inline int element_rank(const CommPoly& p) { return p.rank(); }

/// Verdict of a symmetry or preservation check.  On failure carries the
/// permutation that moved the element and the nonzero difference pi.e - e;
/// preservation checks additionally carry the input that broke and its image.
template <class E>
struct SymmetricWitness {
  bool ok = true;
  long long checks = 0;
  std::optional<Permutation> perm;
  std::optional<E> difference;
  std::optional<E> failing_input;
  std::optional<E> failing_image;
};

/// Invariance under the adjacent transpositions (i, i+1); they generate S_n,
/// so this is full S_n invariance.
template <class E>
SymmetricWitness<E> is_symmetric(const E& e) {
  SymmetricWitness<E> w;
  for (const auto& tau : Permutation::adjacent_transpositions(element_rank(e))) {
    ++w.checks;
    E moved = act(tau, e);
    if (moved != e) {
      w.ok = false;
      w.perm = tau;
      w.difference = moved - e;
      return w;
    }
  }
  return w;
}

/// Same verdict via all n! permutations; exponential, for cross-checking.
template <class E>
SymmetricWitness<E> is_symmetric_full(const E& e) {
  SymmetricWitness<E> w;
  for (const auto& pi : Permutation::all(element_rank(e))) {
    ++w.checks;
    E moved = act(pi, e);
    if (moved != e) {
      w.ok = false;
      w.perm = pi;
      w.difference = moved - e;
      return w;
    }
  }
  return w;
}

/// (1/n!) sum over S_n of pi.e; projects onto the symmetric subspace.
template <class E>
E reynolds(const E& e) {
  const int n = element_rank(e);
  std::optional<E> acc;
  long long count = 0;
  for (const auto& pi : Permutation::all(n)) {
    ++count;
    E term = act(pi, e);
    if (acc)
      *acc += term;
    else
      acc = std::move(term);
  }
  *acc *= Rational(1, count);
  return *acc;
}

/// Basis of the S_n-fixed subspace of the degree-d slice: exact nullspace of
/// the stacked act(tau) - id matrices over basis(spec, d).  Vectors come out
/// integral and primitive, so the result is canonical.
std::vector<MetabelianElement> symmetric_basis(const AlgebraSpec& spec, int d);

/// Fixed subspace of the degree-d slice of the free algebra, expanded over
/// Lyndon-basis coordinates.
std::vector<FreeLieElement> symmetric_basis_free(int rank, int d);

}  // namespace liesym
