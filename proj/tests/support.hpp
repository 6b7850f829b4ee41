#pragma once

// Shared helpers for the test binaries: a deterministic generator, the
// necklace-count oracle, and random bracket trees evaluated through two
// independent routes.

#include <utility>
#include <vector>

#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/rational.hpp"

namespace testsupport {

// splitmix64, seeded per test so failures reproduce exactly.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : state_(seed) {}

  unsigned long long next() {
    unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }

  liesym::Rational coeff() { return liesym::Rational(range(-3, 3)); }

 private:
  unsigned long long state_;
};

inline int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

/// Number of degree-d Lyndon words over n letters, via necklace counting:
/// (1/d) sum_{e|d} mobius(e) n^{d/e}.  Independent of the word generator.
inline long long witt_dimension(int n, int d) {
  long long s = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) s += mobius(e) * ipow(n, d / e);
  return s / d;
}

/// One bracket expression with exactly `leaves` generator leaves, evaluated
/// simultaneously in the free algebra and in the metabelian quotient.  The
/// two routes share no normalization code, so agreement after
/// project_metabelian is an oracle check.
inline std::pair<liesym::FreeLieElement, liesym::MetabelianElement> random_tree(
    Rng& rng, const liesym::AlgebraSpec& spec, int leaves) {
  if (leaves == 1) {
    const int i = rng.range(1, spec.rank);
    return {liesym::FreeLieElement::generator(spec.rank, i),
            liesym::MetabelianElement::generator(spec, i)};
  }
  const int left = rng.range(1, leaves - 1);
  auto [fa, ma] = random_tree(rng, spec, left);
  auto [fb, mb] = random_tree(rng, spec, leaves - left);
  return {free_bracket(fa, fb), bracket(ma, mb)};
}

inline liesym::MetabelianElement generator_sum(const liesym::AlgebraSpec& spec) {
  auto v = liesym::MetabelianElement::zero(spec);
  for (int i = 1; i <= spec.rank; ++i) v += liesym::MetabelianElement::generator(spec, i);
  return v;
}

/// Random combination of the degree-1..dmax slices.
inline liesym::MetabelianElement random_element(Rng& rng, const liesym::AlgebraSpec& spec,
                                                int dmax) {
  auto e = liesym::MetabelianElement::zero(spec);
  for (int d = 1; d <= dmax; ++d)
    for (const auto& b : liesym::basis(spec, d)) {
      const auto c = rng.coeff();
      if (!c.is_zero()) e += c * b;
    }
  return e;
}

/// Random free element as a combination of Lyndon-basis brackets.
inline liesym::FreeLieElement random_free_element(Rng& rng, int rank, int dmax) {
  auto e = liesym::FreeLieElement::zero(rank);
  for (int d = 1; d <= dmax; ++d)
    for (const auto& w : liesym::lyndon_words(rank, d)) {
      const auto c = rng.coeff();
      if (!c.is_zero()) e += c * liesym::dynkin_bracket(w, rank);
    }
  return e;
}

}  // namespace testsupport
