#pragma once

#include <string>
#include <vector>

namespace liesym {

/// A bijection of {1..n}, stored in one-line notation: images()[i-1] = pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition (i j) in S_n.
  static Permutation transposition(int n, int i, int j);
  /// tau_i = (i, i+1) for i = 1..n-1; these generate S_n.
  static std::vector<Permutation> adjacent_transpositions(int n);
  /// All n! permutations, lexicographic in one-line notation.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(img_.size()); }
  /// Image of i (1-based).
  int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }

  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  const std::vector<int>& images() const { return img_; }

  /// One-line notation, e.g. "(2 1 3)".
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return a.img_ != b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace liesym
