#include "liesym/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "liesym/errors.hpp"

namespace liesym {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  if (n == 0) throw DomainError("empty permutation");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw DomainError("not a bijection of {1.." + std::to_string(n) + "}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[static_cast<size_t>(i) - 1], p.img_[static_cast<size_t>(j) - 1]);
  return p;
}

std::vector<Permutation> Permutation::adjacent_transpositions(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int i = 1; i < n; ++i) out.push_back(transposition(n, i, i + 1));
  return out;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw RankMismatchError("composing permutations of different size");
  std::vector<int> img(img_.size());
  for (int i = 1; i <= size(); ++i)
    img[static_cast<size_t>(i) - 1] = (*this)(other(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= size(); ++i) img[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i]);
  }
  s += ')';
  return s;
}

}  // namespace liesym
