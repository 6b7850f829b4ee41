#include "liesym/free_lie.hpp"

#include <algorithm>

#include "liesym/errors.hpp"
#include "liesym/wreath.hpp"

namespace liesym {

FreeLieElement::FreeLieElement(int rank) : rank_(rank) {
  if (rank < 2) throw DomainError("free Lie algebra rank must be >= 2");
}

FreeLieElement FreeLieElement::generator(int rank, int i) {
  FreeLieElement e(rank);
  if (i < 1 || i > rank) throw IndexError("generator index out of range");
  e.terms_.emplace(NCWord{i}, Rational(1));
  return e;
}

int FreeLieElement::max_degree() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

Rational FreeLieElement::coefficient(const NCWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreeLieElement FreeLieElement::degree_slice(int d) const {
  FreeLieElement r(rank_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == d) r.terms_.emplace(w, c);
  return r;
}

void FreeLieElement::add_word(const NCWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
  if (rank_ != o.rank_) throw RankMismatchError("free Lie elements of different rank");
  for (const auto& [w, c] : o.terms_) add_word(w, c);
  return *this;
}

FreeLieElement& FreeLieElement::operator-=(const FreeLieElement& o) {
  if (rank_ != o.rank_) throw RankMismatchError("free Lie elements of different rank");
  for (const auto& [w, c] : o.terms_) add_word(w, -c);
  return *this;
}

FreeLieElement& FreeLieElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreeLieElement FreeLieElement::operator-() const {
  FreeLieElement r = *this;
  return r *= Rational(-1);
}

FreeLieElement FreeLieElement::relabeled(const Permutation& pi) const {
  if (pi.size() != rank_) throw RankMismatchError("permutation size differs from rank");
  FreeLieElement r(rank_);
  for (const auto& [w, c] : terms_) {
    NCWord img;
    img.reserve(w.size());
    for (int letter : w) img.push_back(pi(letter));
    r.add_word(img, c);
  }
  return r;
}

FreeLieElement free_bracket(const FreeLieElement& e1, const FreeLieElement& e2,
                            int max_degree) {
  if (e1.rank_ != e2.rank_) throw RankMismatchError("free Lie elements of different rank");
  if (!e1.is_zero() && !e2.is_zero() && e1.max_degree() + e2.max_degree() > max_degree)
    throw DegreeCapError("bracket degree " +
                         std::to_string(e1.max_degree() + e2.max_degree()) +
                         " exceeds cap " + std::to_string(max_degree));
  FreeLieElement r(e1.rank_);
  for (const auto& [wa, ca] : e1.terms_)
    for (const auto& [wb, cb] : e2.terms_) {
      const Rational c = ca * cb;
      NCWord ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      NCWord ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      r.add_word(ab, c);
      r.add_word(ba, -c);
    }
  return r;
}

FreeLieElement apply_linear(const FreeLieElement& e,
                            const std::vector<std::vector<Rational>>& m) {
  const int n = e.rank();
  if (static_cast<int>(m.size()) != n) throw RankMismatchError("matrix size differs from rank");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw RankMismatchError("matrix size differs from rank");
  FreeLieElement r(n);
  for (const auto& [w, c] : e.terms()) {
    std::map<NCWord, Rational> partial{{NCWord{}, c}};
    for (int letter : w) {
      std::map<NCWord, Rational> next;
      for (const auto& [prefix, pc] : partial)
        for (int j = 1; j <= n; ++j) {
          const Rational& mc = m[letter - 1][j - 1];
          if (mc.is_zero()) continue;
          NCWord ext = prefix;
          ext.push_back(j);
          auto [it, fresh] = next.emplace(std::move(ext), pc * mc);
          if (!fresh) it->second += pc * mc;
        }
      partial = std::move(next);
    }
    for (const auto& [word, pc] : partial) r.add_word(word, pc);
  }
  return r;
}

bool is_lyndon(const NCWord& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  return true;
}

std::vector<NCWord> lyndon_words(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("lyndon_words needs n >= 1, d >= 1");
  std::vector<NCWord> out;
  NCWord w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    const size_t m = w.size();
    while (w.size() < static_cast<size_t>(d)) w.push_back(w[w.size() % m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<NCWord, NCWord> standard_factorization(const NCWord& w) {
  if (w.size() < 2 || !is_lyndon(w))
    throw DomainError("standard factorization needs a Lyndon word of length >= 2");
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
      best = i;
  return {NCWord(w.begin(), w.begin() + best), NCWord(w.begin() + best, w.end())};
}

FreeLieElement dynkin_bracket(const NCWord& w, int rank) {
  for (int letter : w)
    if (letter < 1 || letter > rank) throw IndexError("word letter out of range");
  if (!is_lyndon(w)) throw DomainError("dynkin_bracket needs a Lyndon word");
  if (w.size() == 1) return FreeLieElement::generator(rank, w[0]);
  auto [u, v] = standard_factorization(w);
  return free_bracket(dynkin_bracket(u, rank), dynkin_bracket(v, rank),
                      static_cast<int>(w.size()));
}

std::map<NCWord, Rational, WordLess> lyndon_decompose(const FreeLieElement& e) {
  std::map<NCWord, Rational, WordLess> out;
  FreeLieElement rest = e;
  while (!rest.is_zero()) {
    // Smallest word in graded order.  Subtracting dynkin_bracket(w) only
    // touches words of the same length that are >= w, so this increases
    // strictly and the loop ends.
    const NCWord w = rest.terms().begin()->first;
    if (!is_lyndon(w))
      throw NotLieElementError("leading word is not Lyndon; input is not a Lie element");
    const Rational c = rest.terms().begin()->second;
    rest -= c * dynkin_bracket(w, e.rank());
    out.emplace(w, c);
  }
  return out;
}

namespace {

WreathElement wreath_eval_dynkin(const NCWord& w, int rank) {
  if (w.size() == 1) return wreath_generator(rank, w[0]);
  auto [u, v] = standard_factorization(w);
  return wreath_bracket(wreath_eval_dynkin(u, rank), wreath_eval_dynkin(v, rank));
}

}  // namespace

MetabelianElement project_metabelian(const FreeLieElement& e, const AlgebraSpec& spec) {
  if (spec.rank != e.rank()) throw RankMismatchError("spec rank differs from element rank");
  if (spec.variety == Variety::Free)
    throw DomainError("projection target must be metabelian or nilpotent");
  WreathElement acc = WreathElement::zero(spec.rank);
  for (const auto& [w, c] : lyndon_decompose(e))
    acc += c * wreath_eval_dynkin(w, spec.rank);
  return wreath_extract(acc, spec);
}

}  // namespace liesym
