#include "liesym/printing.hpp"

#include <utility>
#include <vector>

namespace liesym {

namespace {

// Joins (coefficient, factor) pairs as "f1 + 2f2 - 1/2f3".  An empty factor
// stands for a bare constant (polynomials only).
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, factor] : terms) {
    const bool neg = c.sign() < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Rational a = c.abs();
    if (!a.is_one() || factor.empty()) out += a.to_string();
    out += factor;
  }
  return out;
}

// "x1^2x2" for a sorted multiset of indices; sep inserted between powers.
std::string powtail(const std::vector<int>& tail, const char* sep) {
  std::string s;
  size_t i = 0;
  while (i < tail.size()) {
    size_t j = i;
    while (j < tail.size() && tail[j] == tail[i]) ++j;
    if (!s.empty()) s += sep;
    s += "x" + std::to_string(tail[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string bracket_string(const NCWord& w) {
  if (w.size() == 1) return "x" + std::to_string(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_string(u) + "," + bracket_string(v) + "]";
}

}  // namespace

std::string print_monomial(const BahturinMonomial& m) {
  std::string s = "[x" + std::to_string(m.k1) + ",x" + std::to_string(m.k2) + "]";
  return s + powtail(m.tail, "");
}

std::string print_canonical(const MetabelianElement& e) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [i, c] : e.linear_terms()) terms.emplace_back(c, "x" + std::to_string(i));
  for (const auto& [m, c] : e.comm_terms()) terms.emplace_back(c, print_monomial(m));
  return join_terms(terms);
}

std::string print_canonical(const FreeLieElement& e) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [w, c] : lyndon_decompose(e)) terms.emplace_back(c, bracket_string(w));
  return join_terms(terms);
}

std::string print_canonical(const CommPoly& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> tail;
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
      tail.insert(tail.end(), e[i], i + 1);
    std::string factor = powtail(tail, "*");
    if (!factor.empty() && !c.abs().is_one()) factor = "*" + factor;
    terms.emplace_back(c, factor);
  }
  return join_terms(terms);
}

std::string print_word(const NCWord& w) {
  std::string s;
  for (int letter : w) s += std::to_string(letter);
  return s;
}

}  // namespace liesym
