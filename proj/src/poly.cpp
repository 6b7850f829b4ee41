#include "liesym/poly.hpp"

#include "liesym/errors.hpp"

namespace liesym {

namespace {

void check_rank(const CommPoly& a, const CommPoly& b) {
  if (a.rank() != b.rank())
    throw RankMismatchError("polynomial ranks differ: " + std::to_string(a.rank()) +
                            " vs " + std::to_string(b.rank()));
}

}  // namespace

CommPoly::CommPoly(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("polynomial rank must be >= 1");
}

CommPoly CommPoly::constant(int rank, const Rational& c) {
  CommPoly p(rank);
  p.add_term(ExponentVector(static_cast<size_t>(rank), 0), c);
  return p;
}

CommPoly CommPoly::variable(int rank, int i) {
  if (i < 1 || i > rank) throw IndexError("variable index out of range");
  ExponentVector e(static_cast<size_t>(rank), 0);
  e[static_cast<size_t>(i) - 1] = 1;
  CommPoly p(rank);
  p.add_term(e, Rational(1));
  return p;
}

CommPoly CommPoly::monomial(int rank, ExponentVector e, const Rational& c) {
  if (static_cast<int>(e.size()) != rank) throw RankMismatchError("exponent vector length != rank");
  CommPoly p(rank);
  p.add_term(e, c);
  return p;
}

int CommPoly::degree() const {
  if (terms_.empty()) return -1;
  // grlex order: last term has the highest degree
  return total_degree(terms_.rbegin()->first);
}

Rational CommPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CommPoly::constant_term() const {
  return coefficient(ExponentVector(static_cast<size_t>(rank_), 0));
}

void CommPoly::add_term(const ExponentVector& e, const Rational& c) {
  if (static_cast<int>(e.size()) != rank_)
    throw RankMismatchError("exponent vector length != rank");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly CommPoly::operator-() const {
  CommPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  check_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  check_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  check_rank(a, b);
  CommPoly r(a.rank());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExponentVector e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

CommPoly operator*(const Rational& c, const CommPoly& p) {
  CommPoly r(p.rank());
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CommPoly CommPoly::permuted(const Permutation& pi) const {
  if (pi.size() != rank_) throw RankMismatchError("permutation size != polynomial rank");
  CommPoly r(rank_);
  for (const auto& [e, c] : terms_) {
    // x_i -> x_{pi(i)}: exponent of x_{pi(i)} in the image is the exponent of x_i here
    ExponentVector pe(static_cast<size_t>(rank_), 0);
    for (int i = 1; i <= rank_; ++i)
      pe[static_cast<size_t>(pi(i)) - 1] = e[static_cast<size_t>(i) - 1];
    r.add_term(pe, c);
  }
  return r;
}

CommPoly CommPoly::truncated_above(int maxdeg) const {
  CommPoly r(rank_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= maxdeg) r.terms_.emplace(e, c);
  return r;
}

std::optional<CommPoly> CommPoly::divide_exact(const CommPoly& divisor) const {
  check_rank(*this, divisor);
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  CommPoly q(rank_);
  CommPoly r = *this;
  const auto& dlead = *divisor.terms_.rbegin();  // grlex-leading term
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    ExponentVector qe(static_cast<size_t>(rank_));
    for (size_t i = 0; i < qe.size(); ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      qe[i] = rlead.first[i] - dlead.first[i];
    }
    const Rational qc = rlead.second / dlead.second;
    CommPoly t(rank_);
    t.add_term(qe, qc);
    q += t;
    r -= t * divisor;
  }
  return q;
}

}  // namespace liesym
