#include "liesym/metabelian.hpp"

#include <algorithm>
#include <functional>

#include "liesym/poly.hpp"

namespace liesym {

bool BahturinMonomial::well_formed(int rank) const {
  if (k1 <= k2 || k2 < 1 || k1 > rank) return false;
  int prev = k2;
  for (int t : tail) {
    if (t < prev || t > rank) return false;
    prev = t;
  }
  return true;
}

MetabelianElement MetabelianElement::generator(const AlgebraSpec& spec, int i) {
  spec.check_generator(i);
  MetabelianElement e(spec);
  e.linear_.emplace(i, Rational(1));
  return e;
}

MetabelianElement MetabelianElement::monomial(const AlgebraSpec& spec, const BahturinMonomial& m,
                                              const Rational& c) {
  if (!m.well_formed(spec.rank)) throw DomainError("monomial is not in normal shape");
  MetabelianElement e(spec);
  if (m.degree() <= spec.degree_cap() && !c.is_zero()) e.comm_.emplace(m, c);
  return e;
}

int MetabelianElement::max_degree() const {
  int d = linear_.empty() ? 0 : 1;
  if (!comm_.empty()) d = std::max(d, comm_.rbegin()->first.degree());
  return d;
}

Rational MetabelianElement::linear_coefficient(int i) const {
  auto it = linear_.find(i);
  return it == linear_.end() ? Rational(0) : it->second;
}

Rational MetabelianElement::coefficient(const BahturinMonomial& m) const {
  auto it = comm_.find(m);
  return it == comm_.end() ? Rational(0) : it->second;
}

void MetabelianElement::add_linear(int i, const Rational& c) {
  spec_.check_generator(i);
  if (c.is_zero()) return;
  auto [it, fresh] = linear_.emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) linear_.erase(it);
  }
}

void MetabelianElement::add_monomial(const BahturinMonomial& m, const Rational& c) {
  if (!m.well_formed(spec_.rank)) throw DomainError("monomial is not in normal shape");
  if (c.is_zero() || m.degree() > spec_.degree_cap()) return;
  auto [it, fresh] = comm_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) comm_.erase(it);
  }
}

MetabelianElement& MetabelianElement::operator+=(const MetabelianElement& o) {
  check_same_spec(spec_, o.spec_);
  for (const auto& [i, c] : o.linear_) add_linear(i, c);
  for (const auto& [m, c] : o.comm_) add_monomial(m, c);
  return *this;
}

MetabelianElement& MetabelianElement::operator-=(const MetabelianElement& o) {
  check_same_spec(spec_, o.spec_);
  for (const auto& [i, c] : o.linear_) add_linear(i, -c);
  for (const auto& [m, c] : o.comm_) add_monomial(m, -c);
  return *this;
}

MetabelianElement& MetabelianElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    linear_.clear();
    comm_.clear();
    return *this;
  }
  for (auto& [i, v] : linear_) v *= c;
  for (auto& [m, v] : comm_) v *= c;
  return *this;
}

MetabelianElement MetabelianElement::operator-() const {
  MetabelianElement r = *this;
  return r *= Rational(-1);
}

MetabelianElement MetabelianElement::degree_slice(int d) const {
  MetabelianElement r(spec_);
  if (d == 1) r.linear_ = linear_;
  if (d >= 2)
    for (const auto& [m, c] : comm_)
      if (m.degree() == d) r.comm_.emplace(m, c);
  return r;
}

MetabelianElement MetabelianElement::truncated(int maxdeg) const {
  MetabelianElement r(spec_);
  if (maxdeg >= 1) r.linear_ = linear_;
  for (const auto& [m, c] : comm_)
    if (m.degree() <= maxdeg) r.comm_.emplace(m, c);
  return r;
}

MetabelianElement MetabelianElement::relabeled(const Permutation& pi) const {
  if (pi.size() != spec_.rank) throw RankMismatchError("permutation size differs from rank");
  MetabelianElement r(spec_);
  for (const auto& [i, c] : linear_) r.add_linear(pi(i), c);
  for (const auto& [m, c] : comm_) {
    std::vector<int> tail;
    tail.reserve(m.tail.size());
    for (int t : m.tail) tail.push_back(pi(t));
    r += c * normalize_monomial(pi(m.k1), pi(m.k2), std::move(tail), spec_);
  }
  return r;
}

MetabelianElement MetabelianElement::converted(const AlgebraSpec& target) const {
  if (target.rank != spec_.rank) throw RankMismatchError("target spec has different rank");
  MetabelianElement r(target);
  r.linear_ = linear_;
  for (const auto& [m, c] : comm_)
    if (m.degree() <= target.degree_cap()) r.comm_.emplace(m, c);
  return r;
}

namespace {

// Keeps the tail sorted; the rewrite step inserts single generators.
void sorted_insert(std::vector<int>& tail, int v) {
  tail.insert(std::upper_bound(tail.begin(), tail.end(), v), v);
}

void normalize_into(int a, int b, std::vector<int> tail, Rational coeff,
                    std::map<BahturinMonomial, Rational>& acc) {
  while (true) {
    if (a == b) return;
    if (a < b) {
      std::swap(a, b);
      coeff = -coeff;
    }
    if (tail.empty() || tail.front() >= b) break;
    int m = tail.front();
    tail.erase(tail.begin());
    std::vector<int> other = tail;
    sorted_insert(other, a);
    normalize_into(m, b, std::move(other), coeff, acc);
    sorted_insert(tail, b);
    b = m;
  }
  auto [it, fresh] = acc.emplace(BahturinMonomial{a, b, std::move(tail)}, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

MetabelianElement normalize_monomial(int a, int b, std::vector<int> tail,
                                     const AlgebraSpec& spec) {
  spec.check_generator(a);
  spec.check_generator(b);
  for (int t : tail) spec.check_generator(t);
  MetabelianElement r(spec);
  if (2 + static_cast<int>(tail.size()) > spec.degree_cap()) return r;
  std::sort(tail.begin(), tail.end());
  std::map<BahturinMonomial, Rational> acc;
  normalize_into(a, b, std::move(tail), Rational(1), acc);
  for (auto& [m, c] : acc) r.add_monomial(m, c);
  return r;
}

MetabelianElement bracket(const MetabelianElement& u, const MetabelianElement& v) {
  check_same_spec(u.spec(), v.spec());
  const AlgebraSpec& spec = u.spec();
  MetabelianElement r(spec);
  for (const auto& [i, ci] : u.linear_terms())
    for (const auto& [j, cj] : v.linear_terms()) {
      if (i == j) continue;
      Rational c = ci * cj;
      if (i > j)
        r.add_monomial(BahturinMonomial{i, j, {}}, c);
      else
        r.add_monomial(BahturinMonomial{j, i, {}}, -c);
    }
  for (const auto& [m, cm] : u.comm_terms())
    for (const auto& [j, cj] : v.linear_terms()) {
      std::vector<int> tail = m.tail;
      tail.push_back(j);
      r += (cm * cj) * normalize_monomial(m.k1, m.k2, std::move(tail), spec);
    }
  for (const auto& [i, ci] : u.linear_terms())
    for (const auto& [m, cm] : v.comm_terms()) {
      std::vector<int> tail = m.tail;
      tail.push_back(i);
      r -= (ci * cm) * normalize_monomial(m.k1, m.k2, std::move(tail), spec);
    }
  // [F', F'] vanishes in a metabelian algebra; no fourth block.
  return r;
}

MetabelianElement module_act(const MetabelianElement& v, const CommPoly& p) {
  if (!v.in_commutator_ideal())
    throw DomainError("module action is only defined on the commutator ideal");
  if (p.rank() != v.spec().rank) throw RankMismatchError("polynomial rank differs from algebra");
  const AlgebraSpec& spec = v.spec();
  MetabelianElement r(spec);
  for (const auto& [e, pc] : p.terms())
    for (const auto& [m, mc] : v.comm_terms()) {
      std::vector<int> tail = m.tail;
      for (int i = 0; i < static_cast<int>(e.size()); ++i)
        tail.insert(tail.end(), e[i], i + 1);
      r += (pc * mc) * normalize_monomial(m.k1, m.k2, std::move(tail), spec);
    }
  return r;
}

namespace {

void enumerate_tails(int lo, int hi, int len, std::vector<int>& tail,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (len == 0) {
    emit(tail);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    tail.push_back(v);
    enumerate_tails(v, hi, len - 1, tail, emit);
    tail.pop_back();
  }
}

}  // namespace

std::vector<BahturinMonomial> basis_monomials(const AlgebraSpec& spec, int d) {
  std::vector<BahturinMonomial> out;
  if (d < 2 || d > spec.degree_cap()) return out;
  for (int k2 = 1; k2 < spec.rank; ++k2)
    for (int k1 = k2 + 1; k1 <= spec.rank; ++k1) {
      std::vector<int> tail;
      enumerate_tails(k2, spec.rank, d - 2, tail, [&](const std::vector<int>& t) {
        out.push_back(BahturinMonomial{k1, k2, t});
      });
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MetabelianElement> basis(const AlgebraSpec& spec, int d) {
  std::vector<MetabelianElement> out;
  if (d == 1) {
    for (int i = 1; i <= spec.rank; ++i) out.push_back(MetabelianElement::generator(spec, i));
    return out;
  }
  for (const auto& m : basis_monomials(spec, d))
    out.push_back(MetabelianElement::monomial(spec, m));
  return out;
}

}  // namespace liesym
