#include "liesym/wreath.hpp"

#include "liesym/errors.hpp"

namespace liesym {

WreathElement WreathElement::zero(int rank) {
  WreathElement w;
  w.rank = rank;
  w.module.assign(static_cast<size_t>(rank), CommPoly::zero(rank));
  w.linear.assign(static_cast<size_t>(rank), Rational(0));
  return w;
}

bool WreathElement::is_zero() const {
  for (const auto& p : module)
    if (!p.is_zero()) return false;
  for (const auto& c : linear)
    if (!c.is_zero()) return false;
  return true;
}

WreathElement& WreathElement::operator+=(const WreathElement& o) {
  if (rank != o.rank) throw RankMismatchError("wreath elements of different rank");
  for (int i = 0; i < rank; ++i) {
    module[i] += o.module[i];
    linear[i] += o.linear[i];
  }
  return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& o) {
  if (rank != o.rank) throw RankMismatchError("wreath elements of different rank");
  for (int i = 0; i < rank; ++i) {
    module[i] -= o.module[i];
    linear[i] -= o.linear[i];
  }
  return *this;
}

WreathElement& WreathElement::operator*=(const Rational& c) {
  for (int i = 0; i < rank; ++i) {
    module[i] = c * module[i];
    linear[i] *= c;
  }
  return *this;
}

WreathElement wreath_generator(int rank, int i) {
  if (i < 1 || i > rank) throw IndexError("generator index out of range");
  WreathElement w = WreathElement::zero(rank);
  w.module[i - 1] = CommPoly::one(rank);
  w.linear[i - 1] = Rational(1);
  return w;
}

namespace {

CommPoly linear_poly(const std::vector<Rational>& l, int rank) {
  CommPoly p = CommPoly::zero(rank);
  for (int j = 0; j < rank; ++j)
    if (!l[j].is_zero()) p += l[j] * CommPoly::variable(rank, j + 1);
  return p;
}

}  // namespace

WreathElement wreath_bracket(const WreathElement& u, const WreathElement& v) {
  if (u.rank != v.rank) throw RankMismatchError("wreath elements of different rank");
  const int n = u.rank;
  WreathElement r = WreathElement::zero(n);
  const CommPoly lv = linear_poly(v.linear, n);
  const CommPoly lu = linear_poly(u.linear, n);
  for (int i = 0; i < n; ++i) r.module[i] = u.module[i] * lv - v.module[i] * lu;
  return r;
}

WreathElement wreath_embed(const MetabelianElement& e) {
  const int n = e.spec().rank;
  WreathElement w = WreathElement::zero(n);
  for (const auto& [i, c] : e.linear_terms()) {
    w.module[i - 1] += CommPoly::constant(n, c);
    w.linear[i - 1] += c;
  }
  for (const auto& [m, c] : e.comm_terms()) {
    ExponentVector tail(static_cast<size_t>(n), 0);
    for (int t : m.tail) ++tail[t - 1];
    ExponentVector with_k2 = tail, with_k1 = tail;
    ++with_k2[m.k2 - 1];
    ++with_k1[m.k1 - 1];
    w.module[m.k1 - 1].add_term(with_k2, c);
    w.module[m.k2 - 1].add_term(with_k1, -c);
  }
  return w;
}

MetabelianElement wreath_extract(const WreathElement& w, const AlgebraSpec& spec) {
  if (w.rank != spec.rank) throw RankMismatchError("wreath element rank differs from spec");
  const int n = spec.rank;
  MetabelianElement out(spec);

  WreathElement rest = w;
  for (int i = 1; i <= n; ++i) {
    const Rational c = rest.linear[i - 1];
    if (c.is_zero()) continue;
    out.add_linear(i, c);
    rest -= c * wreath_generator(n, i);
  }

  // The linear part is gone, so only commutator monomials remain.  Degrees
  // above the cap map to zero anyway; drop them before inverting.
  const int cap = spec.degree_cap();
  if (cap < INT_MAX)
    for (auto& p : rest.module) p = p.truncated_above(cap - 1);

  for (int k1 = n; k1 >= 2; --k1) {
    const CommPoly comp = rest.module[k1 - 1];
    for (const auto& [e, c] : comp.terms()) {
      int k2 = 0;
      for (int j = 0; j < n && k2 == 0; ++j)
        if (e[j] > 0) k2 = j + 1;
      if (k2 == 0 || k2 >= k1)
        throw NotLieElementError("wreath element is not in the embedded algebra");
      BahturinMonomial m;
      m.k1 = k1;
      m.k2 = k2;
      ExponentVector tail_e = e;
      --tail_e[k2 - 1];
      for (int j = 0; j < n; ++j) m.tail.insert(m.tail.end(), tail_e[j], j + 1);
      out.add_monomial(m, c);
      rest -= c * wreath_embed(MetabelianElement::monomial(spec, m));
    }
  }
  if (!rest.is_zero())
    throw NotLieElementError("wreath element is not in the embedded algebra");
  return out;
}

}  // namespace liesym
