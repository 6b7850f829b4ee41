#include "liesym/endomorphism.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

Endomorphism::Endomorphism(AlgebraSpec spec, std::vector<MetabelianElement> images)
    : spec_(spec), images_(std::move(images)) {
  if (spec_.variety == Variety::Free)
    throw DomainError("endomorphisms by images need a metabelian or nilpotent spec");
  if (static_cast<int>(images_.size()) != spec_.rank)
    throw RankMismatchError("need one image per generator");
  for (const auto& img : images_) check_same_spec(spec_, img.spec());
}

Endomorphism Endomorphism::identity(const AlgebraSpec& spec) {
  std::vector<MetabelianElement> images;
  for (int i = 1; i <= spec.rank; ++i) images.push_back(MetabelianElement::generator(spec, i));
  return Endomorphism(spec, std::move(images));
}

Endomorphism Endomorphism::from_linear(const AlgebraSpec& spec, const QMatrix& m) {
  if (static_cast<int>(m.size()) != spec.rank)
    throw RankMismatchError("matrix size differs from rank");
  std::vector<MetabelianElement> images;
  for (int i = 0; i < spec.rank; ++i) {
    if (static_cast<int>(m[i].size()) != spec.rank)
      throw RankMismatchError("matrix size differs from rank");
    MetabelianElement img(spec);
    for (int j = 0; j < spec.rank; ++j) img.add_linear(j + 1, m[i][j]);
    images.push_back(std::move(img));
  }
  return Endomorphism(spec, std::move(images));
}

MetabelianElement Endomorphism::apply(const MetabelianElement& e) const {
  check_same_spec(spec_, e.spec());
  MetabelianElement r(spec_);
  for (const auto& [i, c] : e.linear_terms()) r += c * images_[i - 1];
  for (const auto& [m, c] : e.comm_terms()) {
    MetabelianElement v = bracket(images_[m.k1 - 1], images_[m.k2 - 1]);
    for (int t : m.tail) v = bracket(v, images_[t - 1]);
    r += c * v;
  }
  return r;
}

Endomorphism Endomorphism::compose(const Endomorphism& sigma) const {
  check_same_spec(spec_, sigma.spec_);
  std::vector<MetabelianElement> images;
  images.reserve(images_.size());
  for (const auto& img : sigma.images_) images.push_back(apply(img));
  return Endomorphism(spec_, std::move(images));
}

bool Endomorphism::is_identity() const {
  for (int i = 1; i <= spec_.rank; ++i)
    if (images_[i - 1] != MetabelianElement::generator(spec_, i)) return false;
  return true;
}

QMatrix Endomorphism::linear_part() const {
  QMatrix m(spec_.rank, std::vector<Rational>(spec_.rank));
  for (int i = 0; i < spec_.rank; ++i)
    for (int j = 0; j < spec_.rank; ++j) m[i][j] = images_[i].linear_coefficient(j + 1);
  return m;
}

Endomorphism inner_psi(const MetabelianElement& u) {
  if (!u.in_commutator_ideal())
    throw DomainError("psi_u needs u in the commutator ideal");
  const AlgebraSpec& spec = u.spec();
  std::vector<MetabelianElement> images;
  for (int i = 1; i <= spec.rank; ++i) {
    MetabelianElement xi = MetabelianElement::generator(spec, i);
    images.push_back(xi + bracket(xi, u));
  }
  return Endomorphism(spec, std::move(images));
}

Endomorphism inner_eps(const MetabelianElement& u) {
  const AlgebraSpec& spec = u.spec();
  if (!spec.is_nilpotent()) throw DomainError("eps_u lives on a nilpotent algebra");
  std::vector<MetabelianElement> images;
  for (int i = 1; i <= spec.rank; ++i) {
    MetabelianElement term = MetabelianElement::generator(spec, i);
    MetabelianElement img = term;
    for (int k = 1; k <= spec.cls - 1 && !term.is_zero(); ++k) {
      term = bracket(term, u);
      img += Rational(mpz_class(1)) / Rational(factorial(k)) * term;
    }
    images.push_back(std::move(img));
  }
  return Endomorphism(spec, std::move(images));
}

QMatrix xi_matrix(const Rational& a, const Rational& b) { return {{a, b}, {b, a}}; }

QMatrix xi_inverse_matrix(const Rational& a, const Rational& b) {
  const Rational c = a * a - b * b;
  if (c.is_zero()) throw NonInvertibleError("xi(a,b) needs a^2 != b^2");
  const Rational ci = c.inverse();
  return {{ci * a, -(ci * b)}, {-(ci * b), ci * a}};
}

Endomorphism xi_endomorphism(const AlgebraSpec& spec, const Rational& a, const Rational& b) {
  if (spec.rank != 2) throw RankMismatchError("xi(a,b) is a rank-2 map");
  if ((a * a - b * b).is_zero()) throw NonInvertibleError("xi(a,b) needs a^2 != b^2");
  return Endomorphism::from_linear(spec, xi_matrix(a, b));
}

Endomorphism phi_pair(const AlgebraSpec& spec, const CommPoly& f, const CommPoly& g) {
  if (spec.rank != 2 || spec.variety == Variety::Free)
    throw DomainError("phi maps live on rank-2 metabelian or nilpotent algebras");
  // [x,y] = [x1,x2] = -[x2,x1].
  const MetabelianElement xy =
      -MetabelianElement::monomial(spec, BahturinMonomial{2, 1, {}});
  std::vector<MetabelianElement> images{
      MetabelianElement::generator(spec, 1) + module_act(xy, f),
      MetabelianElement::generator(spec, 2) + module_act(xy, g)};
  return Endomorphism(spec, std::move(images));
}

Endomorphism phi_f(const CommPoly& f, int c) {
  const AlgebraSpec spec = AlgebraSpec::nilpotent(2, c);
  const CommPoly ft = f.truncated_above(c - 2);
  const Permutation swap12({2, 1});
  return phi_pair(spec, ft, -(ft.permuted(swap12)));
}

LinearEndo::LinearEndo(int rank, QMatrix m) : rank_(rank), m_(std::move(m)) {
  if (static_cast<int>(m_.size()) != rank_)
    throw RankMismatchError("matrix size differs from rank");
  for (const auto& row : m_)
    if (static_cast<int>(row.size()) != rank_)
      throw RankMismatchError("matrix size differs from rank");
}

LinearEndo LinearEndo::identity(int rank) { return LinearEndo(rank, mat_identity(rank)); }

FreeLieElement LinearEndo::apply(const FreeLieElement& e) const {
  if (e.rank() != rank_) throw RankMismatchError("element rank differs from map rank");
  return apply_linear(e, m_);
}

LinearEndo LinearEndo::compose(const LinearEndo& sigma) const {
  if (sigma.rank_ != rank_) throw RankMismatchError("map ranks differ");
  return LinearEndo(rank_, mat_mul(sigma.m_, m_));
}

LinearEndo LinearEndo::inverse() const { return LinearEndo(rank_, mat_inverse(m_)); }

bool LinearEndo::is_identity() const { return m_ == mat_identity(rank_); }

LinearEndo linear_xi(const Rational& a, const Rational& b) {
  if ((a * a - b * b).is_zero()) throw NonInvertibleError("xi(a,b) needs a^2 != b^2");
  return LinearEndo(2, xi_matrix(a, b));
}

namespace {

template <class Endo, class Elem>
SymmetricWitness<Elem> preserves_impl(const Endo& phi,
                                      const std::vector<std::vector<Elem>>& slices,
                                      bool paranoid) {
  SymmetricWitness<Elem> w;
  for (const auto& slice : slices)
    for (const auto& s : slice) {
      Elem image = phi.apply(s);
      SymmetricWitness<Elem> verdict =
          paranoid ? is_symmetric_full(image) : is_symmetric(image);
      w.checks += verdict.checks;
      if (!verdict.ok) {
        w.ok = false;
        w.perm = verdict.perm;
        w.difference = verdict.difference;
        w.failing_input = s;
        w.failing_image = image;
        return w;
      }
    }
  return w;
}

}  // namespace

SymmetricWitness<MetabelianElement> preserves_symmetric(const Endomorphism& phi, int dmax,
                                                        bool paranoid) {
  if (dmax < 1) throw DomainError("dmax must be >= 1");
  const int top = std::min(dmax, phi.spec().degree_cap());
  std::vector<std::vector<MetabelianElement>> slices;
  for (int d = 1; d <= top; ++d) slices.push_back(symmetric_basis(phi.spec(), d));
  return preserves_impl(phi, slices, paranoid);
}

SymmetricWitness<FreeLieElement> preserves_symmetric(const LinearEndo& phi, int dmax,
                                                     bool paranoid) {
  if (dmax < 1) throw DomainError("dmax must be >= 1");
  std::vector<std::vector<FreeLieElement>> slices;
  for (int d = 1; d <= dmax; ++d) slices.push_back(symmetric_basis_free(phi.rank(), d));
  return preserves_impl(phi, slices, paranoid);
}

}  // namespace liesym
