#include "liesym/symmetry.hpp"

#include "liesym/linalg.hpp"

namespace liesym {

MetabelianElement act(const Permutation& pi, const MetabelianElement& e) {
  return e.relabeled(pi);
}

FreeLieElement act(const Permutation& pi, const FreeLieElement& e) { return e.relabeled(pi); }

CommPoly act(const Permutation& pi, const CommPoly& p) { return p.permuted(pi); }

namespace {

// Coordinates of a homogeneous element over basis(spec, d).
std::vector<Rational> coords_metabelian(const MetabelianElement& e, int d,
                                        const std::vector<BahturinMonomial>& monomials) {
  std::vector<Rational> v;
  if (d == 1) {
    for (int i = 1; i <= e.spec().rank; ++i) v.push_back(e.linear_coefficient(i));
  } else {
    v.reserve(monomials.size());
    for (const auto& m : monomials) v.push_back(e.coefficient(m));
  }
  return v;
}

}  // namespace

std::vector<MetabelianElement> symmetric_basis(const AlgebraSpec& spec, int d) {
  if (spec.variety == Variety::Free)
    throw DomainError("symmetric_basis expects a metabelian or nilpotent spec");
  if (d < 1) throw DomainError("degree must be >= 1");
  const std::vector<MetabelianElement> bas = basis(spec, d);
  const int dim = static_cast<int>(bas.size());
  if (dim == 0) return {};
  const std::vector<BahturinMonomial> monomials = basis_monomials(spec, d);

  QMatrix rows;
  for (const auto& tau : Permutation::adjacent_transpositions(spec.rank)) {
    // Columns are basis elements; block row r states coefficient r of
    // act(tau, sum_j v_j b_j) - sum_j v_j b_j = 0.
    QMatrix block(dim, std::vector<Rational>(dim, Rational(0)));
    for (int j = 0; j < dim; ++j) {
      const std::vector<Rational> img = coords_metabelian(act(tau, bas[j]), d, monomials);
      for (int i = 0; i < dim; ++i) block[i][j] = img[i];
      block[j][j] -= Rational(1);
    }
    rows.insert(rows.end(), block.begin(), block.end());
  }

  std::vector<MetabelianElement> out;
  for (const auto& vec : nullspace_primitive(std::move(rows), dim)) {
    MetabelianElement e(spec);
    for (int j = 0; j < dim; ++j)
      if (vec[j] != 0) e += Rational(mpz_class(vec[j])) * bas[j];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FreeLieElement> symmetric_basis_free(int rank, int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
  const std::vector<NCWord> words = lyndon_words(rank, d);
  const int dim = static_cast<int>(words.size());
  std::vector<FreeLieElement> bas;
  bas.reserve(words.size());
  for (const auto& w : words) bas.push_back(dynkin_bracket(w, rank));

  QMatrix rows;
  for (const auto& tau : Permutation::adjacent_transpositions(rank)) {
    QMatrix block(dim, std::vector<Rational>(dim, Rational(0)));
    for (int j = 0; j < dim; ++j) {
      const auto img = lyndon_decompose(act(tau, bas[j]));
      for (int i = 0; i < dim; ++i) {
        auto it = img.find(words[i]);
        if (it != img.end()) block[i][j] = it->second;
      }
      block[j][j] -= Rational(1);
    }
    rows.insert(rows.end(), block.begin(), block.end());
  }

  std::vector<FreeLieElement> out;
  for (const auto& vec : nullspace_primitive(std::move(rows), dim)) {
    FreeLieElement e(rank);
    for (int j = 0; j < dim; ++j)
      if (vec[j] != 0) e += Rational(mpz_class(vec[j])) * bas[j];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace liesym
