#include <doctest.h>

#include <vector>

#include "support.hpp"

#include "liesym/errors.hpp"
#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/poly.hpp"
#include "liesym/printing.hpp"

using liesym::AlgebraSpec;
using liesym::BahturinMonomial;
using liesym::basis;
using liesym::basis_monomials;
using liesym::bracket;
using liesym::CommPoly;
using liesym::MetabelianElement;
using liesym::module_act;
using liesym::normalize_monomial;
using liesym::project_metabelian;
using liesym::Rational;

TEST_SUITE("metabelian") {
  TEST_CASE("normal form on fixed inputs") {
    const auto spec = AlgebraSpec::metabelian(3);
    // [x3,x2]x1 = [x3,x1]x2 - [x2,x1]x3
    const auto e = normalize_monomial(3, 2, {1}, spec);
    CHECK(e.coefficient({3, 1, {2}}) == Rational(1));
    CHECK(e.coefficient({2, 1, {3}}) == Rational(-1));
    CHECK(e.comm_terms().size() == 2);
    // head swap flips sign; equal heads vanish
    CHECK(normalize_monomial(1, 2, {}, spec) == -MetabelianElement::monomial(spec, {2, 1, {}}));
    CHECK(normalize_monomial(1, 2, {}, spec) == -normalize_monomial(2, 1, {}, spec));
    CHECK(normalize_monomial(1, 1, {}, spec).is_zero());
    CHECK(normalize_monomial(2, 2, {1, 3}, spec).is_zero());
    // tail order never matters
    CHECK(normalize_monomial(3, 1, {2, 1, 2}, spec) == normalize_monomial(3, 1, {2, 2, 1}, spec));
    // already normal stays put
    const auto nf = normalize_monomial(2, 1, {1, 3}, spec);
    CHECK(nf == MetabelianElement::monomial(spec, {2, 1, {1, 3}}));
  }

  TEST_CASE("every normal form is well formed") {
    const auto spec = AlgebraSpec::metabelian(3);
    testsupport::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const int a = rng.range(1, 3), b = rng.range(1, 3);
      std::vector<int> tail;
      for (int k = rng.range(0, 4); k > 0; --k) tail.push_back(rng.range(1, 3));
      const auto nf = normalize_monomial(a, b, tail, spec);
      for (const auto& [m, c] : nf.comm_terms()) {
        CHECK(m.well_formed(3));
        CHECK(!c.is_zero());
      }
    }
  }

  TEST_CASE("bracket laws") {
    const auto spec = AlgebraSpec::metabelian(3);
    testsupport::Rng rng(32);
    for (int t = 0; t < 12; ++t) {
      const auto a = testsupport::random_element(rng, spec, 3);
      const auto b = testsupport::random_element(rng, spec, 3);
      const auto c = testsupport::random_element(rng, spec, 2);
      CHECK(bracket(a, b) == -bracket(b, a));
      CHECK(bracket(a, a).is_zero());
      CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b))
                .is_zero());
      CHECK(bracket(a + b, c) == bracket(a, c) + bracket(b, c));
    }
  }

  TEST_CASE("the metabelian law holds") {
    const auto spec = AlgebraSpec::metabelian(3);
    testsupport::Rng rng(33);
    for (int t = 0; t < 12; ++t) {
      const auto z1 = testsupport::random_element(rng, spec, 2);
      const auto z2 = testsupport::random_element(rng, spec, 2);
      const auto z3 = testsupport::random_element(rng, spec, 2);
      const auto z4 = testsupport::random_element(rng, spec, 2);
      CHECK(bracket(bracket(z1, z2), bracket(z3, z4)).is_zero());
    }
    // fixed instances
    const auto x1 = MetabelianElement::generator(spec, 1);
    const auto x2 = MetabelianElement::generator(spec, 2);
    const auto c21 = MetabelianElement::monomial(spec, {2, 1, {}});
    CHECK(bracket(x2, x1) == c21);
    CHECK(bracket(c21, MetabelianElement::monomial(spec, {3, 1, {}})).is_zero());
    CHECK(bracket(x1 + x2, c21) == -MetabelianElement::monomial(spec, {2, 1, {1}}) -
                                       MetabelianElement::monomial(spec, {2, 1, {2}}));
  }

  TEST_CASE("module action realizes the polynomial algebra") {
    const auto spec = AlgebraSpec::metabelian(3);
    testsupport::Rng rng(34);
    const auto seed = MetabelianElement::monomial(spec, {2, 1, {}});
    for (int t = 0; t < 10; ++t) {
      CommPoly p = CommPoly::zero(3);
      CommPoly q = CommPoly::zero(3);
      for (int k = 0; k < 4; ++k) {
        liesym::ExponentVector e(3, 0);
        for (int j = rng.range(0, 2); j > 0; --j) ++e[rng.range(0, 2)];
        p.add_term(e, rng.coeff());
        liesym::ExponentVector f(3, 0);
        for (int j = rng.range(0, 2); j > 0; --j) ++f[rng.range(0, 2)];
        q.add_term(f, rng.coeff());
      }
      // (v.p).q = v.(pq): the tail really is a polynomial module
      CHECK(module_act(module_act(seed, p), q) == module_act(seed, p * q));
    }
    // v.x_i equals bracketing with the generator
    for (int i = 1; i <= 3; ++i)
      CHECK(module_act(seed, CommPoly::variable(3, i)) ==
            bracket(seed, MetabelianElement::generator(spec, i)));
    // the unit acts as identity; an unnormalized tail renormalizes
    CHECK(module_act(seed, CommPoly::one(3)) == seed);
    CHECK(module_act(MetabelianElement::monomial(spec, {3, 2, {}}), CommPoly::variable(3, 1)) ==
          normalize_monomial(3, 2, {1}, spec));
    CHECK_THROWS_AS(module_act(MetabelianElement::generator(spec, 1), CommPoly::one(3)),
                    liesym::DomainError);
  }

  TEST_CASE("basis dimensions") {
    // rank 2: one head pair, tails are monomials in two variables
    for (int d = 2; d <= 8; ++d)
      CHECK(basis_monomials(AlgebraSpec::metabelian(2), d).size() ==
            static_cast<size_t>(d - 1));
    CHECK(basis_monomials(AlgebraSpec::metabelian(3), 3).size() == 8);
    CHECK(basis_monomials(AlgebraSpec::metabelian(4), 3).size() == 20);
    // agreement with the free algebra through degree 3, divergence at (2,5)
    for (int n = 2; n <= 4; ++n) {
      const auto spec = AlgebraSpec::metabelian(n);
      CHECK(basis(spec, 1).size() == static_cast<size_t>(n));
      for (int d = 2; d <= 3; ++d)
        CHECK(static_cast<long long>(basis_monomials(spec, d).size()) ==
              testsupport::witt_dimension(n, d));
    }
    CHECK(basis_monomials(AlgebraSpec::metabelian(2), 5).size() == 4);
    CHECK(testsupport::witt_dimension(2, 5) == 6);
    // the nilpotent quotient chops at the class
    const auto n23 = AlgebraSpec::nilpotent(2, 3);
    CHECK(basis(n23, 3).size() == 2);
    CHECK(basis(n23, 4).empty());
  }

  TEST_CASE("basis monomials arrive sorted and well formed") {
    const auto spec = AlgebraSpec::metabelian(3);
    for (int d = 2; d <= 5; ++d) {
      const auto monos = basis_monomials(spec, d);
      for (size_t i = 0; i < monos.size(); ++i) {
        CHECK(monos[i].well_formed(3));
        CHECK(monos[i].degree() == d);
        if (i) CHECK(monos[i - 1] < monos[i]);
      }
    }
  }

  TEST_CASE("nilpotent truncation") {
    const auto spec = AlgebraSpec::nilpotent(2, 3);
    const auto x = MetabelianElement::generator(spec, 1);
    const auto y = MetabelianElement::generator(spec, 2);
    const auto xyx = bracket(bracket(x, y), x);
    CHECK(!xyx.is_zero());
    CHECK(bracket(xyx, y).is_zero());
    // conversion re-truncates
    const auto f2 = AlgebraSpec::metabelian(2);
    const auto big = normalize_monomial(2, 1, {1, 1, 2}, f2);
    CHECK(big.converted(spec).is_zero());
    CHECK(big.converted(f2) == big);
    CHECK_THROWS_AS(big.converted(AlgebraSpec::metabelian(3)), liesym::RankMismatchError);
  }

  TEST_CASE("oracle equivalence with the free algebra route") {
    // the acceptance gate runs 1000 of these; keep a fast slice in the units
    testsupport::Rng rng(35);
    for (int n = 2; n <= 3; ++n) {
      const auto spec = AlgebraSpec::metabelian(n);
      for (int t = 0; t < 120; ++t) {
        const int leaves = rng.range(2, 6);
        const auto [free_e, met_e] = testsupport::random_tree(rng, spec, leaves);
        CHECK(project_metabelian(free_e, spec) == met_e);
      }
    }
  }

  TEST_CASE("projection is a Lie morphism") {
    testsupport::Rng rng(36);
    const auto spec = AlgebraSpec::metabelian(3);
    for (int t = 0; t < 10; ++t) {
      const auto a = testsupport::random_free_element(rng, 3, 3);
      const auto b = testsupport::random_free_element(rng, 3, 3);
      CHECK(project_metabelian(free_bracket(a, b), spec) ==
            bracket(project_metabelian(a, spec), project_metabelian(b, spec)));
      CHECK(project_metabelian(a + b, spec) ==
            project_metabelian(a, spec) + project_metabelian(b, spec));
    }
    // nilpotent target truncates the image
    const auto n23 = AlgebraSpec::nilpotent(2, 3);
    testsupport::Rng rng2(37);
    for (int t = 0; t < 6; ++t) {
      const auto a = testsupport::random_free_element(rng2, 2, 5);
      CHECK(project_metabelian(a, n23) == project_metabelian(a, AlgebraSpec::metabelian(2))
                                              .converted(n23));
    }
  }

  TEST_CASE("slices, degrees, truncation") {
    const auto spec = AlgebraSpec::metabelian(2);
    testsupport::Rng rng(38);
    const auto e = testsupport::random_element(rng, spec, 5);
    auto back = MetabelianElement::zero(spec);
    for (int d = 1; d <= e.max_degree(); ++d) {
      const auto s = e.degree_slice(d);
      if (!s.is_zero()) CHECK(s.max_degree() == d);
      back += s;
    }
    CHECK(back == e);
    CHECK(e.truncated(3) == e.degree_slice(1) + e.degree_slice(2) + e.degree_slice(3));
    CHECK(MetabelianElement::zero(spec).max_degree() == 0);
  }

  TEST_CASE("mixed-spec arithmetic is rejected") {
    const auto a = MetabelianElement::generator(AlgebraSpec::metabelian(2), 1);
    const auto b = MetabelianElement::generator(AlgebraSpec::metabelian(3), 1);
    CHECK_THROWS_AS(bracket(a, b), liesym::SpecMismatchError);
    auto c = a;
    CHECK_THROWS_AS(c += b, liesym::SpecMismatchError);
  }
}
