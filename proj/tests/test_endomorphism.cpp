#include <doctest.h>

#include "support.hpp"

#include "liesym/endomorphism.hpp"
#include "liesym/errors.hpp"
#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/poly.hpp"
#include "liesym/symmetry.hpp"

using liesym::AlgebraSpec;
using liesym::BahturinMonomial;
using liesym::CommPoly;
using liesym::Endomorphism;
using liesym::FreeLieElement;
using liesym::inner_eps;
using liesym::inner_psi;
using liesym::LinearEndo;
using liesym::linear_xi;
using liesym::MetabelianElement;
using liesym::phi_f;
using liesym::phi_pair;
using liesym::QMatrix;
using liesym::Rational;
using liesym::xi_endomorphism;
using liesym::xi_inverse_matrix;
using liesym::xi_matrix;

namespace {

MetabelianElement gen_sum(const AlgebraSpec& spec) {
  auto v = MetabelianElement::zero(spec);
  for (int i = 1; i <= spec.rank; ++i) v += MetabelianElement::generator(spec, i);
  return v;
}

}  // namespace

TEST_SUITE("endomorphism") {
  TEST_CASE("application is a Lie morphism for every family") {
    testsupport::Rng rng(51);
    const auto spec = AlgebraSpec::nilpotent(2, 5);
    const auto u = liesym::reynolds(testsupport::random_element(rng, spec, 4) -
                                    testsupport::random_element(rng, spec, 1).degree_slice(1));
    std::vector<Endomorphism> maps;
    maps.push_back(inner_psi(u - u.degree_slice(1)));
    maps.push_back(inner_eps(u));
    maps.push_back(xi_endomorphism(spec, Rational(2), Rational(1)));
    maps.push_back(phi_f(CommPoly::variable(2, 1) - CommPoly::one(2), 5));
    for (const auto& phi : maps)
      for (int t = 0; t < 6; ++t) {
        const auto a = testsupport::random_element(rng, spec, 3);
        const auto b = testsupport::random_element(rng, spec, 3);
        CHECK(phi.apply(bracket(a, b)) == bracket(phi.apply(a), phi.apply(b)));
        CHECK(phi.apply(a + b) == phi.apply(a) + phi.apply(b));
      }
  }

  TEST_CASE("composition convention: compose(phi, sigma) is phi after sigma") {
    testsupport::Rng rng(52);
    const auto spec = AlgebraSpec::metabelian(2);
    const auto u1 = MetabelianElement::monomial(spec, {2, 1, {1}});
    const auto u2 = MetabelianElement::monomial(spec, {2, 1, {2, 2}});
    const auto phi = inner_psi(u1);
    const auto sigma = xi_endomorphism(spec, Rational(1), Rational(2));
    const auto both = phi.compose(sigma);
    for (int t = 0; t < 8; ++t) {
      const auto e = testsupport::random_element(rng, spec, 4);
      CHECK(both.apply(e) == phi.apply(sigma.apply(e)));
    }
    CHECK(inner_psi(u2).compose(Endomorphism::identity(spec)) == inner_psi(u2));
  }

  TEST_CASE("psi group law") {
    testsupport::Rng rng(53);
    for (const auto& spec : {AlgebraSpec::metabelian(2), AlgebraSpec::metabelian(3)}) {
      for (int t = 0; t < 10; ++t) {
        // commutator-ideal elements: strip the linear slice
        const auto e1 = testsupport::random_element(rng, spec, 4);
        const auto e2 = testsupport::random_element(rng, spec, 4);
        const auto a = e1 - e1.degree_slice(1);
        const auto b = e2 - e2.degree_slice(1);
        CHECK(inner_psi(a).compose(inner_psi(b)) == inner_psi(a + b));
        CHECK(inner_psi(b).compose(inner_psi(a)) == inner_psi(a + b));
        CHECK(inner_psi(a).compose(inner_psi(-a)).is_identity());
      }
    }
    CHECK_THROWS_AS(inner_psi(MetabelianElement::generator(AlgebraSpec::metabelian(2), 1)),
                    liesym::DomainError);
  }

  TEST_CASE("eps specializes and degenerates as stated") {
    const auto spec = AlgebraSpec::nilpotent(2, 4);
    const auto v = gen_sum(spec);
    // self-bracket vanishes: eps_{x1+x2}(x1+x2) = x1+x2
    CHECK(inner_eps(v).apply(v) == v);
    // u in the top graded piece: eps_u is the identity
    const auto top = MetabelianElement::monomial(spec, {2, 1, {1, 1}});
    CHECK(inner_eps(top).is_identity());
    CHECK(!inner_eps(MetabelianElement::monomial(spec, {2, 1, {}})).is_identity());
    // explicit expansion against iterated brackets
    const auto u = MetabelianElement::generator(spec, 1) +
                   MetabelianElement::monomial(spec, {2, 1, {}}, Rational(3));
    const auto e = inner_eps(u);
    for (int i = 1; i <= 2; ++i) {
      const auto x = MetabelianElement::generator(spec, i);
      auto expect = x;
      auto term = x;
      mpz_class fact = 1;
      for (int k = 1; k <= 3; ++k) {
        term = bracket(term, u);
        fact *= k;
        expect += Rational(1) / Rational(fact) * term;
      }
      CHECK(e.apply(x) == expect);
    }
    // eps needs a nilpotent spec
    CHECK_THROWS_AS(
        inner_eps(MetabelianElement::monomial(AlgebraSpec::metabelian(2), {2, 1, {}})),
        liesym::DomainError);
  }

  TEST_CASE("eps is insensitive to top-degree shifts") {
    const auto spec = AlgebraSpec::nilpotent(2, 4);
    const auto u = MetabelianElement::monomial(spec, {2, 1, {1}});
    const auto shift = MetabelianElement::monomial(spec, {2, 1, {1, 2}}, Rational(-2));
    CHECK(inner_eps(u) == inner_eps(u + shift));
  }

  TEST_CASE("xi shapes, inverse, and failure") {
    const Rational a(2), b(1);
    CHECK(xi_matrix(a, b) == QMatrix{{a, b}, {b, a}});
    const auto inv = xi_inverse_matrix(a, b);
    CHECK(liesym::mat_mul(xi_matrix(a, b), inv) == liesym::mat_identity(2));
    CHECK_THROWS_AS(xi_inverse_matrix(Rational(3), Rational(-3)), liesym::NonInvertibleError);
    CHECK_THROWS_AS(xi_endomorphism(AlgebraSpec::metabelian(2), Rational(1), Rational(1)),
                    liesym::NonInvertibleError);
    const auto spec = AlgebraSpec::metabelian(2);
    const auto xi = xi_endomorphism(spec, a, b);
    CHECK(xi.linear_part() == xi_matrix(a, b));
    // xi then its inverse is the identity, on the quotient too
    const auto xi_inv = Endomorphism::from_linear(spec, inv);
    CHECK(xi_inv.compose(xi).is_identity());
    CHECK(xi.compose(xi_inv).is_identity());
  }

  TEST_CASE("from_linear row convention") {
    const auto spec = AlgebraSpec::metabelian(2);
    const auto swap =
        Endomorphism::from_linear(spec, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    CHECK(swap.apply(MetabelianElement::generator(spec, 1)) ==
          MetabelianElement::generator(spec, 2));
    const auto e = MetabelianElement::monomial(spec, {2, 1, {1}});
    CHECK(swap.apply(e) == act(liesym::Permutation({2, 1}), e));
  }

  TEST_CASE("phi instances from the worked examples") {
    const auto spec = AlgebraSpec::nilpotent(2, 4);
    const auto v = gen_sum(spec);
    // f = 1, g = -1 preserves x1+x2; f = 1, g = 1 sends it to x1+x2+2[x1,x2]
    const auto good = phi_pair(spec, CommPoly::one(2), -CommPoly::one(2));
    CHECK(liesym::is_symmetric(good.apply(v)).ok);
    CHECK(good == phi_f(CommPoly::one(2), 4));
    const auto bad = phi_pair(spec, CommPoly::one(2), CommPoly::one(2));
    const auto img = bad.apply(v);
    CHECK(img == v + MetabelianElement::monomial(spec, {2, 1, {}}, Rational(-2)));
    CHECK(!liesym::is_symmetric(img).ok);
    // only the degree <= c-2 part of f contributes
    const auto fat = CommPoly::variable(2, 1) * CommPoly::variable(2, 1) * CommPoly::variable(2, 2);
    CHECK(phi_f(fat, 4) == phi_f(CommPoly::zero(2), 4));
    CHECK(phi_f(fat + CommPoly::one(2), 4) == phi_f(CommPoly::one(2), 4));
  }

  TEST_CASE("linear endomorphisms of the free algebra") {
    const auto xi = linear_xi(Rational(2), Rational(1));
    CHECK(xi.matrix() == xi_matrix(Rational(2), Rational(1)));
    CHECK(xi.compose(xi.inverse()).is_identity());
    CHECK(xi.inverse().compose(xi).is_identity());
    CHECK(xi.inverse().matrix() == xi_inverse_matrix(Rational(2), Rational(1)));
    CHECK_THROWS_AS(linear_xi(Rational(1), Rational(-1)), liesym::NonInvertibleError);
    CHECK_THROWS_AS(LinearEndo(2, {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}})
                        .inverse(),
                    liesym::NonInvertibleError);
    testsupport::Rng rng(54);
    const LinearEndo m(2, {{Rational(1), Rational(2)}, {Rational(0), Rational(1)}});
    for (int t = 0; t < 6; ++t) {
      const auto a = testsupport::random_free_element(rng, 2, 3);
      const auto b = testsupport::random_free_element(rng, 2, 3);
      CHECK(m.apply(free_bracket(a, b)) == free_bracket(m.apply(a), m.apply(b)));
      CHECK(xi.compose(m).apply(a) == xi.apply(m.apply(a)));
    }
  }

  TEST_CASE("stated image instances") {
    const auto m2 = AlgebraSpec::metabelian(2);
    const auto x1 = MetabelianElement::generator(m2, 1);
    // u = [x2,x1]: x1 picks up -[x2,x1]x1
    CHECK(inner_psi(MetabelianElement::monomial(m2, {2, 1, {}})).apply(x1) ==
          x1 - MetabelianElement::monomial(m2, {2, 1, {1}}));
    CHECK(inner_psi(MetabelianElement::zero(m2)).is_identity());
    // substitution agrees with the closed formula 1 + ad u everywhere
    testsupport::Rng rng(56);
    for (int t = 0; t < 6; ++t) {
      const auto e = testsupport::random_element(rng, m2, 4);
      const auto w = testsupport::random_element(rng, m2, 3);
      const auto u = w - w.degree_slice(1);
      CHECK(inner_psi(u).apply(e) == e + bracket(e, u));
    }
    // eps_{x1} in class 3 expands x2 through the truncation
    const auto n3 = AlgebraSpec::nilpotent(2, 3);
    CHECK(inner_eps(MetabelianElement::generator(n3, 1))
              .apply(MetabelianElement::generator(n3, 2)) ==
          MetabelianElement::generator(n3, 2) + MetabelianElement::monomial(n3, {2, 1, {}}) +
              MetabelianElement::monomial(n3, {2, 1, {1}}, Rational(1, 2)));
    CHECK(inner_eps(MetabelianElement::zero(n3)).is_identity());
    // f = x1: x2 goes to x2 + [x2,x1]x2
    const auto n4 = AlgebraSpec::nilpotent(2, 4);
    CHECK(phi_f(CommPoly::variable(2, 1), 4).apply(MetabelianElement::generator(n4, 2)) ==
          MetabelianElement::generator(n4, 2) + MetabelianElement::monomial(n4, {2, 1, {2}}));
    CHECK(phi_f(CommPoly::zero(2), 4).is_identity());
  }

  TEST_CASE("xi composition stays in the family") {
    testsupport::Rng rng(55);
    const auto spec = AlgebraSpec::metabelian(2);
    for (int t = 0; t < 12; ++t) {
      const Rational a(rng.range(-4, 4), rng.range(1, 3));
      const Rational b(rng.range(-4, 4), rng.range(1, 3));
      const Rational a2(rng.range(-4, 4), rng.range(1, 3));
      const Rational b2(rng.range(-4, 4), rng.range(1, 3));
      if ((a * a - b * b).is_zero() || (a2 * a2 - b2 * b2).is_zero()) continue;
      // determinants multiply, so the product shape is invertible too
      const auto prod = linear_xi(a * a2 + b * b2, a * b2 + a2 * b);
      CHECK(linear_xi(a, b).compose(linear_xi(a2, b2)) == prod);
      CHECK(linear_xi(a2, b2).compose(linear_xi(a, b)) == prod);
      CHECK(xi_endomorphism(spec, a, b).compose(xi_endomorphism(spec, a2, b2)) ==
            xi_endomorphism(spec, a * a2 + b * b2, a * b2 + a2 * b));
    }
  }

  TEST_CASE("preservation checks carry witnesses") {
    const auto spec = AlgebraSpec::metabelian(2);
    const auto anti = MetabelianElement::monomial(spec, {2, 1, {}});
    const auto w = preserves_symmetric(inner_psi(anti), 4);
    CHECK(!w.ok);
    REQUIRE(w.failing_input.has_value());
    REQUIRE(w.failing_image.has_value());
    CHECK(liesym::is_symmetric(*w.failing_input).ok);
    CHECK(!liesym::is_symmetric(*w.failing_image).ok);
    CHECK(inner_psi(anti).apply(*w.failing_input) == *w.failing_image);
    // paranoid mode agrees here
    CHECK(!preserves_symmetric(inner_psi(anti), 4, true).ok);
    const auto sym = MetabelianElement::monomial(spec, {2, 1, {1}}) -
                     MetabelianElement::monomial(spec, {2, 1, {2}});
    CHECK(preserves_symmetric(inner_psi(sym), 5).ok);
    CHECK(preserves_symmetric(linear_xi(Rational(3), Rational(2)), 5).ok);
    CHECK(!preserves_symmetric(LinearEndo(2, {{Rational(1), Rational(0)},
                                              {Rational(0), Rational(2)}}),
                               3)
               .ok);
  }
}
