#include <doctest.h>

#include "liesym/errors.hpp"
#include "liesym/permutation.hpp"

using liesym::Permutation;

TEST_SUITE("permutation") {
  TEST_CASE("construction validates bijections") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), liesym::DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), liesym::DomainError);
    CHECK_THROWS_AS(Permutation({1, 3}), liesym::DomainError);
  }

  TEST_CASE("images and composition convention") {
    const Permutation p({2, 3, 1});
    const Permutation q({2, 1, 3});
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    // (p o q)(i) = p(q(i))
    const auto pq = p.compose(q);
    for (int i = 1; i <= 3; ++i) CHECK(pq(i) == p(q(i)));
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(p.inverse().compose(p).is_identity());
    CHECK(Permutation::identity(4).is_identity());
    CHECK(p.to_string() == "(2 3 1)");
  }

  TEST_CASE("generator families") {
    const auto taus = Permutation::adjacent_transpositions(4);
    REQUIRE(taus.size() == 3);
    CHECK(taus[0] == Permutation({2, 1, 3, 4}));
    CHECK(taus[2] == Permutation({1, 2, 4, 3}));
    CHECK(Permutation::transposition(3, 1, 3) == Permutation({3, 2, 1}));

    const auto all3 = Permutation::all(3);
    REQUIRE(all3.size() == 6);
    CHECK(all3.front().is_identity());
    CHECK(all3.back() == Permutation({3, 2, 1}));
    for (size_t i = 1; i < all3.size(); ++i) CHECK(all3[i - 1].images() < all3[i].images());
  }
}
