#include "doctest.h"

#include "qring/errors.hpp"
#include "qring/order.hpp"
#include "qring/relation.hpp"
#include "qring/valuation.hpp"
#include "qring/window.hpp"

using namespace qring;

TEST_CASE("rank keys compare as documented") {
  CHECK(Rank::compare(Rank::bottom_rank(), Rank::scalar(-5)) < 0);
  CHECK(Rank::compare(Rank::scalar(2), Rank::scalar(3)) < 0);
  CHECK(Rank::compare(Rank::from_coords({{1, 1}}), Rank::from_coords({{0, 9}})) > 0);
  CHECK(Rank::compare(Rank::from_vector({1, 0}), Rank::from_vector({0, 7})) > 0);
  CHECK(Rank::from_coords({{2, 0}, {1, 3}}) == Rank::from_coords({{1, 3}}));
  CHECK_THROWS_AS(Rank::from_coords({{1, 1}, {1, 2}}), error); // positions must decrease
}

TEST_CASE("matrix relations validate reflexivity and totality") {
  Ring R = Ring::modular(2);
  CHECK_NOTHROW(QuasiOrder::matrix(R, {{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(QuasiOrder::matrix(R, {{0, 1}, {0, 1}}), error); // not reflexive
  CHECK_THROWS_AS(QuasiOrder::matrix(R, {{1, 0}, {0, 1}}), error); // not total
  CHECK_THROWS_AS(QuasiOrder::matrix(R, {{1, 1}}), error);         // wrong shape
}

TEST_CASE("valuation-induced relations invert the value comparison") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_valuation(Valuation::padic(Z, 2));
  // x <= y iff v(y) <= v(x): units sit on top
  CHECK(rel.equiv(Z.from_integer(3), Z.from_integer(5)));
  CHECK(rel.strict(Z.from_integer(4), Z.from_integer(6)));
  CHECK(rel.strict(Z.zero(), Z.from_integer(8)));
  CHECK(rel.leq(Z.zero(), Z.zero()));
  CHECK(rel.support_known_zero());
  CHECK(rel.valuation() != nullptr);
  CHECK(rel.order_backend() == nullptr);
}

TEST_CASE("order-induced relations are the order itself") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_order(Order::standard_integer(Z));
  CHECK(rel.strict(Z.from_integer(-3), Z.from_integer(2)));
  CHECK(rel.order_backend() != nullptr);
  CHECK(rel.valuation() == nullptr);
}

TEST_CASE("trivial relation at a prime sorts by membership") {
  Ring R = Ring::modular(6);
  QuasiOrder rel = QuasiOrder::trivial_at_prime(Ideal::span(R, {R.from_integer(2)}));
  // x <= y iff x in (2) or y not in (2)
  CHECK(rel.strict(R.from_integer(2), R.from_integer(1)));
  CHECK(rel.equiv(R.from_integer(0), R.from_integer(4)));
  CHECK(rel.equiv(R.from_integer(1), R.from_integer(3)));
  SupportSet s = compute_support(rel);
  CHECK(s.exhaustive);
  REQUIRE(s.members.size() == 3);
  CHECK(s.members[0] == R.from_integer(0));
  CHECK(s.members[1] == R.from_integer(2));
  CHECK(s.members[2] == R.from_integer(4));
  // non-prime ideals are rejected at construction
  CHECK_THROWS_AS(QuasiOrder::trivial_at_prime(Ideal::span(R, {R.one()})), error);
}

TEST_CASE("rank fast path agrees with the comparator") {
  Ring Z = Ring::integers();
  Window w = Window::integer_interval(Z, -30, 30);
  for (const QuasiOrder& rel : {QuasiOrder::from_valuation(Valuation::padic(Z, 3)),
                                QuasiOrder::from_order(Order::standard_integer(Z))}) {
    if (!rel.has_rank()) continue;
    for (const auto& x : w.elements())
      for (const auto& y : w.elements())
        CHECK(rel.leq(x, y) == (Rank::compare(rel.rank(x), rel.rank(y)) <= 0));
  }
}

TEST_CASE("support of an integer valuation relation is zero on windows") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_valuation(Valuation::padic(Z, 5));
  SupportSet s = compute_support(rel, Window::integer_interval(Z, -50, 50));
  CHECK_FALSE(s.exhaustive);
  REQUIRE(s.members.size() == 1);
  CHECK(s.members[0] == Z.zero());
  CHECK_THROWS_AS(compute_support(rel), error); // infinite ring needs a window
}
