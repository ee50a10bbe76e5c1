#include "doctest.h"

#include "qring/axioms.hpp"
#include "qring/errors.hpp"
#include "qring/fraction.hpp"
#include "qring/ideal.hpp"
#include "qring/quotient.hpp"
#include "qring/value_group.hpp"

using namespace qring;

TEST_CASE("quotient of Z/12 by the class of 0 at (3)") {
  Ring R = Ring::modular(12);
  QuasiOrder rel = QuasiOrder::trivial_at_prime(Ideal::span(R, {R.from_integer(3)}));
  QuotientRingView view = quotient_quasiorder(rel);
  CHECK_FALSE(view.identity);
  CHECK(view.quotient.size() == 3);
  REQUIRE(view.representatives.size() == 3);
  CHECK(view.representatives[0] == R.from_integer(0));
  CHECK(view.representatives[1] == R.from_integer(1));
  CHECK(view.representatives[2] == R.from_integer(2));
  // the induced relation on the quotient has support {0}
  SupportSet qs = compute_support(view.quotient_relation);
  CHECK(qs.members.size() == 1);
  // projection respects the ring maps
  Element seven = R.from_integer(7);
  Element eleven = R.from_integer(11);
  CHECK(view.project(R.mul(seven, eleven)) ==
        view.quotient.mul(view.project(seven), view.project(eleven)));
}

TEST_CASE("lifting the quotient valuation reproduces the original relation") {
  Ring R = Ring::modular(12);
  QuasiOrder rel = QuasiOrder::trivial_at_prime(Ideal::span(R, {R.from_integer(3)}));
  QuotientRingView view = quotient_quasiorder(rel);
  Valuation qv = Valuation::trivial(Ideal::span(view.quotient, {view.quotient.zero()}));
  Valuation lv = lift_valuation(qv, view);
  CHECK(lv.support_ideal().contains(R.from_integer(9)));
  const OrderedAbelianGroup& g = lv.group();
  for (const Element& x : R.elements())
    for (const Element& y : R.elements())
      CHECK(rel.leq(x, y) == val_leq(g, lv.vmap(y), lv.vmap(x)));
}

TEST_CASE("quotient of Z/6 at (2) is the two-element field") {
  Ring R = Ring::modular(6);
  QuasiOrder rel = QuasiOrder::trivial_at_prime(Ideal::span(R, {R.from_integer(2)}));
  QuotientRingView view = quotient_quasiorder(rel);
  CHECK(view.quotient.size() == 2);
  CHECK(view.quotient_relation.strict(view.quotient.zero(), view.quotient.one()));
  Valuation lv = lift_valuation(
      Valuation::trivial(Ideal::span(view.quotient, {view.quotient.zero()})), view);
  CHECK_FALSE(lv.vmap(R.from_integer(3)).inf); // 3 is a unit mod the support
  CHECK(lv.vmap(R.from_integer(4)).inf);       // 4 lies in the support
}

TEST_CASE("support {0} gives the identity view and symbolic supports give Z/m") {
  Ring Z = Ring::integers();
  Window w = Window::integer_interval(Z, -20, 20);

  QuasiOrder padic = QuasiOrder::from_valuation(Valuation::padic(Z, 2));
  QuotientRingView idview = quotient_quasiorder(padic, w);
  CHECK(idview.identity);
  CHECK(idview.quotient.describe() == Z.describe());
  // the identity view lifts an order unchanged
  Order lifted = lift_order(Order::standard_integer(Z), idview);
  CHECK(lifted.leq(Z.from_integer(-3), Z.from_integer(2)));

  QuasiOrder triv = QuasiOrder::trivial_at_prime(Ideal::integer_multiples(Z, 5));
  QuotientRingView zview = quotient_quasiorder(triv, w);
  CHECK_FALSE(zview.identity);
  CHECK(zview.modulus == 5);
  CHECK(zview.quotient.size() == 5);
  CHECK(zview.project(Z.from_integer(7)) == zview.quotient.from_integer(2));
  Valuation lv = lift_valuation(
      Valuation::trivial(Ideal::span(zview.quotient, {zview.quotient.zero()})), zview);
  CHECK(lv.vmap(Z.from_integer(10)).inf);
  CHECK_FALSE(lv.vmap(Z.from_integer(7)).inf);

  // no finite ring carries a ring order, so non-identity order lifts refuse
  Ring R6 = Ring::modular(6);
  QuasiOrder rel6 = QuasiOrder::trivial_at_prime(Ideal::span(R6, {R6.from_integer(2)}));
  QuotientRingView v6 = quotient_quasiorder(rel6);
  PositiveCone qcone(v6.quotient, v6.quotient.elements());
  CHECK_THROWS_AS(lift_order(Order::from_cone(qcone), v6), error);
}

TEST_CASE("fraction comparison is the closed form in the base ring") {
  Ring Z = Ring::integers();
  FractionExtension pf =
      fraction_extension(QuasiOrder::from_valuation(Valuation::padic(Z, 2)));
  auto fr = [&](i64 n, i64 d) { return pf.make(Z.from_integer(n), Z.from_integer(d)); };
  // 3/1 has value 0, 1/2 has value -1; lower value sits higher
  CHECK(pf.leq(fr(3, 1), fr(1, 2)));
  CHECK_FALSE(pf.leq(fr(1, 2), fr(3, 1)));
  CHECK(pf.equal(fr(2, 4), fr(1, 2)));
  CHECK(pf.equiv(fr(2, 4), fr(1, 2)));
  CHECK_THROWS_AS(pf.make(Z.one(), Z.zero()), error);
  // values need not be window-bounded: v(1/1) = 0 <= 3 = -v(9/8)... reversed order
  CHECK(pf.leq(fr(1, 1), fr(9, 8)));
  CHECK_FALSE(pf.leq(fr(9, 8), fr(1, 1)));
  // arithmetic
  CHECK(pf.equal(pf.add(fr(1, 2), fr(1, 3)), fr(5, 6)));
  CHECK(pf.equal(pf.mul(fr(1, 2), fr(2, 3)), fr(1, 3)));
  CHECK(pf.equal(pf.neg(fr(1, 2)), fr(-1, 2)));
  CHECK(pf.to_string(fr(-1, 2)) == "-1/2");

  FractionExtension sf =
      fraction_extension(QuasiOrder::from_order(Order::standard_integer(Z)));
  auto sr = [&](i64 n, i64 d) { return sf.make(Z.from_integer(n), Z.from_integer(d)); };
  CHECK(sf.leq(sr(1, 2), sr(3, 4)));  // 1*2*16 = 32 <= 48 = 3*4*4
  CHECK(sf.leq(sr(1, -2), sr(1, 3))); // -1/2 <= 1/3 despite the negative denominator
  CHECK_FALSE(sf.leq(sr(1, 3), sr(1, -2)));

  // non-domains and relations with larger support are rejected
  Ring R = Ring::modular(6);
  CHECK_THROWS_AS(
      fraction_extension(QuasiOrder::trivial_at_prime(Ideal::span(R, {R.from_integer(2)}))),
      error);
}

TEST_CASE("fraction windows group by field equality") {
  Ring Z = Ring::integers();
  FractionExtension ext =
      fraction_extension(QuasiOrder::from_order(Order::standard_integer(Z)));
  FractionWindow fw = fraction_window(ext, Window::integer_interval(Z, -4, 4));
  CHECK(fw.all.size() == 9 * 8);
  REQUIRE(fw.class_of.size() == fw.all.size());
  // -4..4 over nonzero denominators: 0 plus +-(reduced q in (0,4]/[1,4]) = 23 classes
  CHECK(fw.representatives.size() == 23);
  for (std::size_t i = 0; i < fw.all.size(); ++i)
    CHECK(ext.equal(fw.all[i], fw.representatives[fw.class_of[i]]));
}

TEST_CASE("the field checks pass for both branches on small windows") {
  Ring Z = Ring::integers();
  for (const QuasiOrder& rel : {QuasiOrder::from_valuation(Valuation::padic(Z, 2)),
                                QuasiOrder::from_order(Order::standard_integer(Z))}) {
    FractionExtension ext = fraction_extension(rel);
    Report rep = check_fraction_extension(ext, Window::integer_interval(Z, -6, 6));
    CHECK(rep.ok());
    for (const char* name :
         {"well_defined", "reflexive", "transitive", "total", "Q1", "Q2", "Q3", "embedding"}) {
      REQUIRE(rep.find(name) != nullptr);
      CHECK(rep.find(name)->status != CheckStatus::fail);
      CHECK(rep.find(name)->status != CheckStatus::skipped);
    }
  }
}

TEST_CASE("value monoid classes follow the 2-adic levels") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_valuation(Valuation::padic(Z, 2));
  Window w = Window::integer_interval(Z, -16, 16);
  ValueMonoid m = build_value_monoid(rel, w);
  CHECK(m.window_class_count() == 5); // values 0..4 occur in [-16,16]
  auto cls = [&](i64 k) { return m.class_of(Z.from_integer(k)); };
  CHECK(cls(3) == cls(9));
  CHECK(cls(1) == cls(3));
  CHECK(cls(1) != cls(2));
  CHECK(m.one_class() == cls(1));
  CHECK(m.mul(cls(2), cls(2)) == cls(4));
  CHECK(m.leq(cls(1), cls(2)));
  CHECK_FALSE(m.leq(cls(2), cls(1)));
  // window representatives are first-seen in scan order (lo to hi)
  CHECK(m.representative(cls(-16)) == Z.from_integer(-16));
  CHECK(m.representative(cls(1)) == Z.from_integer(-15));
}

TEST_CASE("the completed group behaves like the integers under addition") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_valuation(Valuation::padic(Z, 2));
  ValueMonoid m = build_value_monoid(rel, Window::integer_interval(Z, -16, 16));
  OrderedAbelianGroup g = grothendieck_group(m);
  CHECK(g.kind() == GroupKind::formal_difference);
  auto mv = [&](i64 k) { return monoid_value(m, Z.from_integer(k)); };
  CHECK(g.eq(mv(1), g.zero()));
  CHECK(g.eq(mv(4), g.add(mv(2), mv(2))));
  CHECK(g.eq(g.sub(mv(4), mv(2)), mv(2)));
  CHECK(g.leq(mv(2), mv(4)));
  CHECK_FALSE(g.leq(mv(4), mv(2)));
  CHECK(g.lt(g.neg(mv(2)), mv(2)));
  CHECK(check_ordered_group(g, {mv(1), mv(2), mv(4), mv(8), g.neg(mv(2))}) == std::nullopt);

  // 3-adic variant: [9] - [3] = [3] - [1]
  QuasiOrder rel3 = QuasiOrder::from_valuation(Valuation::padic(Z, 3));
  ValueMonoid m3 = build_value_monoid(rel3, Window::integer_interval(Z, -27, 27));
  OrderedAbelianGroup g3 = grothendieck_group(m3);
  auto mv3 = [&](i64 k) { return monoid_value(m3, Z.from_integer(k)); };
  CHECK(g3.eq(g3.sub(mv3(9), mv3(3)), mv3(3)));
}

TEST_CASE("non-cancellative relations are refused by the monoid builder") {
  Ring R = Ring::modular(4);
  // strict chain 0 < 1 < 2 < 3: support {0}, but 1*2 ~ 3*2 while 1 !~ 3
  std::vector<std::vector<std::uint8_t>> rows(4, std::vector<std::uint8_t>(4, 0));
  for (int x = 0; x < 4; ++x)
    for (int y = x; y < 4; ++y) rows[x][y] = 1;
  QuasiOrder rel = QuasiOrder::matrix(R, rows);
  CHECK_THROWS_AS(build_value_monoid(rel, Window::all(R)), error);

  // larger supports are a precondition failure
  QuasiOrder triv = QuasiOrder::trivial_at_prime(Ideal::span(R, {R.from_integer(2)}));
  CHECK_THROWS_AS(build_value_monoid(triv, Window::all(R)), error);
}
