#include "doctest.h"

#include "qring/axioms.hpp"
#include "qring/errors.hpp"
#include "qring/gallery.hpp"
#include "qring/polynomial.hpp"

using namespace qring;

TEST_CASE("the builtin catalog is stable") {
  const std::vector<std::string>& names = builtin_names();
  REQUIRE(names.size() == 11);
  CHECK(names.front() == "z_standard");
  CHECK(names.back() == "sec3");
  for (const std::string& name : names) {
    BuiltinStructure b = builtin(name);
    CHECK(b.name == name);
    CHECK(b.window.size() >= 3);
  }
  CHECK(builtin("z_standard").window.size() == 41);
  CHECK(builtin("z_padic_2").window.size() == 129);
  CHECK(builtin("sec3").window.size() == 761);
}

TEST_CASE("unknown builtin names are lookup errors") {
  for (const char* name : {"nope", "zmod_trivial_12", "zmod_trivial__2", "zmod_trivial_x_y"}) {
    try {
      builtin(name);
      FAIL("accepted unknown builtin");
    } catch (const error& e) {
      CHECK(e.code() == errc::lookup);
    }
  }
}

TEST_CASE("parametric modular builtins verify primality") {
  BuiltinStructure b = builtin("zmod_trivial_9_3");
  CHECK(b.ring.size() == 9);
  CHECK(check_axioms(b.relation).ok());
  CHECK(compute_support(b.relation).members.size() == 3);

  CHECK_THROWS_AS(builtin("zmod_trivial_12_4"), error); // (4) not prime in Z/12
  CHECK_THROWS_AS(builtin("zmod_trivial_6_5"), error);  // (5) = Z/6, not proper
}

TEST_CASE("the staged comparator ranks any Y term above every power of X") {
  Ring Q = Ring::polynomial({"X", "Y"});
  QuasiOrder rel = dominant_monomial_relation(Q);
  Element X(Polynomial::variable(2, 0));
  Element Y(Polynomial::variable(2, 1));
  Element X2 = Q.mul(X, X);
  Element X3 = Q.mul(X2, X);

  CHECK(rel.strict(X, X2));
  CHECK(rel.strict(X3, Y));
  CHECK(rel.equiv(Y, Q.mul(X2, Y)));
  CHECK(rel.equiv(Q.mul(Q.from_integer(5), X3), X3));
  CHECK(rel.leq(Q.add(X, Y), Q.mul(Y, Y)));
  CHECK(rel.strict(Q.zero(), Q.from_integer(-1))); // 0 < -1: not an order
  CHECK(rel.equiv(Q.from_integer(-1), Q.one()));
  CHECK(rel.support_known_zero());

  CHECK_THROWS_AS(dominant_monomial_relation(Ring::polynomial({"X"})), error);
  CHECK_THROWS_AS(dominant_monomial_relation(Ring::integers()), error);
}

TEST_CASE("the counterexample report isolates the QR5 failure") {
  Ring Q = Ring::polynomial({"X", "Y"});
  Window w = Window::polynomial(Q, 2, {-1, 1}); // small window keeps this fast
  Report rep = counterexample_report(w);
  CHECK_FALSE(rep.ok());

  for (const char* name : {"reflexive", "transitive", "total", "O1", "O2", "O3", "QR2", "QR4",
                           "not_an_order", "canonical_witness"}) {
    REQUIRE(rep.find(name) != nullptr);
    CHECK(rep.find(name)->status != CheckStatus::fail);
  }
  const CheckItem* qr5 = rep.find("QR5");
  REQUIRE(qr5 != nullptr);
  CHECK(qr5->status == CheckStatus::fail);
  const CheckItem* canon = rep.find("canonical_witness");
  CHECK(canon->note.find("X") != std::string::npos);

  CHECK_THROWS_AS(counterexample_report(Window::integer_interval(Ring::integers(), -5, 5)),
                  error);
}
