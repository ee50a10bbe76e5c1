#include "doctest.h"

#include "qring/errors.hpp"
#include "qring/ideal.hpp"
#include "qring/polynomial.hpp"
#include "qring/ring.hpp"
#include "qring/window.hpp"

using namespace qring;

TEST_CASE("modular ring arithmetic canonicalizes") {
  Ring R = Ring::modular(12);
  CHECK(R.size() == 12);
  CHECK(R.from_integer(-1) == R.from_integer(11));
  CHECK(R.add(R.from_integer(7), R.from_integer(8)) == R.from_integer(3));
  CHECK(R.mul(R.from_integer(4), R.from_integer(3)) == R.zero());
  CHECK(R.to_string(R.from_integer(5)) == "5");
  CHECK_FALSE(R.is_integral_domain());
}

TEST_CASE("integers are exact and overflow-guarded") {
  Ring Z = Ring::integers();
  CHECK(Z.is_integral_domain());
  CHECK_FALSE(Z.is_finite());
  CHECK(Z.sub(Z.from_integer(3), Z.from_integer(5)) == Z.from_integer(-2));
  CHECK_THROWS_AS(Z.mul(Z.from_integer(i64{1} << 62), Z.from_integer(4)), error);
}

TEST_CASE("polynomial ring basics") {
  Ring Q = Ring::polynomial({"X", "Y"});
  Element X(Polynomial::variable(2, 0));
  Element Y(Polynomial::variable(2, 1));
  Element f = Q.add(Q.mul(X, X), Q.mul(Q.from_integer(-2), Y));
  CHECK(Q.to_string(f) == "X^2 - 2*Y");
  CHECK(Q.mul(f, Q.zero()) == Q.zero());
  CHECK(Q.is_integral_domain());
  // graded lex: X^2 > XY ordering is by total degree first, then lex
  Polynomial p = X.polynomial() * Y.polynomial() + X.polynomial();
  CHECK(p.leading_monomial().degree() == 2);
}

TEST_CASE("table ring from explicit tables") {
  // Z/2 as an explicit table
  Ring R = Ring::table({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
  CHECK(R.size() == 2);
  CHECK(R.add(R.elements()[1], R.elements()[1]) == R.elements()[0]);
  CHECK(R.one() == R.elements()[1]);
}

TEST_CASE("prime ideal verdicts on finite rings") {
  Ring R = Ring::modular(12);
  CHECK(is_prime_ideal(R, Ideal::span(R, {R.from_integer(2)})).ok());
  CHECK(is_prime_ideal(R, Ideal::span(R, {R.from_integer(3)})).ok());

  PrimalityReport four = is_prime_ideal(R, Ideal::span(R, {R.from_integer(4)}));
  CHECK_FALSE(four.ok());
  REQUIRE(four.witness.has_value());
  CHECK(four.witness->first == R.from_integer(2));
  CHECK(four.witness->second == R.from_integer(2));

  Ring S = Ring::modular(6);
  PrimalityReport zero = is_prime_ideal(S, Ideal::span(S, {S.zero()}));
  CHECK_FALSE(zero.ok());
  REQUIRE(zero.witness.has_value());
  CHECK(zero.witness->first == S.from_integer(2));
  CHECK(zero.witness->second == S.from_integer(3));
}

TEST_CASE("prime ideal verdicts on the integers") {
  Ring Z = Ring::integers();
  CHECK(is_prime_ideal(Z, Ideal::integer_multiples(Z, 0)).ok());
  CHECK(is_prime_ideal(Z, Ideal::integer_multiples(Z, 7)).ok());
  CHECK_FALSE(is_prime_ideal(Z, Ideal::integer_multiples(Z, 6)).ok());
  CHECK_FALSE(is_prime_ideal(Z, Ideal::integer_multiples(Z, 1)).ok());
}

TEST_CASE("interval windows validate and enumerate symmetrically") {
  Ring Z = Ring::integers();
  Window w = Window::integer_interval(Z, -20, 20);
  CHECK(w.size() == 41);
  CHECK_FALSE(w.exhaustive());
  CHECK_THROWS_AS(Window::integer_interval(Z, -3, 5), error);  // not symmetric
  CHECK_THROWS_AS(Window::integer_interval(Z, 0, 0), error);   // misses 1 and -1
  CHECK(Window::integer_interval(Z, -1, 1).size() == 3);       // degenerate minimum
}

TEST_CASE("polynomial windows have the frozen sizes") {
  // 0, c*m, and c1*m1 + c2*m2 over distinct monomials, coefficients closed
  // under negation. Two variables, degree <= 3, coeffs {-2,-1,1,2}:
  // 1 + 4*10 + C(10,2)*16 = 761. One variable, degree <= 2: 1 + 4*3 + C(3,2)*16 = 61.
  Ring Q2 = Ring::polynomial({"X", "Y"});
  CHECK(Window::polynomial(Q2, 3, {-2, -1, 1, 2}).size() == 761);
  Ring Q1 = Ring::polynomial({"X"});
  CHECK(Window::polynomial(Q1, 2, {-2, -1, 1, 2}).size() == 61);
  // coefficient lists are closed under negation automatically
  CHECK(Window::polynomial(Q1, 2, {1, 2}).size() == 61);
  Window w = Window::all(Ring::modular(6));
  CHECK(w.size() == 6);
  CHECK(w.exhaustive());
  CHECK_THROWS_AS(Window::all(Q1), error);
}
