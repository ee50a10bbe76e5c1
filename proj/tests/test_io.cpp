#include "doctest.h"

#include <fstream>

#include "qring/axioms.hpp"
#include "qring/errors.hpp"
#include "qring/io.hpp"

using namespace qring;

namespace {

ordered_json J(const char* text) { return ordered_json::parse(text); }

void expect_parse_error(const char* text, const char* needle) {
  try {
    parse_structure(J(text));
    FAIL_CHECK("accepted: ", text);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

} // namespace

TEST_CASE("every ring kind parses") {
  Structure a = parse_structure(J(R"({"ring":{"kind":"integers"},
    "relation":{"kind":"order","order":{"kind":"standard"}},
    "window":{"kind":"interval","lo":-10,"hi":10}})"));
  CHECK_FALSE(a.ring.is_finite());
  REQUIRE(a.window.has_value());
  CHECK(a.window->size() == 21);

  Structure b = parse_structure(J(R"({"ring":{"kind":"modular","n":6},
    "relation":{"kind":"trivial_at_prime","generators":[2]}})"));
  CHECK(b.ring.size() == 6);
  CHECK_FALSE(b.window.has_value());

  Structure c = parse_structure(J(R"({"ring":{"kind":"polynomial","vars":["X"]},
    "relation":{"kind":"valuation","valuation":{"kind":"monomial","weights":{"X":[1]}}},
    "window":{"kind":"poly","max_degree":2,"coeffs":[-1,1]}})"));
  CHECK(c.relation.valuation() != nullptr);
  CHECK(c.window->size() == 19);

  Structure d = parse_structure(J(R"({"ring":{"kind":"table",
    "add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]},
    "relation":{"kind":"matrix","rows":[[1,1],[0,1]]},
    "window":{"kind":"all"}})"));
  CHECK(d.ring.size() == 2);
  CHECK(d.relation.strict(d.ring.zero(), d.ring.one()));
}

TEST_CASE("valuation and order relation specs round through") {
  Structure v = parse_structure(J(R"({"ring":{"kind":"integers"},
    "relation":{"kind":"valuation","valuation":{"kind":"padic","p":3}},
    "window":{"kind":"interval","lo":-30,"hi":30}})"));
  Ring Z = v.ring;
  CHECK(v.relation.equiv(Z.from_integer(2), Z.from_integer(5)));
  CHECK(v.relation.strict(Z.from_integer(9), Z.from_integer(2)));

  Structure o = parse_structure(J(R"({"ring":{"kind":"polynomial","vars":["X","Y"]},
    "relation":{"kind":"order","order":{"kind":"poly_at_infinity","precedence":["Y","X"]}},
    "window":{"kind":"poly","max_degree":2,"coeffs":[-1,1]}})"));
  CHECK(o.relation.order_backend() != nullptr);

  // v = infinity on the prime (3), 0 elsewhere; v(xy) = v(x) + v(y) needs the
  // support to absorb products landing in it (12 = 2*6 with v(2) = v(6) = 0
  // would break, so 6 must carry infinity too)
  Structure t = parse_structure(J(R"({"ring":{"kind":"modular","n":12},
    "relation":{"kind":"valuation","valuation":{"kind":"table",
      "values":[null,0,0,null,0,0,null,0,0,null,0,0]}}})"));
  CHECK(t.relation.equiv(t.ring.from_integer(1), t.ring.from_integer(11)));
  CHECK(t.relation.strict(t.ring.from_integer(3), t.ring.from_integer(1)));

  Structure s = parse_structure(J(R"({"ring":{"kind":"polynomial","vars":["X","Y"]},
    "relation":{"kind":"counterexample_sec3"},
    "window":{"kind":"poly","max_degree":2,"coeffs":[-1,1]}})"));
  CHECK_FALSE(check_axioms(s.relation, s.window).ok());

  Structure cone = parse_structure(J(R"({"ring":{"kind":"modular","n":4},
    "relation":{"kind":"order","order":{"kind":"cone","elements":[0,1,2,3]}}})"));
  CHECK(cone.relation.leq(cone.ring.from_integer(3), cone.ring.from_integer(1)));
}

TEST_CASE("malformed documents are parse errors with located messages") {
  expect_parse_error(R"({"relation":{"kind":"matrix","rows":[[1]]}})", "ring");
  expect_parse_error(R"({"ring":{"kind":"integers"},
    "relation":{"kind":"order","order":{"kind":"standard"}},
    "window":{"kind":"interval","lo":-10,"hi":10},"extra":1})", "extra");
  expect_parse_error(R"({"ring":{"kind":"integer"},
    "relation":{"kind":"order","order":{"kind":"standard"}}})", "ring");
  expect_parse_error(R"({"ring":{"kind":"modular","n":6,"m":7},
    "relation":{"kind":"trivial_at_prime","generators":[2]}})", "m");
  expect_parse_error(R"({"ring":{"kind":"modular","n":6},
    "relation":{"kind":"matrix","rows":[[1,1],[0,1]]}})", "rows");
  expect_parse_error(R"({"ring":{"kind":"integers"},
    "relation":{"kind":"valuation","valuation":{"kind":"padic"}},
    "window":{"kind":"interval","lo":-10,"hi":10}})", "p");
  expect_parse_error(R"({"ring":{"kind":"polynomial","vars":["X","Y"]},
    "relation":{"kind":"valuation","valuation":{"kind":"monomial","weights":{"X":[1]}}},
    "window":{"kind":"poly","max_degree":2,"coeffs":[-1,1]}})", "weights");
  expect_parse_error(R"({"ring":{"kind":"integers"},
    "relation":{"kind":"order","order":{"kind":"standard"}},
    "window":{"kind":"interval","lo":-10}})", "hi");

  // structural rather than syntactic problems surface as their own codes
  try {
    parse_structure(J(R"({"ring":{"kind":"integers"},
      "relation":{"kind":"order","order":{"kind":"standard"}}})"));
    FAIL("accepted an infinite ring without a window");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_window);
  }
  try {
    parse_structure(J(R"({"ring":{"kind":"modular","n":6},
      "relation":{"kind":"matrix","rows":[[1,1,1,1,1,1],[0,1,1,1,1,1],[0,0,1,1,1,1],
        [0,0,0,1,1,1],[0,0,0,0,1,1],[0,0,0,0,0,1]]}})"));
  } catch (const error& e) {
    // matrix accepted structurally; only axiom checks may reject it later
    FAIL("matrix relations should load without axiom filtering: ", e.what());
  }
}

TEST_CASE("matrix entries outside {0,1} are rejected") {
  expect_parse_error(R"({"ring":{"kind":"modular","n":2},
    "relation":{"kind":"matrix","rows":[[1,2],[0,1]]}})", "rows");
}

TEST_CASE("reports serialize with witnesses and notes") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_order(Order::standard_integer(Z));
  Window w = Window::integer_interval(Z, -5, 5);
  ordered_json rep = report_to_json(check_axioms(rel, w), Z);
  CHECK(rep["ok"] == true);
  CHECK(rep["exhaustive"] == false);
  REQUIRE(rep["items"].is_array());
  CHECK(rep["items"][0]["name"] == "reflexive");
  CHECK(rep["items"][0]["status"] == "pass-on-window");
  for (const auto& item : rep["items"]) CHECK_FALSE(item.contains("witness"));

  ordered_json sup = support_to_json(compute_support(rel, w), Z);
  CHECK(sup["exhaustive"] == false);
  CHECK(sup["members"] == ordered_json::array({0}));
}

TEST_CASE("classification serializes the valued map in class order") {
  Ring Z = Ring::integers();
  QuasiOrder rel = QuasiOrder::from_valuation(Valuation::padic(Z, 2));
  Window w = Window::integer_interval(Z, -8, 8);
  Classification cls = classify(rel, w);
  ordered_json doc = classification_to_json(cls, Z);
  CHECK(doc["branch"] == "valued");
  CHECK(doc["group"]["kind"] == "free_rank_one");
  CHECK(doc["support"] == ordered_json::array({0}));
  // map pairs [x, k] with k the 2-adic value for window elements
  for (const auto& pair : doc["map"]) {
    i64 x = pair[0].get<i64>();
    i64 k = pair[1].get<i64>();
    i64 expect = 0;
    for (i64 m = x < 0 ? -x : x; m % 2 == 0; m /= 2) ++expect;
    CHECK(k == expect);
  }
  CHECK(doc["map"].size() == 16); // 17 window elements minus the support

  QuasiOrder std_rel = QuasiOrder::from_order(Order::standard_integer(Z));
  ordered_json odoc = classification_to_json(classify(std_rel, w), Z);
  CHECK(odoc["branch"] == "ordered");
  CHECK(odoc["cone_window"] == ordered_json::array({0, 1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK_FALSE(odoc.contains("group"));
}

TEST_CASE("element rendering covers scalars, polynomials and fractions") {
  Ring Z = Ring::integers();
  CHECK(render_element(Z, Z.from_integer(-7)) == "-7");
  CHECK(element_to_json(Z, Z.from_integer(-7)) == ordered_json(-7));

  Ring Q = Ring::polynomial({"X"});
  Element X(Polynomial::variable(1, 0));
  Element f = Q.sub(Q.mul(X, X), Q.one());
  CHECK(render_element(Q, f) == "X^2 - 1");
  CHECK(element_to_json(Q, f) == ordered_json("X^2 - 1"));

  Element frac{Tuple{Z.from_integer(3), Z.from_integer(2)}};
  CHECK(render_element(Z, frac) == "3/2");
}

TEST_CASE("structure files load from disk and reject bad syntax") {
  const char* good = "/tmp/qring_io_good.json";
  const char* bad = "/tmp/qring_io_bad.json";
  {
    std::ofstream out(good);
    out << R"({"ring":{"kind":"modular","n":6},
               "relation":{"kind":"trivial_at_prime","generators":[3]}})";
    std::ofstream outb(bad);
    outb << "{ not json";
  }
  Structure s = load_structure_file(good);
  CHECK(compute_support(s.relation).members.size() == 2);
  CHECK_THROWS_AS(load_structure_file(bad), error);
  CHECK_THROWS_AS(load_structure_file("/tmp/qring_io_missing.json"), error);
}
