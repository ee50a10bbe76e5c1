#include "doctest.h"

#include <set>

#include "qring/axioms.hpp"
#include "qring/enumerate.hpp"
#include "qring/errors.hpp"

using namespace qring;

TEST_CASE("weak order counts are the ordered Bell numbers") {
  const std::size_t expected[] = {1, 3, 13, 75, 541, 4683};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<WeakOrderCode> codes = enumerate_weak_orders(n);
    CHECK(codes.size() == expected[n - 1]);
    // no duplicates, and every code is a valid surjection onto 0..blocks-1
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& c : codes) {
      CHECK(seen.insert(c.level).second);
      std::set<std::uint8_t> used(c.level.begin(), c.level.end());
      CHECK(used.size() == c.block_count);
      CHECK(*used.rbegin() == c.block_count - 1);
    }
  }
  CHECK(enumerate_weak_orders(7).size() == 47293);
  CHECK_THROWS_AS(enumerate_weak_orders(9), error);
  CHECK_THROWS_AS(enumerate_weak_orders(0), error);
}

TEST_CASE("block decoding lists levels from least to greatest") {
  std::vector<WeakOrderCode> codes = enumerate_weak_orders(3);
  for (const auto& c : codes) {
    auto blocks = c.blocks();
    CHECK(blocks.size() == c.block_count);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (auto i : blocks[b]) CHECK(c.level[i] == b);
  }
}

TEST_CASE("quasi-order counts on Z/n equal the number of prime divisors") {
  const std::size_t expected[] = {1, 1, 1, 1, 2, 1, 1}; // n = 2..8
  for (i64 n = 2; n <= 8; ++n) {
    EnumerationResult r = enumerate_quasiorders(Ring::modular(n));
    CHECK(r.exhaustive);
    CHECK(r.relations.size() == expected[n - 2]);
    for (const QuasiOrder& rel : r.relations) {
      CHECK(check_axioms(rel).ok());
      CHECK(check_support_prime(rel).ok());
    }
  }
}

TEST_CASE("the two quasi-orders on Z/6 have supports (2) and (3)") {
  EnumerationResult r = enumerate_quasiorders(Ring::modular(6));
  REQUIRE(r.relations.size() == 2);
  std::set<std::size_t> sizes;
  for (const QuasiOrder& rel : r.relations) sizes.insert(compute_support(rel).members.size());
  CHECK(sizes == std::set<std::size_t>{2, 3}); // {0,3} and {0,2,4}
}

TEST_CASE("prime ideal enumeration matches hand counts") {
  std::vector<Ideal> p12 = enumerate_prime_ideals(Ring::modular(12));
  REQUIRE(p12.size() == 2);
  CHECK(p12[0].size() == 4); // (3) = {0,3,6,9} listed before (2) by size
  CHECK(p12[1].size() == 6); // (2) = {0,2,4,6,8,10}

  std::vector<Ideal> p7 = enumerate_prime_ideals(Ring::modular(7));
  REQUIRE(p7.size() == 1);
  CHECK(p7[0].is_zero_ideal());

  CHECK(enumerate_prime_ideals(Ring::modular(8)).size() == 1);  // (2) only
  CHECK(enumerate_prime_ideals(Ring::modular(30)).size() == 3); // (2),(3),(5)
}

TEST_CASE("large finite rings fall back to theory-guided construction") {
  EnumerationResult r = enumerate_quasiorders(Ring::modular(12));
  CHECK_FALSE(r.exhaustive);
  CHECK(r.relations.size() == 2);
  for (const QuasiOrder& rel : r.relations) CHECK(check_axioms(rel).ok());
  // the cap is adjustable but guarded at the weak-order limit
  EnumerationResult r2 = enumerate_quasiorders(Ring::modular(4), 3);
  CHECK_FALSE(r2.exhaustive);
  CHECK(r2.relations.size() == 1);
  CHECK_THROWS_AS(enumerate_quasiorders(Ring::modular(12), 12), error);
}

TEST_CASE("cross-checking the dichotomy on small rings") {
  for (i64 n : {2, 3, 6, 8}) {
    Report rep = cross_check_dichotomy(Ring::modular(n));
    CHECK(rep.ok());
    for (const char* name :
         {"all_valued", "none_ordered", "supports_prime", "support_bijection", "roundtrip"}) {
      REQUIRE(rep.find(name) != nullptr);
      CHECK(rep.find(name)->status == CheckStatus::pass);
    }
  }
}

TEST_CASE("no total order on a finite ring passes the order axioms") {
  // all 6 strict total orders on Z/3 fail (finite rings admit no ring order)
  Ring R = Ring::modular(3);
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perm) {
    std::vector<std::vector<std::uint8_t>> rows(3, std::vector<std::uint8_t>(3, 0));
    std::vector<std::uint8_t> pos(3);
    for (int i = 0; i < 3; ++i) pos[p[i]] = i;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) rows[x][y] = pos[x] <= pos[y];
    QuasiOrder rel = QuasiOrder::matrix(R, rows);
    CHECK_FALSE(check_order_axioms(rel).ok());
  }
}
