#include "qring/gallery.hpp"

#include <memory>
#include <utility>

#include "qring/axioms.hpp"
#include "qring/errors.hpp"
#include "qring/ideal.hpp"
#include "qring/order.hpp"
#include "qring/valuation.hpp"

namespace qring {
namespace {

class DominantMonomialRelation final : public RelationImpl {
public:
  explicit DominantMonomialRelation(Ring ring) : ring_(std::move(ring)) {
    if (ring_.kind() != RingKind::polynomial || ring_.variables().size() != 2)
      fail(errc::structural,
           "the dominant-monomial relation needs a polynomial ring in exactly two variables");
  }

  RelationKind kind() const override { return RelationKind::custom; }
  const Ring& ring() const override { return ring_; }
  bool leq(const Element& x, const Element& y) const override {
    return Rank::compare(rank(x), rank(y)) <= 0;
  }
  bool has_rank() const override { return true; }
  // Stages: bottom for 0, then pure-X polynomials keyed by X degree at
  // position 0, then one top class (position 1) for anything with a Y term.
  Rank rank(const Element& x) const override {
    const Polynomial& p = x.polynomial();
    if (p.is_zero()) return Rank::bottom_rank();
    i64 x_degree = 0;
    for (const auto& [mono, coeff] : p.terms()) {
      if (mono.exp(1) > 0) return Rank::from_coords({{1, 1}});
      x_degree = std::max<i64>(x_degree, mono.exp(0));
    }
    return Rank::from_coords({{0, x_degree}});
  }
  bool support_known_zero() const override { return true; }
  std::string describe() const override {
    const auto& vars = ring_.variables();
    return "dominant-monomial relation on " + ring_.describe() + " (any " + vars[1] +
           " term dominates every power of " + vars[0] + ")";
  }

private:
  Ring ring_;
};

void copy_item(Report& out, const Report& from, const std::string& name,
               const std::string& as) {
  const CheckItem* it = from.find(name);
  if (it == nullptr) fail(errc::structural, "missing check item " + name);
  out.add(as, it->status, it->witness, it->note);
}

} // namespace

QuasiOrder dominant_monomial_relation(const Ring& ring) {
  return QuasiOrder::from_impl(std::make_shared<DominantMonomialRelation>(ring));
}

Report counterexample_report(const Window& window) {
  if (window.kind() != WindowKind::polynomial)
    fail(errc::invalid_window, "the counterexample report needs a polynomial window");
  const Ring& ring = window.ring();
  QuasiOrder rel = dominant_monomial_relation(ring);

  Report axioms = check_axioms(rel, window);
  Report orders = check_order_axioms(rel, window);

  Report rep;
  rep.subject = rel.describe();
  rep.exhaustive = false;
  copy_item(rep, axioms, "reflexive", "reflexive");
  copy_item(rep, axioms, "transitive", "transitive");
  copy_item(rep, axioms, "total", "total");
  copy_item(rep, axioms, "QR1", "O1");
  copy_item(rep, orders, "O2", "O2");
  copy_item(rep, axioms, "QR3", "O3");
  copy_item(rep, axioms, "QR4", "QR4");
  copy_item(rep, axioms, "QR2", "QR2");
  copy_item(rep, axioms, "QR5", "QR5");

  const Element zero = ring.zero();
  const Element minus_one = ring.from_integer(-1);
  if (rel.strict(zero, minus_one))
    rep.add("not_an_order", CheckStatus::pass, {},
            "0 < -1 holds, so the relation is not a ring order");
  else
    rep.add("not_an_order", CheckStatus::fail, {minus_one},
            "expected 0 < -1 under the dominant-monomial relation");

  const Element X(Polynomial::variable(2, 0));
  const Element Y(Polynomial::variable(2, 1));
  const Element X2 = ring.mul(X, X);
  const Element XY = ring.mul(X, Y);
  const Element X2Y = ring.mul(X2, Y);
  const auto& vars = ring.variables();
  const std::string x = vars[0], y = vars[1];
  if (rel.strict(X, X2) && rel.strict(zero, Y) && rel.equiv(XY, X2Y))
    rep.add("canonical_witness", CheckStatus::pass, {},
            x + " < " + x + "^2 and 0 < " + y + ", yet " + x + "*" + y + " ~ " + x + "^2*" + y +
                ": cancellation QR5 fails at (" + x + ", " + x + "^2, " + y + ")");
  else
    rep.add("canonical_witness", CheckStatus::fail, {X, X2, Y},
            "the triple (" + x + ", " + x + "^2, " + y + ") no longer exhibits the QR5 failure");
  return rep;
}

namespace {

Window default_poly_window(const Ring& ring, i64 max_degree) {
  return Window::polynomial(ring, max_degree, {-2, -1, 1, 2});
}

BuiltinStructure make_zmod_trivial(const std::string& name, i64 n, i64 p) {
  if (n < 2 || n > 4096)
    fail(errc::lookup, "builtin " + name + ": modulus must lie in [2, 4096]");
  Ring ring = Ring::modular(n);
  Ideal prime = Ideal::span(ring, {ring.from_integer(p)});
  PrimalityReport verdict = is_prime_ideal(ring, prime);
  if (!verdict.ok())
    fail(errc::lookup, "builtin " + name + ": (" + std::to_string(p) + ") is not prime in Z/" +
                           std::to_string(n) + ": " + verdict.note);
  return {name, ring, QuasiOrder::trivial_at_prime(prime), Window::all(ring)};
}

/// zmod_trivial_<n>_<p> with both parameters decimal and nonnegative.
bool parse_zmod_trivial(const std::string& name, i64& n, i64& p) {
  const std::string prefix = "zmod_trivial_";
  if (name.rfind(prefix, 0) != 0) return false;
  const std::string rest = name.substr(prefix.size());
  auto sep = rest.find('_');
  if (sep == std::string::npos || sep == 0 || sep + 1 >= rest.size()) return false;
  const std::string ns = rest.substr(0, sep), ps = rest.substr(sep + 1);
  auto all_digits = [](const std::string& s) {
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return !s.empty() && s.size() <= 6;
  };
  if (!all_digits(ns) || !all_digits(ps)) return false;
  n = std::stoll(ns);
  p = std::stoll(ps);
  return true;
}

} // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "z_standard",       "z_padic_2",        "z_padic_3",        "z_padic_5",
      "poly_at_infinity", "poly_x_adic",      "zmod_trivial_6_2", "zmod_trivial_6_3",
      "zmod_trivial_12_2", "zmod_trivial_12_3", "sec3",
  };
  return names;
}

BuiltinStructure builtin(const std::string& name) {
  if (name == "z_standard") {
    Ring z = Ring::integers();
    return {name, z, QuasiOrder::from_order(Order::standard_integer(z)),
            Window::integer_interval(z, -20, 20)};
  }
  if (name == "z_padic_2" || name == "z_padic_3" || name == "z_padic_5") {
    Ring z = Ring::integers();
    i64 p = name.back() - '0';
    return {name, z, QuasiOrder::from_valuation(Valuation::padic(z, p)),
            Window::integer_interval(z, -64, 64)};
  }
  if (name == "poly_at_infinity") {
    Ring qx = Ring::polynomial({"X"});
    return {name, qx, QuasiOrder::from_order(Order::poly_at_infinity(qx, {"X"})),
            default_poly_window(qx, 2)};
  }
  if (name == "poly_x_adic") {
    Ring qx = Ring::polynomial({"X"});
    return {name, qx, QuasiOrder::from_valuation(Valuation::monomial(qx, {{1}})),
            default_poly_window(qx, 2)};
  }
  if (name == "sec3") {
    Ring qxy = Ring::polynomial({"X", "Y"});
    return {name, qxy, dominant_monomial_relation(qxy), default_poly_window(qxy, 3)};
  }
  i64 n = 0, p = 0;
  if (parse_zmod_trivial(name, n, p)) return make_zmod_trivial(name, n, p);

  std::string known;
  for (const auto& b : builtin_names()) {
    if (!known.empty()) known += ", ";
    known += b;
  }
  fail(errc::lookup, "unknown builtin " + name + " (available: " + known +
                         ", and zmod_trivial_<n>_<p> for any prime ideal (p) in Z/n)");
}

} // namespace qring
