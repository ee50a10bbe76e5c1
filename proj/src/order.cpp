#include "qring/order.hpp"

#include <algorithm>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

PositiveCone::PositiveCone(Ring ring, std::vector<Element> members) : ring_(std::move(ring)) {
  auto set = std::make_shared<std::unordered_set<Element, ElementHash>>();
  for (const auto& m : members) {
    ring_.require_element(m);
    if (set->insert(m).second) members_.push_back(m);
  }
  lookup_ = std::move(set);
}

bool PositiveCone::contains(const Element& x) const { return lookup_->count(x) != 0; }

std::string PositiveCone::describe() const {
  std::ostringstream out;
  out << "cone of " << members_.size() << " elements in " << ring_.describe();
  return out.str();
}

struct Order::Impl {
  OrderKind kind;
  Ring ring;
  std::vector<std::string> precedence;  // poly_at_infinity
  std::vector<std::size_t> var_order;   // precedence as variable indices, dominant first
  std::shared_ptr<const PositiveCone> cone;

  Impl(OrderKind k, Ring r) : kind(k), ring(std::move(r)) {}

  // Graded lex with the precedence permutation: degree first, then the
  // dominant variable's exponent, and so on down the list.
  bool monomial_less(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t v : var_order) {
      if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v);
    }
    return false;
  }

  bool positive_at_infinity(const Polynomial& p) const {
    if (p.is_zero()) return false;
    const Polynomial::Term* lead = &p.terms().front();
    for (const auto& t : p.terms()) {
      if (monomial_less(lead->first, t.first)) lead = &t;
    }
    return Rational(0) < lead->second;
  }

  bool leq(const Element& a, const Element& b) const {
    switch (kind) {
      case OrderKind::standard_integer:
        return a.scalar() <= b.scalar();
      case OrderKind::poly_at_infinity: {
        Element d = ring.sub(b, a);
        return ring.is_zero(d) || positive_at_infinity(d.polynomial());
      }
      case OrderKind::cone:
        return cone->contains(ring.sub(b, a));
    }
    fail(errc::structural, "unknown order kind");
  }
};

Order Order::standard_integer(const Ring& ring) {
  if (ring.kind() != RingKind::integers)
    fail(errc::unsupported, "standard order requires the integer backend, got " + ring.describe());
  return Order(std::make_shared<Impl>(OrderKind::standard_integer, ring));
}

Order Order::poly_at_infinity(const Ring& ring, const std::vector<std::string>& precedence) {
  if (ring.kind() != RingKind::polynomial)
    fail(errc::unsupported, "order at infinity requires a polynomial backend, got " + ring.describe());
  const auto& vars = ring.variables();
  if (precedence.size() != vars.size())
    fail(errc::structural, "precedence list must name every variable exactly once");
  std::vector<std::size_t> var_order;
  std::vector<bool> seen(vars.size(), false);
  for (const auto& name : precedence) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) fail(errc::structural, "precedence names unknown variable " + name);
    std::size_t idx = static_cast<std::size_t>(it - vars.begin());
    if (seen[idx]) fail(errc::structural, "precedence repeats variable " + name);
    seen[idx] = true;
    var_order.push_back(idx);
  }
  auto impl = std::make_shared<Impl>(OrderKind::poly_at_infinity, ring);
  impl->precedence = precedence;
  impl->var_order = std::move(var_order);
  return Order(std::move(impl));
}

Order Order::from_cone(const PositiveCone& cone) {
  auto impl = std::make_shared<Impl>(OrderKind::cone, cone.ring());
  impl->cone = std::make_shared<PositiveCone>(cone);
  return Order(std::move(impl));
}

OrderKind Order::kind() const { return impl_->kind; }
const Ring& Order::ring() const { return impl_->ring; }
bool Order::leq(const Element& a, const Element& b) const { return impl_->leq(a, b); }

std::string Order::describe() const {
  switch (impl_->kind) {
    case OrderKind::standard_integer:
      return "standard order on Z";
    case OrderKind::poly_at_infinity: {
      std::ostringstream out;
      out << "order at infinity on " << impl_->ring.describe() << " (";
      for (std::size_t i = 0; i < impl_->precedence.size(); ++i) {
        if (i) out << " > ";
        out << impl_->precedence[i];
      }
      out << ")";
      return out.str();
    }
    case OrderKind::cone:
      return "order induced by " + impl_->cone->describe();
  }
  fail(errc::structural, "unknown order kind");
}

const PositiveCone& Order::cone() const {
  if (impl_->kind != OrderKind::cone) fail(errc::structural, "order has no cone payload");
  return *impl_->cone;
}

const std::vector<std::string>& Order::precedence() const {
  if (impl_->kind != OrderKind::poly_at_infinity)
    fail(errc::structural, "order has no precedence payload");
  return impl_->precedence;
}

Order cone_to_order(const PositiveCone& cone) { return Order::from_cone(cone); }

PositiveCone order_to_cone(const Order& order, const Window& window) {
  const Ring& ring = order.ring();
  Element zero = ring.zero();
  std::vector<Element> members;
  for (const auto& x : window.elements()) {
    if (order.leq(zero, x)) members.push_back(x);
  }
  return PositiveCone(ring, std::move(members));
}

} // namespace qring
