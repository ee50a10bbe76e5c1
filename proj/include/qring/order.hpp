#pragma once

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "qring/element.hpp"
#include "qring/ring.hpp"
#include "qring/window.hpp"

namespace qring {

/// Explicit cone carrier: a deduplicated subset of a ring intended as the
/// nonnegative elements of an order. Cone axioms are deliberately not
/// enforced here; arbitrary subsets are admitted so that the relations they
/// induce can be examined (translation invariance holds for any subset).
class PositiveCone {
public:
  PositiveCone(Ring ring, std::vector<Element> members);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& members() const { return members_; }
  bool contains(const Element& x) const;
  std::string describe() const;

private:
  Ring ring_;
  std::vector<Element> members_;
  std::shared_ptr<const std::unordered_set<Element, ElementHash>> lookup_;
};

enum class OrderKind { standard_integer, poly_at_infinity, cone };

/// Total-order backend: a decidable comparator a <= b on a ring. Whether a
/// backend really is an ordered ring is decided by the axiom checks, not at
/// construction.
class Order {
public:
  /// Usual magnitude order on the integer backend.
  static Order standard_integer(const Ring& ring);
  /// Order on a polynomial backend where variables dominate constants and
  /// earlier precedence entries dominate later ones: f <= g iff f = g or
  /// the leading coefficient of g - f under precedence graded lex is > 0.
  static Order poly_at_infinity(const Ring& ring, const std::vector<std::string>& precedence);
  /// Difference order of a subset: a <= b iff b - a lies in the cone.
  static Order from_cone(const PositiveCone& cone);

  OrderKind kind() const;
  const Ring& ring() const;
  bool leq(const Element& a, const Element& b) const;
  std::string describe() const;

  /// Backend payload accessors; wrong-kind access is a structural error.
  const PositiveCone& cone() const;
  const std::vector<std::string>& precedence() const;

private:
  struct Impl;
  explicit Order(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// The two directions of the cone/order correspondence.
Order cone_to_order(const PositiveCone& cone);
PositiveCone order_to_cone(const Order& order, const Window& window);

} // namespace qring
