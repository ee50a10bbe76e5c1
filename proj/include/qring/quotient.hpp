#pragma once

#include <optional>
#include <vector>

#include "qring/order.hpp"
#include "qring/relation.hpp"
#include "qring/valuation.hpp"
#include "qring/window.hpp"

namespace qring {

/// Residue view of a quasi-ordered ring modulo the equivalence class of 0.
/// Three shapes:
///   identity  - the support is {0}; the quotient is the base ring itself.
///   finite    - cosets are materialized; representatives are the
///               enumeration-order minima; the quotient is a table ring.
///   integers  - symbolic support (m) on the Integers backend; the quotient
///               is the modular ring Z/m with canonical-residue projection.
struct QuotientRingView {
  Ring base;
  Ring quotient;
  QuasiOrder base_relation;
  QuasiOrder quotient_relation;
  SupportSet support; // support of the base relation
  bool identity = false;

  // finite path: coset representatives indexed by quotient element value,
  // and the projection table base index -> quotient element value
  std::vector<Element> representatives;
  std::vector<i64> projection;

  // integers path: the modulus m of the symbolic support (m)
  i64 modulus = 0;

  /// Coset representative of x as an element of the quotient ring.
  Element project(const Element& x) const;
  /// Preimage of a quotient element: the stored representative in the base.
  Element representative(const Element& q) const;
};

/// pre: the relation passed its axiom checks (the induced relation is only
/// well defined when the support is an ideal and x ~ x + c for c in it).
/// Well-definedness is re-verified here on the computed cosets.
QuotientRingView quotient_quasiorder(const QuasiOrder& rel,
                                     const std::optional<Window>& window = std::nullopt);

/// Lift of a valuation on the quotient back to the base: v(x) = qv(project x).
/// pre: qv lives on view.quotient and has support {0} there. The lifted
/// valuation has the view's support as its support ideal.
Valuation lift_valuation(const Valuation& qv, const QuotientRingView& view);

/// Lift of an order on the quotient back to the base: x <= y iff
/// project(x) <= project(y). Only the identity path is reachable for verified
/// quasi-orders (no finite ring carries a ring order), so non-identity views
/// are reported unsupported rather than given an invented order backend.
Order lift_order(const Order& qo, const QuotientRingView& view);

} // namespace qring
