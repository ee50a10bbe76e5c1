#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qring/order.hpp"
#include "qring/relation.hpp"
#include "qring/valuation.hpp"
#include "qring/value_group.hpp"
#include "qring/window.hpp"

namespace qring {

enum class Branch { ordered, valued };

/// Outcome of the dichotomy: a verified quasi-order is either an order
/// (discriminator: -1 < 0) or valuation-induced (0 < -1 and -1 ~ 1), with a
/// witnessing structure whose induced relation matches the input.
struct Classification {
  Branch branch;
  SupportSet support;        // support of the input relation
  std::string sign_evidence; // the discriminator facts that picked the branch
  Window window;

  // Ordered branch: the window slice of {x : 0 <= x}, plus the backend's
  // order when the relation carries one in closed form.
  std::optional<PositiveCone> cone;
  std::optional<Order> order;

  // Valued branch: a closed-form valuation when the backend provides one or
  // the quotient is finite (trivial valuation at the support); otherwise the
  // synthesized value monoid and its formal-difference completion.
  std::optional<Valuation> valuation;
  std::optional<ValueMonoid> monoid;
  std::optional<OrderedAbelianGroup> group;
  std::string group_kind; // "trivial" | "free_rank_one" | "lex_power" | "formal_difference"

  /// Relation re-induced from the witnessing structure.
  std::optional<QuasiOrder> induced;
};

/// pre: the relation passes its axiom checks (exhaustively on finite rings,
/// on the window otherwise); failures raise `rejected_input` carrying the
/// failing axiom and witness. Inconsistency errors from the value synthesis
/// propagate; a verified quasi-order cannot trigger them.
Classification classify(const QuasiOrder& rel, const Window& window);

struct RoundtripResult {
  bool relation_match = false;
  bool support_match = false;
  std::optional<std::pair<Element, Element>> first_difference;

  bool ok() const { return relation_match && support_match; }
};

/// Compares the re-induced relation against the input on every window pair
/// and the supports as sets; the first differing pair is reported.
RoundtripResult roundtrip_check(const QuasiOrder& rel, const Classification& cls,
                                const Window& window);

} // namespace qring
