#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qring/group.hpp"
#include "qring/relation.hpp"
#include "qring/window.hpp"

namespace qring {

/// Equivalence classes of the relation on the nonzero window elements, with
/// [x]*[y] = [xy] and the reversed order [x] <= [y] iff y <= x (elements that
/// sit higher under the relation carry smaller values). Requires support {0};
/// cancellativity (z !~ 0 and xz ~ yz imply x ~ y) and the totality and
/// multiplication-compatibility of the class order are verified at build.
///
/// Class ids below window_class_count() are fixed by window scan order;
/// products of representatives may fall outside every window class, and
/// those classes are registered on demand behind a lock. Registration order
/// never affects a comparison: all comparisons go through representatives.
class ValueMonoid {
public:
  const QuasiOrder& relation() const;
  const Ring& ring() const;
  const Window& window() const;

  std::size_t window_class_count() const;
  /// Representative of a class (first window element in scan order for
  /// window classes, the discovering product otherwise).
  Element representative(std::int32_t cls) const;
  /// A second member of the class when the window holds one (used by
  /// representative-independence checks); the representative otherwise.
  Element alternate_member(std::int32_t cls) const;

  /// Class id of a ring element with x !~ 0; not restricted to the window.
  std::int32_t class_of(const Element& x) const;
  /// Class of the product of two class representatives.
  std::int32_t mul(std::int32_t a, std::int32_t b) const;
  /// Reversed order: [x] <= [y] iff y <= x under the relation.
  bool leq(std::int32_t a, std::int32_t b) const;
  bool eq(std::int32_t a, std::int32_t b) const { return a == b; }
  std::int32_t one_class() const;

private:
  friend ValueMonoid build_value_monoid(const QuasiOrder&, const Window&);
  friend OrderedAbelianGroup grothendieck_group(const ValueMonoid&);
  struct Data;
  std::shared_ptr<Data> data_;
};

/// pre: support {0} on the window; the relation passed its axiom checks.
/// Cancellativity violations raise `inconsistency` with the witness triple.
ValueMonoid build_value_monoid(const QuasiOrder& rel, const Window& window);

/// Grothendieck-style completion: group elements are formal differences of
/// monoid classes ([a], [b]), with ([a],[b]) <= ([c],[d]) iff cb <= ad in the
/// ring relation, equality iff ad ~ cb, and componentwise addition. Group
/// laws, order totality and representative independence are sampled at
/// build; violations raise `inconsistency` with a witness.
OrderedAbelianGroup grothendieck_group(const ValueMonoid& monoid);

/// The value of a nonzero ring element in the completed group: [x] - [1].
GroupElement monoid_value(const ValueMonoid& monoid, const Element& x);

} // namespace qring
