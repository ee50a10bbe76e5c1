#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qring/polynomial.hpp"

namespace qring {

class Element;
using Tuple = std::vector<Element>;

/// Ring element payload. Scalars carry integers (the value for the integer
/// backend, the canonical residue for modular backends, the element index
/// for table backends); products carry tuples, polynomial rings carry
/// polynomials. Elements are interpreted only by the ring that made them.
class Element {
public:
  Element() : value_(i64{0}) {}
  explicit Element(i64 v) : value_(v) {}
  explicit Element(Polynomial p) : value_(std::move(p)) {}
  explicit Element(Tuple t) : value_(std::move(t)) {}

  bool is_scalar() const { return std::holds_alternative<i64>(value_); }
  bool is_polynomial() const { return std::holds_alternative<Polynomial>(value_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(value_); }

  i64 scalar() const;
  const Polynomial& polynomial() const;
  const Tuple& tuple() const;

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Deterministic total order on payloads; used for canonical witness
  /// selection and stable printing, never for ring semantics.
  static int structural_compare(const Element& a, const Element& b);

  std::size_t hash() const;

private:
  std::variant<i64, Polynomial, Tuple> value_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

} // namespace qring
