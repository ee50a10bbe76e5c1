#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qring/element.hpp"

namespace qring {

enum class RingKind { modular, product, integers, polynomial, table };

/// Commutative ring with 1. Value type over immutable shared state; all
/// operations are pure. Finite backends (modular, product of finite, table)
/// expose deterministic element enumeration; Integers and polynomial rings
/// are infinite and enumerate only through windows.
class Ring {
public:
  static Ring modular(i64 n);
  static Ring integers();
  static Ring polynomial(std::vector<std::string> variables);
  static Ring product(std::vector<Ring> factors);
  /// Tables are validated exhaustively at load: associativity, commutativity,
  /// distributivity, identities, additive inverses. zero/one are located by
  /// scan unless given.
  static Ring table(const std::vector<std::vector<i64>>& add,
                    const std::vector<std::vector<i64>>& mul);

  RingKind kind() const;
  bool is_finite() const;
  std::size_t size() const;                     // finite backends only
  const std::vector<Element>& elements() const; // finite backends only
  std::size_t index_of(const Element& e) const; // finite backends only

  Element zero() const;
  Element one() const;
  Element from_integer(i64 k) const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  bool eq(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;

  /// Validates canonical form and shape; structural error otherwise.
  void require_element(const Element& e) const;

  bool is_integral_domain() const;
  /// Finite backends: true iff every nonzero element has a multiplicative
  /// inverse. Unsupported on infinite backends.
  bool is_field() const;

  std::string to_string(const Element& e) const;
  std::string describe() const;

  // Backend accessors (structural error when the kind does not match).
  i64 modulus() const;
  const std::vector<std::string>& variables() const;
  const std::vector<Ring>& factors() const;
  const std::vector<std::vector<i64>>& add_table() const;
  const std::vector<std::vector<i64>>& mul_table() const;

  /// Same underlying ring (shared state or structurally identical descriptor).
  bool same_ring(const Ring& other) const;

private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

} // namespace qring
