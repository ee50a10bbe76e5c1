#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qring/ring.hpp"

namespace qring {

/// Ideal carrier. Finite backends hold the explicit element set (closure from
/// generators is computed at load); the Integers backend holds (m) symbolically
/// with membership by divisibility; {0} is available on every backend.
class Ideal {
public:
  /// Explicit set on a finite ring; closure under + and ring multiplication is
  /// verified, not assumed.
  static Ideal from_elements(const Ring& ring, std::vector<Element> elements);
  /// Fixpoint closure of the generators on a finite ring.
  static Ideal span(const Ring& ring, const std::vector<Element>& generators);
  /// (m) on the Integers backend, m >= 0; m = 0 is the zero ideal.
  static Ideal integer_multiples(const Ring& ring, i64 m);
  static Ideal zero_ideal(const Ring& ring);

  const Ring& ring() const { return ring_; }
  bool contains(const Element& e) const;
  bool is_zero_ideal() const;
  bool has_explicit_elements() const { return explicit_; }
  const std::vector<Element>& elements() const; // explicit path only
  std::size_t size() const;                     // explicit path only
  /// Small generating description for printing/serialization.
  std::vector<Element> generators() const;
  std::string describe() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

private:
  Ideal(Ring ring, bool expl, std::vector<Element> elems, i64 modulus)
      : ring_(std::move(ring)), explicit_(expl), elems_(std::move(elems)), m_(modulus) {}

  Ring ring_;
  bool explicit_;              // explicit element set (finite rings)
  std::vector<Element> elems_; // sorted by ring enumeration index
  i64 m_ = -1;                 // integers backend: (m); -1 = not symbolic
};

struct PrimalityReport {
  bool is_ideal = false;
  bool proper = false;
  bool prime = false;
  /// For closure failures or primality failures: the violating pair.
  std::optional<std::pair<Element, Element>> witness;
  std::string note;
  bool exhaustive = false;

  bool ok() const { return is_ideal && proper && prime; }
};

/// Exhaustive on finite backends; on Integers decides (0) and (m) directly.
PrimalityReport is_prime_ideal(const Ring& ring, const Ideal& ideal);

} // namespace qring
