#pragma once

#include <optional>
#include <unordered_map>

#include "qring/ring.hpp"

namespace qring {

enum class WindowKind { all, integer_interval, polynomial };

/// Finite test universe for universally quantified checks. Always contains
/// 0, 1 and -1 and is closed under negation; construction rejects anything
/// smaller or asymmetric. Enumeration order is deterministic and is the scan
/// order used for minimal witnesses.
class Window {
public:
  /// Full universe of a finite ring.
  static Window all(const Ring& ring);
  /// Symmetric interval [lo, hi] on the Integers backend; requires lo = -hi.
  static Window integer_interval(const Ring& ring, i64 lo, i64 hi);
  /// On a polynomial ring: 0, every c*m, and every c1*m1 + c2*m2 for distinct
  /// monomials m of total degree <= max_degree and coefficients from the
  /// negation-closure of `coeffs`.
  static Window polynomial(const Ring& ring, std::uint32_t max_degree, std::vector<i64> coeffs);

  const Ring& ring() const { return ring_; }
  WindowKind kind() const { return kind_; }
  const std::vector<Element>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  std::optional<std::size_t> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }
  /// True when the window is the whole (finite) ring, so pass means pass.
  bool exhaustive() const { return kind_ == WindowKind::all; }

  i64 lo() const { return lo_; }
  i64 hi() const { return hi_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const std::vector<i64>& coefficients() const { return coeffs_; }

  std::string describe() const;

private:
  Window(Ring ring, WindowKind kind) : ring_(std::move(ring)), kind_(kind) {}
  void index_elements();
  void validate() const;

  Ring ring_;
  WindowKind kind_;
  std::vector<Element> elems_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  i64 lo_ = 0, hi_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<i64> coeffs_;
};

} // namespace qring
