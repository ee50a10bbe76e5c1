#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qring/element.hpp"
#include "qring/ideal.hpp"
#include "qring/order.hpp"
#include "qring/ring.hpp"
#include "qring/valuation.hpp"
#include "qring/window.hpp"

namespace qring {

/// Comparison key of a staged total preorder: x ⪯ y iff rank(x) <= rank(y).
/// A key is an optional bottom (below everything) or a sparse integer
/// coordinate vector: (position, value) pairs with positions strictly
/// decreasing, absent positions reading as zero, compared lexicographically
/// from the most significant position. One shape covers magnitude orders on
/// Z, negated valuation vectors, and dominance stages.
struct Rank {
  bool bottom = false;
  std::vector<std::pair<i64, i64>> coords;

  static Rank bottom_rank() {
    Rank r;
    r.bottom = true;
    return r;
  }
  /// Normalizes: zero values dropped; positions must be strictly decreasing.
  static Rank from_coords(std::vector<std::pair<i64, i64>> coords);
  static Rank scalar(i64 value) { return from_coords({{0, value}}); }
  /// Dense vector, most significant entry first (positions 0, -1, -2, ...).
  static Rank from_vector(const std::vector<i64>& values);
  static Rank negated_vector(const std::vector<i64>& values);

  /// -1 / 0 / +1. Bottom is the unique minimum.
  static int compare(const Rank& a, const Rank& b);

  friend bool operator==(const Rank& a, const Rank& b) {
    return a.bottom == b.bottom && a.coords == b.coords;
  }
  friend bool operator!=(const Rank& a, const Rank& b) { return !(a == b); }
  friend bool operator<(const Rank& a, const Rank& b) { return compare(a, b) < 0; }

  std::size_t hash() const;
};

struct RankHash {
  std::size_t operator()(const Rank& r) const { return r.hash(); }
};

enum class RelationKind { matrix, valuation_induced, order_induced, trivial_at_prime, custom };

/// Backend of a candidate quasi-order: a total-preorder comparator plus
/// optional fast-path metadata. Implementations must be pure.
struct RelationImpl {
  virtual ~RelationImpl() = default;
  virtual RelationKind kind() const = 0;
  virtual const Ring& ring() const = 0;
  virtual bool leq(const Element& x, const Element& y) const = 0;
  /// True when the relation is induced by a Rank key; then
  /// leq(x,y) == (compare(rank(x), rank(y)) <= 0) must hold everywhere.
  virtual bool has_rank() const { return false; }
  virtual Rank rank(const Element& x) const;
  /// True when the backend guarantees x ~ 0 only for x = 0.
  virtual bool support_known_zero() const { return false; }
  virtual std::string describe() const = 0;
};

/// Candidate quasi-order on a ring. Construction performs structural
/// validation only (matrices reflexive and total, trivial relations over a
/// verified prime ideal); the QR axioms are decided by check_axioms.
class QuasiOrder {
public:
  /// Explicit comparison table over a finite ring, rows[i][j] = (e_i ⪯ e_j).
  static QuasiOrder matrix(const Ring& ring, std::vector<std::vector<std::uint8_t>> rows);
  /// x ⪯ y iff v(y) <= v(x) in the value group.
  static QuasiOrder from_valuation(const Valuation& v);
  /// The order comparator itself.
  static QuasiOrder from_order(const Order& o);
  /// x ⪯ y iff x ∈ 𝔭 or y ∉ 𝔭; the relation of the trivial valuation at 𝔭.
  static QuasiOrder trivial_at_prime(const Ideal& prime);
  static QuasiOrder from_impl(std::shared_ptr<const RelationImpl> impl);

  RelationKind kind() const { return impl_->kind(); }
  const Ring& ring() const { return impl_->ring(); }
  bool leq(const Element& x, const Element& y) const { return impl_->leq(x, y); }
  bool equiv(const Element& x, const Element& y) const { return leq(x, y) && leq(y, x); }
  bool strict(const Element& x, const Element& y) const { return leq(x, y) && !leq(y, x); }

  bool has_rank() const { return impl_->has_rank(); }
  Rank rank(const Element& x) const { return impl_->rank(x); }
  bool support_known_zero() const { return impl_->support_known_zero(); }
  std::string describe() const { return impl_->describe(); }

  /// Inducing structure, when one exists (else nullptr).
  const Valuation* valuation() const;
  const Order* order_backend() const;
  const std::vector<std::vector<std::uint8_t>>* matrix_rows() const;

private:
  explicit QuasiOrder(std::shared_ptr<const RelationImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const RelationImpl> impl_;
};

/// E₀ = {x : x ~ 0}, enumerated in scan order. Exhaustive when the whole
/// (finite) universe was scanned rather than a window.
struct SupportSet {
  bool exhaustive = false;
  std::vector<Element> members;
};

/// Finite rings scan the full universe; infinite rings require a window.
SupportSet compute_support(const QuasiOrder& rel,
                           const std::optional<Window>& window = std::nullopt);

} // namespace qring
