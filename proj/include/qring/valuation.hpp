#pragma once

#include "qring/group.hpp"
#include "qring/ideal.hpp"

namespace qring {

enum class ValuationKind { padic, monomial, trivial, table, synthesized, lifted };

/// Value of a ring element under a valuation: a group element or infinity.
struct Val {
  bool inf = false;
  GroupElement g;

  static Val infinity() { return Val{true, {}}; }
  static Val finite(GroupElement e) { return Val{false, std::move(e)}; }
};

/// v(a) <= v(b) with infinity as the absorbing maximum.
bool val_leq(const OrderedAbelianGroup& group, const Val& a, const Val& b);
bool val_eq(const OrderedAbelianGroup& group, const Val& a, const Val& b);
Val val_add(const OrderedAbelianGroup& group, const Val& a, const Val& b);
std::string val_str(const OrderedAbelianGroup& group, const Val& a);

struct ValuationImpl {
  virtual ~ValuationImpl() = default;
  virtual ValuationKind kind() const = 0;
  virtual const Ring& ring() const = 0;
  virtual const OrderedAbelianGroup& group() const = 0;
  virtual Val vmap(const Element& x) const = 0;
  /// v(x) = infinity exactly when x = 0.
  virtual bool support_known_zero() const = 0;
  /// The support as an ideal when it is explicitly representable.
  virtual Ideal support_ideal() const = 0;
  virtual std::string describe() const = 0;
};

/// Ring valuation v: R -> Group ∪ {∞} with v(0) = ∞, v(1) = 0,
/// v(xy) = v(x) + v(y) and v(x+y) >= min(v(x), v(y)).
class Valuation {
public:
  /// p-adic valuation on the Integers backend; p must be prime.
  static Valuation padic(const Ring& integers, i64 p);
  /// Monomial valuation on a polynomial ring: weights[i] is the (lex-positive)
  /// value vector of variable i; v(f) = min over terms of the weighted
  /// exponent sum. All weight vectors share one length = the group rank.
  static Valuation monomial(const Ring& poly_ring, std::vector<std::vector<i64>> weights);
  /// v = ∞ on a prime ideal and 0 elsewhere; primality is verified here.
  static Valuation trivial(Ideal prime);
  /// Explicit value table on a finite ring (nullopt = ∞). V1-V4 and support
  /// primality are verified exhaustively at load.
  static Valuation table(const Ring& finite_ring, std::vector<std::optional<i64>> values);
  static Valuation from_impl(std::shared_ptr<const ValuationImpl> impl);

  ValuationKind kind() const { return impl_->kind(); }
  const Ring& ring() const { return impl_->ring(); }
  const OrderedAbelianGroup& group() const { return impl_->group(); }
  Val vmap(const Element& x) const { return impl_->vmap(x); }
  bool support_known_zero() const { return impl_->support_known_zero(); }
  Ideal support_ideal() const { return impl_->support_ideal(); }
  std::string describe() const { return impl_->describe(); }

  /// padic only.
  i64 prime() const;
  /// monomial only.
  const std::vector<std::vector<i64>>& weights() const;

  const ValuationImpl& impl() const { return *impl_; }

private:
  explicit Valuation(std::shared_ptr<const ValuationImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const ValuationImpl> impl_;
};

} // namespace qring
