#include "qring/valuation.hpp"

#include <algorithm>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

bool val_leq(const OrderedAbelianGroup& group, const Val& a, const Val& b) {
  if (a.inf) return b.inf;
  if (b.inf) return true;
  return group.leq(a.g, b.g);
}

bool val_eq(const OrderedAbelianGroup& group, const Val& a, const Val& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return group.eq(a.g, b.g);
}

Val val_add(const OrderedAbelianGroup& group, const Val& a, const Val& b) {
  if (a.inf || b.inf) return Val::infinity();
  return Val::finite(group.add(a.g, b.g));
}

std::string val_str(const OrderedAbelianGroup& group, const Val& a) {
  return a.inf ? "inf" : group.to_string(a.g);
}

namespace {

class PAdicValuation final : public ValuationImpl {
public:
  PAdicValuation(Ring ring, i64 p)
      : ring_(std::move(ring)), p_(p), group_(OrderedAbelianGroup::free_rank_one()) {
    if (ring_.kind() != RingKind::integers)
      fail(errc::structural, "p-adic valuations require the Integers backend");
    if (p < 2) fail(errc::structural, "p-adic valuation requires a prime p");
    for (i64 d = 2; d * d <= p; ++d)
      if (p % d == 0) fail(errc::structural, std::to_string(p) + " is not prime");
  }

  ValuationKind kind() const override { return ValuationKind::padic; }
  const Ring& ring() const override { return ring_; }
  const OrderedAbelianGroup& group() const override { return group_; }

  Val vmap(const Element& x) const override {
    ring_.require_element(x);
    i64 v = x.scalar();
    if (v == 0) return Val::infinity();
    i64 k = 0;
    while (v % p_ == 0) {
      v /= p_;
      ++k;
    }
    return Val::finite(std::vector<i64>{k});
  }

  bool support_known_zero() const override { return true; }
  Ideal support_ideal() const override { return Ideal::zero_ideal(ring_); }
  std::string describe() const override { return std::to_string(p_) + "-adic"; }

  i64 p() const { return p_; }

private:
  Ring ring_;
  i64 p_;
  OrderedAbelianGroup group_;
};

class MonomialValuation final : public ValuationImpl {
public:
  MonomialValuation(Ring ring, std::vector<std::vector<i64>> weights)
      : ring_(std::move(ring)), weights_(std::move(weights)),
        group_(OrderedAbelianGroup::trivial()) {
    if (ring_.kind() != RingKind::polynomial)
      fail(errc::structural, "monomial valuations require a polynomial ring");
    const std::size_t arity = ring_.variables().size();
    if (weights_.size() != arity)
      fail(errc::structural, "one weight vector per variable required");
    rank_ = weights_.empty() ? 0 : weights_[0].size();
    if (rank_ == 0) fail(errc::structural, "weight vectors must be nonempty");
    for (const auto& w : weights_) {
      if (w.size() != rank_) fail(errc::structural, "weight vectors must share one length");
      // Positive generator: lexicographically > 0.
      bool positive = false;
      for (i64 c : w) {
        if (c > 0) {
          positive = true;
          break;
        }
        if (c < 0) break;
      }
      if (!positive) fail(errc::structural, "variable weights must be lex-positive");
    }
    group_ = OrderedAbelianGroup::lex_power(rank_);
  }

  ValuationKind kind() const override { return ValuationKind::monomial; }
  const Ring& ring() const override { return ring_; }
  const OrderedAbelianGroup& group() const override { return group_; }

  Val vmap(const Element& x) const override {
    ring_.require_element(x);
    const Polynomial& f = x.polynomial();
    if (f.is_zero()) return Val::infinity();
    bool first = true;
    std::vector<i64> best;
    for (const auto& [mono, coeff] : f.terms()) {
      std::vector<i64> w(rank_, 0);
      for (std::size_t var = 0; var < weights_.size(); ++var)
        for (std::size_t i = 0; i < rank_; ++i)
          w[i] = checked_add(w[i], checked_mul(static_cast<i64>(mono.exp(var)), weights_[var][i]));
      if (first || std::lexicographical_compare(w.begin(), w.end(), best.begin(), best.end())) {
        best = std::move(w);
        first = false;
      }
    }
    return Val::finite(std::move(best));
  }

  bool support_known_zero() const override { return true; }
  Ideal support_ideal() const override { return Ideal::zero_ideal(ring_); }
  std::string describe() const override {
    std::ostringstream out;
    out << "monomial valuation (";
    const auto& vars = ring_.variables();
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (v) out << ", ";
      out << vars[v] << "->";
      if (rank_ == 1) {
        out << weights_[v][0];
      } else {
        out << "(";
        for (std::size_t i = 0; i < rank_; ++i) {
          if (i) out << ",";
          out << weights_[v][i];
        }
        out << ")";
      }
    }
    out << ")";
    return out.str();
  }

  const std::vector<std::vector<i64>>& weights() const { return weights_; }

private:
  Ring ring_;
  std::vector<std::vector<i64>> weights_;
  std::size_t rank_ = 0;
  OrderedAbelianGroup group_;
};

class TrivialValuation final : public ValuationImpl {
public:
  explicit TrivialValuation(Ideal prime)
      : ideal_(std::move(prime)), group_(OrderedAbelianGroup::trivial()) {
    PrimalityReport rep = is_prime_ideal(ideal_.ring(), ideal_);
    if (!rep.ok())
      fail(errc::invalid_ideal,
           "trivial valuation requires a prime ideal: " + ideal_.describe() + " is not (" +
               rep.note + ")");
  }

  ValuationKind kind() const override { return ValuationKind::trivial; }
  const Ring& ring() const override { return ideal_.ring(); }
  const OrderedAbelianGroup& group() const override { return group_; }

  Val vmap(const Element& x) const override {
    return ideal_.contains(x) ? Val::infinity() : Val::finite(group_.zero());
  }

  bool support_known_zero() const override { return ideal_.is_zero_ideal(); }
  Ideal support_ideal() const override { return ideal_; }
  std::string describe() const override { return "trivial valuation at " + ideal_.describe(); }

private:
  Ideal ideal_;
  OrderedAbelianGroup group_;
};

class TableValuation final : public ValuationImpl {
public:
  TableValuation(Ring ring, std::vector<std::optional<i64>> values)
      : ring_(std::move(ring)), values_(std::move(values)),
        group_(OrderedAbelianGroup::trivial()) {
    if (!ring_.is_finite()) fail(errc::structural, "table valuations require a finite ring");
    if (values_.size() != ring_.size())
      fail(errc::structural, "valuation table size mismatch");
    bool nonzero_finite = false;
    for (const auto& v : values_)
      if (v && *v != 0) nonzero_finite = true;
    group_ = nonzero_finite ? OrderedAbelianGroup::free_rank_one() : OrderedAbelianGroup::trivial();
    validate();
  }

  ValuationKind kind() const override { return ValuationKind::table; }
  const Ring& ring() const override { return ring_; }
  const OrderedAbelianGroup& group() const override { return group_; }

  Val vmap(const Element& x) const override {
    const auto& v = values_[ring_.index_of(x)];
    if (!v) return Val::infinity();
    if (group_.kind() == GroupKind::trivial) return Val::finite(group_.zero());
    return Val::finite(std::vector<i64>{*v});
  }

  bool support_known_zero() const override {
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!values_[i] && !ring_.is_zero(ring_.elements()[i])) return false;
    return true;
  }

  Ideal support_ideal() const override {
    std::vector<Element> members;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!values_[i]) members.push_back(ring_.elements()[i]);
    return Ideal::from_elements(ring_, std::move(members));
  }

  std::string describe() const override { return "table valuation on " + ring_.describe(); }

private:
  void validate() const {
    const auto& elems = ring_.elements();
    auto v = [this](const Element& x) { return vmap(x); };
    if (!v(ring_.zero()).inf) fail(errc::structural, "valuation table violates v(0) = inf");
    if (!val_eq(group_, v(ring_.one()), Val::finite(group_.zero())))
      fail(errc::structural, "valuation table violates v(1) = 0");
    for (const auto& x : elems)
      for (const auto& y : elems) {
        Val vx = v(x), vy = v(y);
        if (!val_eq(group_, v(ring_.mul(x, y)), val_add(group_, vx, vy)))
          fail(errc::structural, "valuation table violates v(xy) = v(x)+v(y) at x=" +
                                     ring_.to_string(x) + ", y=" + ring_.to_string(y));
        Val lo = val_leq(group_, vx, vy) ? vx : vy;
        if (!val_leq(group_, lo, v(ring_.add(x, y))))
          fail(errc::structural, "valuation table violates the ultrametric inequality at x=" +
                                     ring_.to_string(x) + ", y=" + ring_.to_string(y));
      }
    PrimalityReport rep = is_prime_ideal(ring_, support_ideal());
    if (!rep.ok())
      fail(errc::structural, "valuation table support is not a prime ideal (" + rep.note + ")");
  }

  Ring ring_;
  std::vector<std::optional<i64>> values_;
  OrderedAbelianGroup group_;
};

} // namespace

Valuation Valuation::padic(const Ring& integers, i64 p) {
  return Valuation(std::make_shared<PAdicValuation>(integers, p));
}

Valuation Valuation::monomial(const Ring& poly_ring, std::vector<std::vector<i64>> weights) {
  return Valuation(std::make_shared<MonomialValuation>(poly_ring, std::move(weights)));
}

Valuation Valuation::trivial(Ideal prime) {
  return Valuation(std::make_shared<TrivialValuation>(std::move(prime)));
}

Valuation Valuation::table(const Ring& finite_ring, std::vector<std::optional<i64>> values) {
  return Valuation(std::make_shared<TableValuation>(finite_ring, std::move(values)));
}

Valuation Valuation::from_impl(std::shared_ptr<const ValuationImpl> impl) {
  return Valuation(std::move(impl));
}

i64 Valuation::prime() const {
  const auto* p = dynamic_cast<const PAdicValuation*>(impl_.get());
  if (!p) fail(errc::structural, "not a p-adic valuation");
  return p->p();
}

const std::vector<std::vector<i64>>& Valuation::weights() const {
  const auto* m = dynamic_cast<const MonomialValuation*>(impl_.get());
  if (!m) fail(errc::structural, "not a monomial valuation");
  return m->weights();
}

} // namespace qring
