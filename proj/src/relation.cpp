#include "qring/relation.hpp"

#include <algorithm>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

Rank Rank::from_coords(std::vector<std::pair<i64, i64>> coords) {
  Rank r;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0 && coords[i].first >= coords[i - 1].first)
      fail(errc::structural, "rank positions must be strictly decreasing");
    if (coords[i].second != 0) r.coords.push_back(coords[i]);
  }
  return r;
}

Rank Rank::from_vector(const std::vector<i64>& values) {
  std::vector<std::pair<i64, i64>> coords;
  for (std::size_t i = 0; i < values.size(); ++i)
    coords.emplace_back(-static_cast<i64>(i), values[i]);
  return from_coords(std::move(coords));
}

Rank Rank::negated_vector(const std::vector<i64>& values) {
  std::vector<i64> neg;
  neg.reserve(values.size());
  for (i64 v : values) neg.push_back(checked_neg(v));
  return from_vector(neg);
}

int Rank::compare(const Rank& a, const Rank& b) {
  if (a.bottom || b.bottom) {
    if (a.bottom && b.bottom) return 0;
    return a.bottom ? -1 : 1;
  }
  std::size_t i = 0, j = 0;
  while (i < a.coords.size() || j < b.coords.size()) {
    // Values are nonzero after normalization, so a position present on one
    // side only decides the comparison against the implicit zero.
    if (j == b.coords.size() || (i < a.coords.size() && a.coords[i].first > b.coords[j].first)) {
      return a.coords[i].second > 0 ? 1 : -1;
    }
    if (i == a.coords.size() || b.coords[j].first > a.coords[i].first) {
      return b.coords[j].second > 0 ? -1 : 1;
    }
    if (a.coords[i].second != b.coords[j].second)
      return a.coords[i].second < b.coords[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

std::size_t Rank::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(bottom ? 2u : 1u);
  for (const auto& [p, v] : coords) {
    mix(static_cast<std::size_t>(p));
    mix(static_cast<std::size_t>(v));
  }
  return h;
}

Rank RelationImpl::rank(const Element&) const {
  fail(errc::unsupported, "relation backend has no rank key");
}

namespace {

class MatrixRelation final : public RelationImpl {
public:
  MatrixRelation(Ring ring, std::vector<std::vector<std::uint8_t>> rows)
      : ring_(std::move(ring)), rows_(std::move(rows)) {
    if (!ring_.is_finite()) fail(errc::unsupported, "matrix relations require a finite ring");
    std::size_t n = ring_.size();
    if (rows_.size() != n) fail(errc::structural, "relation matrix must have one row per ring element");
    for (const auto& row : rows_) {
      if (row.size() != n) fail(errc::structural, "relation matrix must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows_[i][i])
        fail(errc::structural,
             "relation matrix is not reflexive at " + ring_.to_string(ring_.elements()[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!rows_[i][j] && !rows_[j][i])
          fail(errc::structural, "relation matrix is not total at (" +
                                     ring_.to_string(ring_.elements()[i]) + ", " +
                                     ring_.to_string(ring_.elements()[j]) + ")");
      }
    }
  }

  RelationKind kind() const override { return RelationKind::matrix; }
  const Ring& ring() const override { return ring_; }
  bool leq(const Element& x, const Element& y) const override {
    return rows_[ring_.index_of(x)][ring_.index_of(y)] != 0;
  }
  std::string describe() const override {
    return "matrix relation on " + ring_.describe();
  }

  const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }

private:
  Ring ring_;
  std::vector<std::vector<std::uint8_t>> rows_;
};

class ValuationRelation final : public RelationImpl {
public:
  ValuationRelation(Valuation v, RelationKind kind) : v_(std::move(v)), kind_(kind) {
    GroupKind gk = v_.group().kind();
    ranked_ = gk == GroupKind::trivial || gk == GroupKind::free_rank_one ||
              gk == GroupKind::lex_power;
  }

  RelationKind kind() const override { return kind_; }
  const Ring& ring() const override { return v_.ring(); }
  bool leq(const Element& x, const Element& y) const override {
    return val_leq(v_.group(), v_.vmap(y), v_.vmap(x));
  }
  bool has_rank() const override { return ranked_; }
  Rank rank(const Element& x) const override {
    if (!ranked_) return RelationImpl::rank(x);
    Val v = v_.vmap(x);
    if (v.inf) return Rank::bottom_rank();
    auto vec = v_.group().vector_of(v.g);
    if (!vec) fail(errc::structural, "vector group produced a non-vector value");
    return Rank::negated_vector(*vec);
  }
  bool support_known_zero() const override { return v_.support_known_zero(); }
  std::string describe() const override {
    if (kind_ == RelationKind::trivial_at_prime)
      return "trivial quasi-order at " + v_.support_ideal().describe() + " on " +
             v_.ring().describe();
    return "quasi-order induced by " + v_.describe();
  }

  const Valuation& valuation() const { return v_; }

private:
  Valuation v_;
  RelationKind kind_;
  bool ranked_ = false;
};

class OrderRelation final : public RelationImpl {
public:
  explicit OrderRelation(Order o) : o_(std::move(o)) {}

  RelationKind kind() const override { return RelationKind::order_induced; }
  const Ring& ring() const override { return o_.ring(); }
  bool leq(const Element& x, const Element& y) const override { return o_.leq(x, y); }
  bool has_rank() const override { return o_.kind() == OrderKind::standard_integer; }
  Rank rank(const Element& x) const override {
    if (!has_rank()) return RelationImpl::rank(x);
    return Rank::scalar(x.scalar());
  }
  bool support_known_zero() const override {
    // Difference orders of arbitrary subsets need not be antisymmetric; the
    // two closed-form backends are.
    return o_.kind() != OrderKind::cone;
  }
  std::string describe() const override { return "quasi-order from " + o_.describe(); }

  const Order& order() const { return o_; }

private:
  Order o_;
};

} // namespace

QuasiOrder QuasiOrder::matrix(const Ring& ring, std::vector<std::vector<std::uint8_t>> rows) {
  return QuasiOrder(std::make_shared<MatrixRelation>(ring, std::move(rows)));
}

QuasiOrder QuasiOrder::from_valuation(const Valuation& v) {
  return QuasiOrder(std::make_shared<ValuationRelation>(v, RelationKind::valuation_induced));
}

QuasiOrder QuasiOrder::from_order(const Order& o) {
  return QuasiOrder(std::make_shared<OrderRelation>(o));
}

QuasiOrder QuasiOrder::trivial_at_prime(const Ideal& prime) {
  return QuasiOrder(std::make_shared<ValuationRelation>(Valuation::trivial(prime),
                                                        RelationKind::trivial_at_prime));
}

QuasiOrder QuasiOrder::from_impl(std::shared_ptr<const RelationImpl> impl) {
  if (!impl) fail(errc::structural, "null relation backend");
  return QuasiOrder(std::move(impl));
}

const Valuation* QuasiOrder::valuation() const {
  auto* p = dynamic_cast<const ValuationRelation*>(impl_.get());
  return p ? &p->valuation() : nullptr;
}

const Order* QuasiOrder::order_backend() const {
  auto* p = dynamic_cast<const OrderRelation*>(impl_.get());
  return p ? &p->order() : nullptr;
}

const std::vector<std::vector<std::uint8_t>>* QuasiOrder::matrix_rows() const {
  auto* p = dynamic_cast<const MatrixRelation*>(impl_.get());
  return p ? &p->rows() : nullptr;
}

SupportSet compute_support(const QuasiOrder& rel, const std::optional<Window>& window) {
  const Ring& ring = rel.ring();
  SupportSet out;
  Element zero = ring.zero();
  if (ring.is_finite() && !window) {
    out.exhaustive = true;
    for (const auto& x : ring.elements()) {
      if (rel.equiv(x, zero)) out.members.push_back(x);
    }
    return out;
  }
  if (!window)
    fail(errc::precondition, "support over an infinite ring requires a window");
  out.exhaustive = window->exhaustive();
  for (const auto& x : window->elements()) {
    if (rel.equiv(x, zero)) out.members.push_back(x);
  }
  return out;
}

} // namespace qring
