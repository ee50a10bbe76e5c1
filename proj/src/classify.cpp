#include "qring/classify.hpp"

#include <memory>
#include <utility>
#include <vector>

#include "qring/axioms.hpp"
#include "qring/errors.hpp"
#include "qring/ideal.hpp"
#include "qring/quotient.hpp"
#include "qring/scan.hpp"

namespace qring {
namespace {

std::string witness_text(const Ring& R, const std::vector<Element>& ws) {
  std::string out = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += R.to_string(ws[i]);
  }
  return out + ")";
}

const char* group_kind_label(GroupKind k) {
  switch (k) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::free_rank_one: return "free_rank_one";
    case GroupKind::lex_power: return "lex_power";
    case GroupKind::formal_difference: return "formal_difference";
  }
  return "?";
}

/// Ordered-branch re-induction without a closed-form backend: the relation
/// x <= y iff 0 <= y - x, i.e. the difference order of the positive part.
class DifferencePositivityRelation final : public RelationImpl {
public:
  explicit DifferencePositivityRelation(QuasiOrder base) : base_(std::move(base)) {}

  RelationKind kind() const override { return RelationKind::custom; }
  const Ring& ring() const override { return base_.ring(); }
  bool leq(const Element& x, const Element& y) const override {
    return base_.leq(ring().zero(), ring().sub(y, x));
  }
  std::string describe() const override {
    return "difference order of the positive part of (" + base_.describe() + ")";
  }

private:
  QuasiOrder base_;
};

/// Valued-branch re-induction for the synthesized path: values are formal
/// differences of value-monoid classes.
class SynthesizedValuation final : public ValuationImpl {
public:
  SynthesizedValuation(ValueMonoid monoid, OrderedAbelianGroup group)
      : monoid_(std::move(monoid)), group_(std::move(group)) {}

  ValuationKind kind() const override { return ValuationKind::synthesized; }
  const Ring& ring() const override { return monoid_.ring(); }
  const OrderedAbelianGroup& group() const override { return group_; }
  Val vmap(const Element& x) const override {
    if (ring().is_zero(x)) return Val::infinity();
    return Val::finite(monoid_value(monoid_, x));
  }
  bool support_known_zero() const override { return true; }
  Ideal support_ideal() const override { return Ideal::zero_ideal(ring()); }
  std::string describe() const override {
    return "synthesized valuation from the value classes of (" + monoid_.relation().describe() +
           ")";
  }

private:
  ValueMonoid monoid_;
  OrderedAbelianGroup group_;
};

/// Window agreement of a closed-form valuation with the relation; sampled by
/// stride on large windows.
bool valuation_agrees(const QuasiOrder& rel, const Valuation& v,
                      const std::vector<Element>& elems) {
  const OrderedAbelianGroup& G = v.group();
  const std::size_t n = elems.size();
  const std::size_t stride = n <= 1024 ? 1 : n / 1024 + 1;
  for (std::size_t i = 0; i < n; i += stride)
    for (std::size_t j = 0; j < n; j += stride)
      if (rel.leq(elems[i], elems[j]) != val_leq(G, v.vmap(elems[j]), v.vmap(elems[i])))
        return false;
  return true;
}

} // namespace

Classification classify(const QuasiOrder& rel, const Window& window) {
  const Ring& R = rel.ring();
  if (!window.ring().same_ring(R))
    fail(errc::structural, "window was built over a different ring");

  // Gate: finite rings must pass exhaustively, infinite ones on the window.
  Report gate = R.is_finite() ? check_axioms(rel) : check_axioms(rel, window);
  for (const auto& item : gate.items)
    if (item.status == CheckStatus::fail)
      fail(errc::rejected_input, "relation is not a quasi-order: " + item.name +
                                     " fails with witness " + witness_text(R, item.witness));

  SupportSet support =
      R.is_finite() ? compute_support(rel) : compute_support(rel, window);
  QuotientRingView view = quotient_quasiorder(rel, window);

  Element zero = R.zero();
  Element minus_one = R.neg(R.one());
  const bool minus_below = rel.leq(minus_one, zero) && !rel.leq(zero, minus_one);
  const bool minus_above = rel.leq(zero, minus_one) && !rel.leq(minus_one, zero);
  if (minus_below == minus_above)
    fail(errc::inconsistency,
         "sign of -1 is undetermined although the relation passed the axioms");

  if (minus_below) {
    Classification cls{Branch::ordered, std::move(support), "-1 < 0", window,
                       std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                       std::nullopt, "", std::nullopt};
    std::vector<Element> nonneg;
    for (const auto& x : window.elements())
      if (rel.leq(zero, x)) nonneg.push_back(x);
    cls.cone = PositiveCone(R, std::move(nonneg));
    if (const Order* o = rel.order_backend()) cls.order = *o;
    cls.induced = cls.order
                      ? QuasiOrder::from_order(*cls.order)
                      : QuasiOrder::from_impl(std::make_shared<DifferencePositivityRelation>(rel));
    return cls;
  }

  if (!rel.equiv(minus_one, R.one()))
    fail(errc::inconsistency, "0 < -1 holds but -1 is not equivalent to 1");
  Classification cls{Branch::valued, std::move(support), "0 < -1 and -1 ~ 1", window,
                     std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                     std::nullopt, "", std::nullopt};

  if (const Valuation* v = rel.valuation()) {
    if (valuation_agrees(rel, *v, window.elements())) {
      cls.valuation = *v;
      cls.group = v->group();
      cls.group_kind = group_kind_label(v->group().kind());
      cls.induced = QuasiOrder::from_valuation(*v);
      return cls;
    }
  }

  if (R.is_finite() || view.modulus > 0) {
    // Finite quotient: its value monoid must collapse to one class, so the
    // witnessing valuation is the trivial one at the support.
    ValueMonoid qmonoid = build_value_monoid(view.quotient_relation, Window::all(view.quotient));
    if (qmonoid.window_class_count() != 1)
      fail(errc::inconsistency,
           "finite quotient has several value classes; the input cannot be a quasi-order");
    Ideal prime = view.modulus > 0 ? Ideal::integer_multiples(R, view.modulus)
                                   : Ideal::from_elements(R, cls.support.members);
    cls.valuation = Valuation::trivial(std::move(prime));
    cls.monoid = std::move(qmonoid);
    cls.group = OrderedAbelianGroup::trivial();
    cls.group_kind = "trivial";
    cls.induced = QuasiOrder::from_valuation(*cls.valuation);
    return cls;
  }

  ValueMonoid monoid = build_value_monoid(rel, window);
  OrderedAbelianGroup group = grothendieck_group(monoid);
  cls.valuation = Valuation::from_impl(std::make_shared<SynthesizedValuation>(monoid, group));
  cls.monoid = std::move(monoid);
  cls.group = std::move(group);
  cls.group_kind = "formal_difference";
  cls.induced = QuasiOrder::from_valuation(*cls.valuation);
  return cls;
}

RoundtripResult roundtrip_check(const QuasiOrder& rel, const Classification& cls,
                                const Window& window) {
  RoundtripResult result;
  if (!cls.induced) fail(errc::precondition, "classification carries no induced relation");
  const QuasiOrder& ind = *cls.induced;
  const std::vector<Element>& elems = window.elements();

  auto diff = scan_pairs(elems.size(), [&](std::size_t i, std::size_t j) {
    return rel.leq(elems[i], elems[j]) != ind.leq(elems[i], elems[j]);
  });
  result.relation_match = !diff;
  if (diff) result.first_difference = std::make_pair(elems[(*diff)[0]], elems[(*diff)[1]]);

  SupportSet ind_support = rel.ring().is_finite() ? compute_support(ind)
                                                  : compute_support(ind, window);
  result.support_match = ind_support.members == cls.support.members;
  return result;
}

} // namespace qring
