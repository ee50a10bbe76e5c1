#include "qring/quotient.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "qring/errors.hpp"

namespace qring {
namespace {

// Exhaustive on finite rings: x ~ x + c for every x and every support member
// c, otherwise the induced relation on cosets is not a function of the coset.
void verify_well_defined(const QuasiOrder& rel, const std::vector<Element>& universe,
                         const std::vector<Element>& support) {
  const Ring& R = rel.ring();
  for (const auto& x : universe) {
    for (const auto& c : support) {
      Element shifted = R.add(x, c);
      if (!rel.equiv(x, shifted))
        fail(errc::rejected_input,
             "quotient is ill-defined: " + R.to_string(x) + " is not equivalent to " +
                 R.to_string(x) + " + " + R.to_string(c) +
                 " although the second summand lies in the support");
    }
  }
}

QuotientRingView identity_view(const QuasiOrder& rel, SupportSet support) {
  QuotientRingView view{rel.ring(), rel.ring(), rel,  rel, std::move(support),
                        /*identity=*/true,      {},   {},  0};
  return view;
}

QuotientRingView finite_view(const QuasiOrder& rel) {
  const Ring& R = rel.ring();
  SupportSet support = compute_support(rel);
  verify_well_defined(rel, R.elements(), support.members);

  const std::size_t n = R.size();
  // Coset representative of each element: the enumeration-order minimum of
  // x + E0. Representatives collect in enumeration order, so 0 comes first.
  std::vector<std::size_t> rep_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    for (const auto& c : support.members)
      best = std::min(best, R.index_of(R.add(R.elements()[i], c)));
    rep_of[i] = best;
  }

  std::vector<Element> reps;
  std::vector<i64> proj(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (rep_of[i] == i) {
      proj[i] = static_cast<i64>(reps.size());
      reps.push_back(R.elements()[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) proj[i] = proj[rep_of[i]];

  const std::size_t q = reps.size();
  std::vector<std::vector<i64>> add(q, std::vector<i64>(q));
  std::vector<std::vector<i64>> mul(q, std::vector<i64>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      add[i][j] = proj[R.index_of(R.add(reps[i], reps[j]))];
      mul[i][j] = proj[R.index_of(R.mul(reps[i], reps[j]))];
    }
  }
  Ring quotient = Ring::table(add, mul);

  std::vector<std::vector<std::uint8_t>> rows(q, std::vector<std::uint8_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) rows[i][j] = rel.leq(reps[i], reps[j]) ? 1 : 0;
  QuasiOrder induced = QuasiOrder::matrix(quotient, rows);

  SupportSet qsupport = compute_support(induced);
  if (qsupport.members.size() != 1 || !quotient.is_zero(qsupport.members[0]))
    fail(errc::inconsistency, "support of the induced quotient relation is not {0}");

  QuotientRingView view{R,
                        std::move(quotient),
                        rel,
                        std::move(induced),
                        std::move(support),
                        /*identity=*/false,
                        std::move(reps),
                        std::move(proj)};
  return view;
}

QuotientRingView integer_view(const QuasiOrder& rel, i64 m,
                              const std::optional<Window>& window) {
  const Ring& Z = rel.ring();
  Ring quotient = Ring::modular(m);
  QuasiOrder induced = QuasiOrder::trivial_at_prime(Ideal::zero_ideal(quotient));

  SupportSet support{false, {}};
  if (window) {
    support = compute_support(rel, window);
    verify_well_defined(rel, window->elements(), support.members);
  }

  QuotientRingView view{Z,
                        std::move(quotient),
                        rel,
                        std::move(induced),
                        std::move(support),
                        /*identity=*/false,
                        {},
                        {},
                        m};
  return view;
}

class LiftedValuation final : public ValuationImpl {
public:
  LiftedValuation(Valuation inner, QuotientRingView view, Ideal support)
      : inner_(std::move(inner)), view_(std::move(view)), support_(std::move(support)) {}

  ValuationKind kind() const override { return ValuationKind::lifted; }
  const Ring& ring() const override { return view_.base; }
  const OrderedAbelianGroup& group() const override { return inner_.group(); }
  Val vmap(const Element& x) const override { return inner_.vmap(view_.project(x)); }
  bool support_known_zero() const override { return false; }
  Ideal support_ideal() const override { return support_; }
  std::string describe() const override {
    return "lift of (" + inner_.describe() + ") along the quotient of " + view_.base.describe();
  }

private:
  Valuation inner_;
  QuotientRingView view_;
  Ideal support_;
};

} // namespace

Element QuotientRingView::project(const Element& x) const {
  if (identity) return x;
  if (modulus > 0) return quotient.from_integer(x.scalar());
  return Element(projection[static_cast<std::size_t>(base.index_of(x))]);
}

Element QuotientRingView::representative(const Element& q) const {
  if (identity) return q;
  if (modulus > 0) return Element(q.scalar());
  return representatives[static_cast<std::size_t>(q.scalar())];
}

QuotientRingView quotient_quasiorder(const QuasiOrder& rel,
                                     const std::optional<Window>& window) {
  if (window && !window->ring().same_ring(rel.ring()))
    fail(errc::structural, "window ring does not match the relation ring");

  if (rel.support_known_zero()) {
    SupportSet support{true, {rel.ring().zero()}};
    return identity_view(rel, std::move(support));
  }

  if (rel.ring().is_finite()) {
    SupportSet support = compute_support(rel);
    if (support.members.size() == 1) return identity_view(rel, std::move(support));
    return finite_view(rel);
  }

  // Infinite base: the only representable nontrivial support is the symbolic
  // ideal (m) on the Integers backend, carried by a valuation backend.
  if (const Valuation* v = rel.valuation()) {
    Ideal sup = v->support_ideal();
    if (sup.is_zero_ideal()) {
      SupportSet support{true, {rel.ring().zero()}};
      return identity_view(rel, std::move(support));
    }
    if (!sup.has_explicit_elements() && rel.ring().kind() == RingKind::integers) {
      std::vector<Element> gens = sup.generators();
      if (gens.size() == 1 && gens[0].is_scalar() && gens[0].scalar() > 1)
        return integer_view(rel, gens[0].scalar(), window);
    }
  }
  fail(errc::unsupported,
       "quotient by a nontrivial support needs a finite ring or a symbolic integer ideal");
}

Valuation lift_valuation(const Valuation& qv, const QuotientRingView& view) {
  if (!qv.ring().same_ring(view.quotient))
    fail(errc::structural, "valuation does not live on the quotient ring of this view");
  if (!qv.support_ideal().is_zero_ideal())
    fail(errc::precondition, "valuation on the quotient must have support {0}");
  if (view.identity) return qv;

  Ideal support = view.modulus > 0
                      ? Ideal::integer_multiples(view.base, view.modulus)
                      : Ideal::from_elements(view.base, view.support.members);
  return Valuation::from_impl(
      std::make_shared<LiftedValuation>(qv, view, std::move(support)));
}

Order lift_order(const Order& qo, const QuotientRingView& view) {
  if (!qo.ring().same_ring(view.quotient))
    fail(errc::structural, "order does not live on the quotient ring of this view");
  if (view.identity) return qo;
  fail(errc::unsupported,
       "order lift on a nontrivial quotient is unreachable: no finite ring carries a ring "
       "order, so quotient orders only arise on identity views");
}

} // namespace qring
