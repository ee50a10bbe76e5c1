#include "qring/value_group.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "qring/errors.hpp"
#include "qring/scan.hpp"

namespace qring {

struct ValueMonoid::Data {
  QuasiOrder rel;
  Window window;
  std::vector<Element> reps;      // window classes, scan order
  std::vector<Element> alternate; // second window member per class, else rep
  std::int32_t one_class = -1;

  // Classes discovered through products of representatives. Ids continue
  // after the window classes; lookups compare through the relation, so the
  // discovery order never changes a comparison outcome.
  mutable std::mutex mu;
  mutable std::vector<Element> extra;
  mutable std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> product_memo;

  Data(QuasiOrder r, Window w) : rel(std::move(r)), window(std::move(w)) {}

  Element rep_at(std::int32_t cls) const {
    if (cls < static_cast<std::int32_t>(reps.size())) return reps[static_cast<std::size_t>(cls)];
    return extra[static_cast<std::size_t>(cls) - reps.size()];
  }

  // Locked: resolve the class of a nonzero element, registering a new class
  // when it matches none.
  std::int32_t resolve(const Element& x) const {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (rel.equiv(x, reps[i])) return static_cast<std::int32_t>(i);
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (rel.equiv(x, extra[i])) return static_cast<std::int32_t>(reps.size() + i);
    if (rel.equiv(x, rel.ring().zero()))
      fail(errc::inconsistency,
           "value class requested for " + rel.ring().to_string(x) +
               " although it is equivalent to 0 (support is not multiplicatively closed)");
    extra.push_back(x);
    return static_cast<std::int32_t>(reps.size() + extra.size() - 1);
  }
};

const QuasiOrder& ValueMonoid::relation() const { return data_->rel; }
const Ring& ValueMonoid::ring() const { return data_->rel.ring(); }
const Window& ValueMonoid::window() const { return data_->window; }
std::size_t ValueMonoid::window_class_count() const { return data_->reps.size(); }
std::int32_t ValueMonoid::one_class() const { return data_->one_class; }

Element ValueMonoid::representative(std::int32_t cls) const {
  std::lock_guard<std::mutex> lock(data_->mu);
  return data_->rep_at(cls);
}

Element ValueMonoid::alternate_member(std::int32_t cls) const {
  if (cls < static_cast<std::int32_t>(data_->alternate.size()))
    return data_->alternate[static_cast<std::size_t>(cls)];
  std::lock_guard<std::mutex> lock(data_->mu);
  return data_->rep_at(cls);
}

std::int32_t ValueMonoid::class_of(const Element& x) const {
  std::lock_guard<std::mutex> lock(data_->mu);
  return data_->resolve(x);
}

std::int32_t ValueMonoid::mul(std::int32_t a, std::int32_t b) const {
  if (a > b) std::swap(a, b);
  std::lock_guard<std::mutex> lock(data_->mu);
  auto key = std::make_pair(a, b);
  auto it = data_->product_memo.find(key);
  if (it != data_->product_memo.end()) return it->second;
  Element product = ring().mul(data_->rep_at(a), data_->rep_at(b));
  std::int32_t cls = data_->resolve(product);
  data_->product_memo.emplace(key, cls);
  return cls;
}

bool ValueMonoid::leq(std::int32_t a, std::int32_t b) const {
  Element ra, rb;
  {
    std::lock_guard<std::mutex> lock(data_->mu);
    ra = data_->rep_at(a);
    rb = data_->rep_at(b);
  }
  return data_->rel.leq(rb, ra); // reversed: higher under the relation = smaller value
}

ValueMonoid build_value_monoid(const QuasiOrder& rel, const Window& window) {
  if (!window.ring().same_ring(rel.ring()))
    fail(errc::structural, "window was built over a different ring");
  const Ring& R = rel.ring();
  const std::vector<Element>& elems = window.elements();
  const std::size_t n = elems.size();

  auto data = std::make_shared<ValueMonoid::Data>(rel, window);

  // Support must be {0} on the window, otherwise classes of ~ are not a
  // cancellative monoid and the construction is meaningless.
  for (const auto& x : elems)
    if (rel.equiv(x, R.zero()) && !R.is_zero(x))
      fail(errc::precondition,
           "value monoid needs support {0}, but " + R.to_string(x) + " ~ 0 on the window");

  // Cancellativity on window triples: z !~ 0 and xz ~ yz imply x ~ y.
  auto zero = R.zero();
  auto cancel = scan_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element& z = elems[k];
    if (rel.equiv(z, zero)) return false;
    Element xz = R.mul(elems[i], z);
    Element yz = R.mul(elems[j], z);
    return rel.equiv(xz, yz) && !rel.equiv(elems[i], elems[j]);
  });
  if (cancel)
    fail(errc::inconsistency,
         "value classes are not cancellative: x = " + R.to_string(elems[(*cancel)[0]]) +
             ", y = " + R.to_string(elems[(*cancel)[1]]) + ", z = " +
             R.to_string(elems[(*cancel)[2]]) + " have xz ~ yz but x !~ y");

  // Window classes in scan order, keeping one alternate member when the
  // window offers a second element of the class.
  for (const auto& x : elems) {
    if (R.is_zero(x)) continue;
    bool placed = false;
    for (std::size_t c = 0; c < data->reps.size() && !placed; ++c) {
      if (rel.equiv(x, data->reps[c])) {
        if (data->alternate[c] == data->reps[c]) data->alternate[c] = x;
        placed = true;
      }
    }
    if (!placed) {
      data->reps.push_back(x);
      data->alternate.push_back(x);
    }
  }
  if (data->reps.empty())
    fail(errc::precondition, "window holds no nonzero element, no value classes exist");

  ValueMonoid monoid;
  monoid.data_ = data;
  monoid.data_->one_class = monoid.class_of(R.one());

  // Class order: total, and compatible with multiplication. Class counts are
  // window-bounded; sample stride keeps the triple scan at desk scale.
  const std::size_t c = data->reps.size();
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      if (!monoid.leq(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)) &&
          !monoid.leq(static_cast<std::int32_t>(b), static_cast<std::int32_t>(a)))
        fail(errc::inconsistency,
             "class order is not total between [" + R.to_string(data->reps[a]) + "] and [" +
                 R.to_string(data->reps[b]) + "]");
  const std::size_t stride = c <= 64 ? 1 : c / 64 + 1;
  for (std::size_t a = 0; a < c; a += stride) {
    for (std::size_t b = 0; b < c; b += stride) {
      if (!monoid.leq(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b))) continue;
      for (std::size_t k = 0; k < c; k += stride) {
        auto ak = monoid.mul(static_cast<std::int32_t>(a), static_cast<std::int32_t>(k));
        auto bk = monoid.mul(static_cast<std::int32_t>(b), static_cast<std::int32_t>(k));
        if (!monoid.leq(ak, bk))
          fail(errc::inconsistency,
               "class order is not compatible with multiplication at [" +
                   R.to_string(data->reps[a]) + "], [" + R.to_string(data->reps[b]) + "], [" +
                   R.to_string(data->reps[k]) + "]");
      }
    }
  }
  return monoid;
}

namespace {

/// Formal differences of value-monoid classes, ordered through the ring
/// relation: ([a],[b]) <= ([c],[d]) iff cb <= ad (cross products flip the
/// reversed monoid order back into a group order).
class FormalDifferenceGroup final : public GroupImpl {
public:
  explicit FormalDifferenceGroup(ValueMonoid monoid) : m_(std::move(monoid)) {}

  GroupKind kind() const override { return GroupKind::formal_difference; }
  std::size_t rank() const override { return 0; } // no fixed coordinate shape
  GroupElement zero() const override { return pair(m_.one_class(), m_.one_class()); }

  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    auto [x, y] = ids(a);
    auto [u, v] = ids(b);
    return pair(m_.mul(x, u), m_.mul(y, v));
  }

  GroupElement neg(const GroupElement& a) const override {
    auto [x, y] = ids(a);
    return pair(y, x);
  }

  bool eq(const GroupElement& a, const GroupElement& b) const override {
    auto [x, y] = ids(a);
    auto [u, v] = ids(b);
    return m_.mul(x, v) == m_.mul(u, y);
  }

  bool leq(const GroupElement& a, const GroupElement& b) const override {
    auto [x, y] = ids(a);
    auto [u, v] = ids(b);
    // ([x],[y]) <= ([u],[v]) iff [xv] <= [uy] in the monoid order.
    return m_.leq(m_.mul(x, v), m_.mul(u, y));
  }

  std::string to_string(const GroupElement& a) const override {
    auto [x, y] = ids(a);
    const Ring& R = m_.ring();
    return "[" + R.to_string(m_.representative(x)) + "] - [" +
           R.to_string(m_.representative(y)) + "]";
  }

  const ValueMonoid& monoid() const { return m_; }

private:
  static GroupElement pair(std::int32_t a, std::int32_t b) {
    return GroupElement{std::in_place_index<1>, std::make_pair(a, b)};
  }
  static std::pair<std::int32_t, std::int32_t> ids(const GroupElement& e) {
    if (e.index() != 1)
      fail(errc::structural, "formal-difference group got a vector-shaped element");
    return std::get<1>(e);
  }

  ValueMonoid m_;
};

} // namespace

OrderedAbelianGroup grothendieck_group(const ValueMonoid& monoid) {
  auto impl = std::make_shared<FormalDifferenceGroup>(monoid);
  OrderedAbelianGroup g = OrderedAbelianGroup::from_impl(impl);

  // Representative independence: swapping a class representative for another
  // window member of the same class never changes a comparison.
  const Ring& R = monoid.ring();
  const std::size_t c = monoid.window_class_count();
  const std::size_t stride = c <= 32 ? 1 : c / 32 + 1;
  for (std::size_t a = 0; a < c; a += stride) {
    Element ra = monoid.representative(static_cast<std::int32_t>(a));
    Element aa = monoid.alternate_member(static_cast<std::int32_t>(a));
    if (aa == ra) continue;
    for (std::size_t b = 0; b < c; b += stride) {
      Element rb = monoid.representative(static_cast<std::int32_t>(b));
      for (std::size_t d = 0; d < c; d += stride) {
        Element rd = monoid.representative(static_cast<std::int32_t>(d));
        const QuasiOrder& rel = monoid.relation();
        // ([a],[b]) <= ([d],[b]) computed through either member of [a].
        bool via_rep = rel.leq(R.mul(rd, rb), R.mul(ra, rb));
        bool via_alt = rel.leq(R.mul(rd, rb), R.mul(aa, rb));
        if (via_rep != via_alt)
          fail(errc::inconsistency,
               "formal-difference order depends on the representative of [" +
                   R.to_string(ra) + "] (alternate " + R.to_string(aa) + ")");
      }
    }
  }

  // Sampled group laws and order compatibility over window-generated values.
  std::vector<GroupElement> samples;
  for (std::size_t a = 0; a < c && samples.size() < 12; a += stride)
    samples.push_back(monoid_value(monoid, monoid.representative(static_cast<std::int32_t>(a))));
  if (auto issue = check_ordered_group(g, samples))
    fail(errc::inconsistency,
         "synthesized value group violates " + issue->law + ": " + issue->detail);
  return g;
}

GroupElement monoid_value(const ValueMonoid& monoid, const Element& x) {
  return GroupElement{std::in_place_index<1>,
                      std::make_pair(monoid.class_of(x), monoid.one_class())};
}

} // namespace qring
