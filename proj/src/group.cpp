#include "qring/group.hpp"

#include <algorithm>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

namespace {

const std::vector<i64>& vec_of(const GroupElement& a) {
  const auto* v = std::get_if<std::vector<i64>>(&a);
  if (!v) fail(errc::structural, "group element belongs to a formal-difference group");
  return *v;
}

/// Z^k under lexicographic order; k = 0 is the trivial group, k = 1 the
/// integers.
class VectorGroup final : public GroupImpl {
public:
  explicit VectorGroup(std::size_t rank) : rank_(rank) {}

  GroupKind kind() const override {
    if (rank_ == 0) return GroupKind::trivial;
    if (rank_ == 1) return GroupKind::free_rank_one;
    return GroupKind::lex_power;
  }
  std::size_t rank() const override { return rank_; }
  GroupElement zero() const override { return std::vector<i64>(rank_, 0); }

  GroupElement add(const GroupElement& a, const GroupElement& b) const override {
    const auto& va = checked(a);
    const auto& vb = checked(b);
    std::vector<i64> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i] = checked_add(va[i], vb[i]);
    return out;
  }
  GroupElement neg(const GroupElement& a) const override {
    const auto& va = checked(a);
    std::vector<i64> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i] = checked_neg(va[i]);
    return out;
  }
  bool eq(const GroupElement& a, const GroupElement& b) const override {
    return checked(a) == checked(b);
  }
  bool leq(const GroupElement& a, const GroupElement& b) const override {
    const auto& va = checked(a);
    const auto& vb = checked(b);
    return !std::lexicographical_compare(vb.begin(), vb.end(), va.begin(), va.end());
  }
  std::string to_string(const GroupElement& a) const override {
    const auto& va = checked(a);
    if (rank_ == 0) return "0";
    if (rank_ == 1) return std::to_string(va[0]);
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) out << ",";
      out << va[i];
    }
    out << ")";
    return out.str();
  }

private:
  const std::vector<i64>& checked(const GroupElement& a) const {
    const auto& v = vec_of(a);
    if (v.size() != rank_) fail(errc::structural, "group element rank mismatch");
    return v;
  }
  std::size_t rank_;
};

} // namespace

OrderedAbelianGroup OrderedAbelianGroup::trivial() {
  return OrderedAbelianGroup(std::make_shared<VectorGroup>(0));
}
OrderedAbelianGroup OrderedAbelianGroup::free_rank_one() {
  return OrderedAbelianGroup(std::make_shared<VectorGroup>(1));
}
OrderedAbelianGroup OrderedAbelianGroup::lex_power(std::size_t rank) {
  return OrderedAbelianGroup(std::make_shared<VectorGroup>(rank));
}
OrderedAbelianGroup OrderedAbelianGroup::from_impl(std::shared_ptr<const GroupImpl> impl) {
  return OrderedAbelianGroup(std::move(impl));
}

std::optional<std::vector<i64>> OrderedAbelianGroup::vector_of(const GroupElement& a) const {
  if (kind() == GroupKind::formal_difference) return std::nullopt;
  return vec_of(a);
}

std::optional<GroupLawIssue> check_ordered_group(const OrderedAbelianGroup& g,
                                                 const std::vector<GroupElement>& samples) {
  constexpr std::size_t kTripleCap = 24;
  const std::size_t n = samples.size();
  const std::size_t t = std::min(n, kTripleCap);

  auto str2 = [&g](const GroupElement& a, const GroupElement& b) {
    return g.to_string(a) + ", " + g.to_string(b);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = samples[i];
    if (!g.eq(g.add(a, g.zero()), a)) return GroupLawIssue{"identity", g.to_string(a)};
    if (!g.eq(g.add(a, g.neg(a)), g.zero())) return GroupLawIssue{"inverse", g.to_string(a)};
    // Torsion-freeness: n*a = 0 forces a = 0 (n <= 6 sampled).
    GroupElement acc = g.zero();
    for (int k = 1; k <= 6; ++k) {
      acc = g.add(acc, a);
      if (g.eq(acc, g.zero()) && !g.eq(a, g.zero()))
        return GroupLawIssue{"torsion", std::to_string(k) + " * " + g.to_string(a) + " = 0"};
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      if (!g.eq(g.add(a, b), g.add(b, a))) return GroupLawIssue{"commutativity", str2(a, b)};
      if (!g.leq(a, b) && !g.leq(b, a)) return GroupLawIssue{"totality", str2(a, b)};
      if (g.leq(a, b) && g.leq(b, a) && !g.eq(a, b)) return GroupLawIssue{"antisymmetry", str2(a, b)};
    }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k) {
        const auto& a = samples[i];
        const auto& b = samples[j];
        const auto& c = samples[k];
        if (!g.eq(g.add(g.add(a, b), c), g.add(a, g.add(b, c))))
          return GroupLawIssue{"associativity", str2(a, b) + ", " + g.to_string(c)};
        if (g.leq(a, b) && !g.leq(g.add(a, c), g.add(b, c)))
          return GroupLawIssue{"translation", str2(a, b) + " + " + g.to_string(c)};
        if (g.leq(a, b) && g.leq(b, c) && !g.leq(a, c))
          return GroupLawIssue{"transitivity", str2(a, b) + ", " + g.to_string(c)};
      }
  return std::nullopt;
}

} // namespace qring
