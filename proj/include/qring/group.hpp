#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qring/rational.hpp"

namespace qring {

enum class GroupKind { trivial, free_rank_one, lex_power, formal_difference };

/// Element of an ordered abelian group: an integer vector for the trivial /
/// rank-one / lexicographic kinds, or a pair of value-monoid class ids
/// (formal difference [a] - [b]).
using GroupElement = std::variant<std::vector<i64>, std::pair<std::int32_t, std::int32_t>>;

struct GroupImpl {
  virtual ~GroupImpl() = default;
  virtual GroupKind kind() const = 0;
  virtual std::size_t rank() const = 0;
  virtual GroupElement zero() const = 0;
  virtual GroupElement add(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement neg(const GroupElement& a) const = 0;
  virtual bool eq(const GroupElement& a, const GroupElement& b) const = 0;
  virtual bool leq(const GroupElement& a, const GroupElement& b) const = 0;
  virtual std::string to_string(const GroupElement& a) const = 0;
};

/// Totally ordered abelian group, the codomain of ring valuations. The three
/// closed-form kinds compare integer vectors lexicographically; the formal
/// difference kind (built by the value-group synthesis) compares through the
/// underlying relation.
class OrderedAbelianGroup {
public:
  static OrderedAbelianGroup trivial();
  static OrderedAbelianGroup free_rank_one();
  static OrderedAbelianGroup lex_power(std::size_t rank);
  static OrderedAbelianGroup from_impl(std::shared_ptr<const GroupImpl> impl);

  GroupKind kind() const { return impl_->kind(); }
  std::size_t rank() const { return impl_->rank(); }
  GroupElement zero() const { return impl_->zero(); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const { return impl_->add(a, b); }
  GroupElement neg(const GroupElement& a) const { return impl_->neg(a); }
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
  bool eq(const GroupElement& a, const GroupElement& b) const { return impl_->eq(a, b); }
  bool leq(const GroupElement& a, const GroupElement& b) const { return impl_->leq(a, b); }
  bool lt(const GroupElement& a, const GroupElement& b) const { return leq(a, b) && !eq(a, b); }
  std::string to_string(const GroupElement& a) const { return impl_->to_string(a); }

  /// Integer-vector view when the kind supports it.
  std::optional<std::vector<i64>> vector_of(const GroupElement& a) const;

  const GroupImpl& impl() const { return *impl_; }

private:
  explicit OrderedAbelianGroup(std::shared_ptr<const GroupImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const GroupImpl> impl_;
};

struct GroupLawIssue {
  std::string law;
  std::string detail;
};

/// Sampled structure check: group laws, total order, translation
/// compatibility (a <= b implies a+c <= b+c) and torsion-freeness on the
/// given sample elements. Sample triples are capped to keep this cheap.
std::optional<GroupLawIssue> check_ordered_group(const OrderedAbelianGroup& g,
                                                 const std::vector<GroupElement>& samples);

} // namespace qring
