#include "qring/element.hpp"

#include "qring/errors.hpp"

namespace qring {

i64 Element::scalar() const {
  if (!is_scalar()) fail(errc::structural, "element is not a scalar");
  return std::get<i64>(value_);
}

const Polynomial& Element::polynomial() const {
  if (!is_polynomial()) fail(errc::structural, "element is not a polynomial");
  return std::get<Polynomial>(value_);
}

const Tuple& Element::tuple() const {
  if (!is_tuple()) fail(errc::structural, "element is not a tuple");
  return std::get<Tuple>(value_);
}

int Element::structural_compare(const Element& a, const Element& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index() ? -1 : 1;
  if (a.is_scalar()) {
    i64 x = a.scalar(), y = b.scalar();
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  if (a.is_polynomial()) return Polynomial::structural_compare(a.polynomial(), b.polynomial());
  const Tuple& ta = a.tuple();
  const Tuple& tb = b.tuple();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = structural_compare(ta[i], tb[i]);
    if (c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

std::size_t Element::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(value_.index());
  if (is_scalar()) {
    mix(static_cast<std::uint64_t>(scalar()));
  } else if (is_polynomial()) {
    mix(polynomial().hash());
  } else {
    for (const auto& e : tuple()) mix(e.hash());
  }
  return static_cast<std::size_t>(h);
}

} // namespace qring
