#include "qring/window.hpp"

#include <algorithm>

#include "qring/errors.hpp"

namespace qring {

namespace {

/// All monomials of the given arity with total degree <= d, ascending graded
/// lex, excluding nothing (the unit monomial is first).
std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(arity, 0);
  // Enumerate exponent vectors recursively, then sort by monomial order.
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
    if (var + 1 == arity) {
      for (std::uint32_t e = 0; e <= remaining; ++e) {
        exps[var] = e;
        out.push_back(Monomial(exps));
      }
      exps[var] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
      exps[var] = e;
      self(self, var + 1, remaining - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

void Window::index_elements() {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    auto [it, fresh] = index_.emplace(elems_[i], i);
    if (!fresh) fail(errc::invalid_window, "duplicate window element");
  }
}

void Window::validate() const {
  auto need = [this](const Element& e, const char* what) {
    if (!contains(e)) fail(errc::invalid_window, std::string("window must contain ") + what);
  };
  need(ring_.zero(), "0");
  need(ring_.one(), "1");
  need(ring_.from_integer(-1), "-1");
  for (const auto& e : elems_)
    if (!contains(ring_.neg(e)))
      fail(errc::invalid_window, "window not closed under negation at " + ring_.to_string(e));
}

Window Window::all(const Ring& ring) {
  if (!ring.is_finite()) fail(errc::invalid_window, "full-universe window requires a finite ring");
  Window w(ring, WindowKind::all);
  w.elems_ = ring.elements();
  w.index_elements();
  w.validate();
  return w;
}

Window Window::integer_interval(const Ring& ring, i64 lo, i64 hi) {
  if (ring.kind() != RingKind::integers)
    fail(errc::invalid_window, "interval windows require the Integers backend");
  if (lo != -hi || hi < 1)
    fail(errc::invalid_window, "interval window must be symmetric: lo = -hi with hi >= 1");
  Window w(ring, WindowKind::integer_interval);
  w.lo_ = lo;
  w.hi_ = hi;
  w.elems_.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (i64 v = lo; v <= hi; ++v) w.elems_.push_back(Element(v));
  w.index_elements();
  w.validate();
  return w;
}

Window Window::polynomial(const Ring& ring, std::uint32_t max_degree, std::vector<i64> coeffs) {
  if (ring.kind() != RingKind::polynomial)
    fail(errc::invalid_window, "polynomial windows require a polynomial ring");
  if (coeffs.empty()) fail(errc::invalid_window, "polynomial window needs coefficients");

  // Canonical coefficient order: |c| ascending, positive before negative.
  std::vector<i64> cs;
  for (i64 c : coeffs) {
    if (c == 0) fail(errc::invalid_window, "zero is not a window coefficient");
    if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    if (std::find(cs.begin(), cs.end(), -c) == cs.end()) cs.push_back(-c);
  }
  std::sort(cs.begin(), cs.end(), [](i64 a, i64 b) {
    i64 aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    if (aa != ab) return aa < ab;
    return a > b;
  });

  const std::size_t arity = ring.variables().size();
  auto monos = monomials_up_to(arity, max_degree);

  Window w(ring, WindowKind::polynomial);
  w.max_degree_ = max_degree;
  w.coeffs_ = cs;
  w.elems_.push_back(ring.zero());
  for (const auto& m : monos)
    for (i64 c : cs) w.elems_.push_back(Element(Polynomial::term(arity, m, Rational(c))));
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = i + 1; j < monos.size(); ++j)
      for (i64 c1 : cs)
        for (i64 c2 : cs) {
          Polynomial p = Polynomial::term(arity, monos[i], Rational(c1)) +
                         Polynomial::term(arity, monos[j], Rational(c2));
          w.elems_.push_back(Element(std::move(p)));
        }
  w.index_elements();
  w.validate();
  return w;
}

std::optional<std::size_t> Window::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Window::describe() const {
  switch (kind_) {
    case WindowKind::all:
      return "all " + std::to_string(elems_.size()) + " elements of " + ring_.describe();
    case WindowKind::integer_interval:
      return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
    case WindowKind::polynomial: {
      std::string s = "degree<=" + std::to_string(max_degree_) + ", coeffs {";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
      }
      return s + "} (" + std::to_string(elems_.size()) + " polynomials)";
    }
  }
  return "";
}

} // namespace qring
