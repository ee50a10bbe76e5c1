#include "qring/ideal.hpp"

#include <algorithm>
#include <set>

#include "qring/errors.hpp"

namespace qring {

namespace {

std::vector<Element> sort_by_ring_index(const Ring& ring, std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end(), [&ring](const Element& a, const Element& b) {
    return ring.index_of(a) < ring.index_of(b);
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

} // namespace

Ideal Ideal::from_elements(const Ring& ring, std::vector<Element> elements) {
  if (!ring.is_finite()) fail(errc::invalid_ideal, "explicit ideal sets require a finite ring");
  for (const auto& e : elements) ring.require_element(e);
  elements.push_back(ring.zero());
  elements = sort_by_ring_index(ring, std::move(elements));

  std::set<std::size_t> member;
  for (const auto& e : elements) member.insert(ring.index_of(e));
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!member.count(ring.index_of(ring.add(a, b))))
        fail(errc::invalid_ideal, "set not closed under addition: " + ring.to_string(a) + " + " +
                                      ring.to_string(b));
  for (const auto& a : elements)
    for (const auto& r : ring.elements())
      if (!member.count(ring.index_of(ring.mul(a, r))))
        fail(errc::invalid_ideal, "set not closed under ring multiplication: " +
                                      ring.to_string(r) + " * " + ring.to_string(a));
  return Ideal(ring, true, std::move(elements), -1);
}

Ideal Ideal::span(const Ring& ring, const std::vector<Element>& generators) {
  if (ring.kind() == RingKind::integers) {
    i64 m = 0;
    for (const auto& g : generators) {
      ring.require_element(g);
      m = std::gcd(m, g.scalar());
    }
    return integer_multiples(ring, m < 0 ? -m : m);
  }
  if (!ring.is_finite()) fail(errc::invalid_ideal, "ideal span requires a finite ring or Integers");
  for (const auto& g : generators) ring.require_element(g);

  std::set<std::size_t> member{ring.index_of(ring.zero())};
  std::vector<Element> frontier{ring.zero()};
  for (const auto& g : generators)
    if (member.insert(ring.index_of(g)).second) frontier.push_back(g);

  std::vector<Element> all(frontier);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& y : all) {
        Element s = ring.add(x, y);
        if (member.insert(ring.index_of(s)).second) next.push_back(s);
      }
      for (const auto& r : ring.elements()) {
        Element p = ring.mul(r, x);
        if (member.insert(ring.index_of(p)).second) next.push_back(p);
      }
    }
    for (const auto& e : next) all.push_back(e);
    frontier = std::move(next);
  }
  return Ideal(ring, true, sort_by_ring_index(ring, std::move(all)), -1);
}

Ideal Ideal::integer_multiples(const Ring& ring, i64 m) {
  if (ring.kind() != RingKind::integers)
    fail(errc::invalid_ideal, "symbolic (m) ideals require the Integers backend");
  if (m < 0) fail(errc::invalid_ideal, "ideal modulus must be nonnegative");
  return Ideal(ring, false, {}, m);
}

Ideal Ideal::zero_ideal(const Ring& ring) {
  if (ring.kind() == RingKind::integers) return integer_multiples(ring, 0);
  if (ring.is_finite()) return Ideal(ring, true, {ring.zero()}, -1);
  return Ideal(ring, false, {}, -1);
}

bool Ideal::contains(const Element& e) const {
  ring_.require_element(e);
  if (explicit_)
    return std::binary_search(elems_.begin(), elems_.end(), e,
                              [this](const Element& a, const Element& b) {
                                return ring_.index_of(a) < ring_.index_of(b);
                              });
  if (m_ >= 0) return m_ == 0 ? e.scalar() == 0 : e.scalar() % m_ == 0;
  return ring_.is_zero(e);
}

bool Ideal::is_zero_ideal() const {
  if (explicit_) return elems_.size() == 1;
  return m_ <= 0;
}

const std::vector<Element>& Ideal::elements() const {
  if (!explicit_) fail(errc::unsupported, "ideal has no explicit element set");
  return elems_;
}

std::size_t Ideal::size() const { return elements().size(); }

std::vector<Element> Ideal::generators() const {
  if (!explicit_) {
    if (m_ > 0) return {Element(m_)};
    return {};
  }
  // Greedy cover: repeatedly add the first element not yet spanned.
  std::vector<Element> gens;
  Ideal current = zero_ideal(ring_);
  for (const auto& e : elems_) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    std::vector<Element> g = gens;
    current = span(ring_, g);
    if (current.size() == elems_.size()) break;
  }
  return gens;
}

std::string Ideal::describe() const {
  std::string s = "(";
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += ring_.to_string(gens[i]);
  }
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!a.ring_.same_ring(b.ring_)) return false;
  if (a.explicit_ && b.explicit_) return a.elems_ == b.elems_;
  if (!a.explicit_ && !b.explicit_) return a.m_ == b.m_;
  return false;
}

PrimalityReport is_prime_ideal(const Ring& ring, const Ideal& ideal) {
  PrimalityReport rep;
  if (!ideal.ring().same_ring(ring)) fail(errc::structural, "ideal belongs to a different ring");

  if (!ideal.has_explicit_elements()) {
    if (ring.kind() == RingKind::integers) {
      // (m): always an ideal; prime iff m = 0 or m is prime.
      rep.is_ideal = true;
      rep.exhaustive = true; // decidable in closed form
      auto gens = ideal.generators();
      i64 m = gens.empty() ? 0 : gens[0].scalar();
      if (m == 1) {
        rep.proper = false;
        rep.note = "contains 1";
        return rep;
      }
      rep.proper = true;
      if (m == 0) {
        rep.prime = true;
        return rep;
      }
      for (i64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          rep.prime = false;
          rep.witness = {Element(d), Element(m / d)};
          rep.note = "composite modulus";
          return rep;
        }
      rep.prime = m >= 2;
      return rep;
    }
    // Symbolic {0} on an infinite backend: prime iff the ring is a domain.
    rep.is_ideal = true;
    rep.proper = true;
    rep.exhaustive = true;
    rep.prime = ring.is_integral_domain();
    if (!rep.prime) rep.note = "zero ideal of a ring with zero divisors";
    return rep;
  }

  // Finite backend: exhaustive checks.
  rep.exhaustive = true;
  const auto& elems = ideal.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (!ideal.contains(ring.add(a, b))) {
        rep.witness = {a, b};
        rep.note = "not closed under addition";
        return rep;
      }
  for (const auto& a : elems)
    for (const auto& r : ring.elements())
      if (!ideal.contains(ring.mul(r, a))) {
        rep.witness = {r, a};
        rep.note = "not closed under ring multiplication";
        return rep;
      }
  rep.is_ideal = true;

  if (ideal.contains(ring.one())) {
    rep.proper = false;
    rep.note = "contains 1";
    return rep;
  }
  rep.proper = true;

  for (const auto& x : ring.elements())
    for (const auto& y : ring.elements())
      if (ideal.contains(ring.mul(x, y)) && !ideal.contains(x) && !ideal.contains(y)) {
        rep.prime = false;
        rep.witness = {x, y};
        rep.note = "product in ideal with both factors outside";
        return rep;
      }
  rep.prime = true;
  return rep;
}

} // namespace qring
