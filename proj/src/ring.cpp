#include "qring/ring.hpp"

#include <sstream>
#include <unordered_map>

#include "qring/errors.hpp"

namespace qring {

namespace {

constexpr std::size_t kEnumerationCap = 4096;

i64 floor_mod(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

} // namespace

struct Ring::Impl {
  RingKind kind;
  i64 n = 0; // modulus (modular) or table size
  std::vector<std::string> vars;
  std::vector<Ring> factors;
  std::vector<std::vector<i64>> add_t, mul_t;
  i64 zero_idx = 0, one_idx = 0;

  bool finite = false;
  bool integral_domain = false;
  bool field = false;
  std::vector<Element> elems;
  std::unordered_map<Element, std::size_t, ElementHash> index;

  void enumerate_finite();
};

void Ring::Impl::enumerate_finite() {
  if (!finite) return;
  std::size_t total = 1;
  switch (kind) {
    case RingKind::modular:
    case RingKind::table:
      total = static_cast<std::size_t>(n);
      break;
    case RingKind::product:
      for (const auto& f : factors) {
        total *= f.size();
        if (total > kEnumerationCap) break;
      }
      break;
    default:
      return;
  }
  if (total > kEnumerationCap)
    fail(errc::limit, "finite ring too large to enumerate (cap " + std::to_string(kEnumerationCap) + ")");

  if (kind == RingKind::modular || kind == RingKind::table) {
    for (i64 i = 0; i < n; ++i) elems.push_back(Element(i));
  } else {
    // Cartesian product, first factor most significant.
    elems.push_back(Element(Tuple{}));
    for (const auto& f : factors) {
      std::vector<Element> next;
      next.reserve(elems.size() * f.size());
      for (const auto& prefix : elems)
        for (const auto& fe : f.elements()) {
          Tuple t = prefix.tuple();
          t.push_back(fe);
          next.push_back(Element(std::move(t)));
        }
      elems = std::move(next);
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
}

Ring Ring::modular(i64 n) {
  if (n < 2) fail(errc::structural, "modular ring requires n >= 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::modular;
  impl->n = n;
  impl->finite = true;
  bool prime = n >= 2;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime = false;
      break;
    }
  impl->integral_domain = prime;
  impl->field = prime;
  impl->enumerate_finite();
  return Ring(std::move(impl));
}

Ring Ring::integers() {
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::integers;
  impl->integral_domain = true;
  return Ring(std::move(impl));
}

Ring Ring::polynomial(std::vector<std::string> variables) {
  if (variables.empty()) fail(errc::structural, "polynomial ring requires at least one variable");
  for (const auto& v : variables)
    if (v.empty()) fail(errc::structural, "empty variable name");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::polynomial;
  impl->vars = std::move(variables);
  impl->integral_domain = true;
  return Ring(std::move(impl));
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.empty()) fail(errc::structural, "product ring requires at least one factor");
  for (const auto& f : factors)
    if (!f.is_finite()) fail(errc::structural, "product ring factors must be finite backends");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::product;
  impl->factors = std::move(factors);
  impl->finite = true;
  impl->integral_domain =
      impl->factors.size() == 1 && impl->factors[0].is_integral_domain();
  impl->field = impl->factors.size() == 1 && impl->factors[0].is_field();
  impl->enumerate_finite();
  return Ring(std::move(impl));
}

Ring Ring::table(const std::vector<std::vector<i64>>& add,
                 const std::vector<std::vector<i64>>& mul) {
  const std::size_t n = add.size();
  if (n == 0) fail(errc::structural, "empty ring table");
  auto check_shape = [n](const std::vector<std::vector<i64>>& t, const char* what) {
    if (t.size() != n) fail(errc::structural, std::string(what) + " table is not square");
    for (const auto& row : t) {
      if (row.size() != n) fail(errc::structural, std::string(what) + " table is not square");
      for (i64 v : row)
        if (v < 0 || v >= static_cast<i64>(n))
          fail(errc::structural, std::string(what) + " table entry out of range");
    }
  };
  check_shape(add, "addition");
  check_shape(mul, "multiplication");

  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::table;
  impl->n = static_cast<i64>(n);
  impl->finite = true;
  impl->add_t = add;
  impl->mul_t = mul;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) fail(errc::structural, "addition table not commutative");
      if (mul[a][b] != mul[b][a]) fail(errc::structural, "multiplication table not commutative");
    }

  i64 zero = -1, one = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool is_zero = true, is_one = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (add[e][x] != static_cast<i64>(x)) is_zero = false;
      if (mul[e][x] != static_cast<i64>(x)) is_one = false;
    }
    if (is_zero) zero = static_cast<i64>(e);
    if (is_one) one = static_cast<i64>(e);
  }
  if (zero < 0) fail(errc::structural, "ring table has no additive identity");
  if (one < 0) fail(errc::structural, "ring table has no multiplicative identity");
  impl->zero_idx = zero;
  impl->one_idx = one;

  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n; ++y)
      if (add[x][y] == zero) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) fail(errc::structural, "ring table lacks an additive inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]])
          fail(errc::structural, "addition table not associative");
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          fail(errc::structural, "multiplication table not associative");
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          fail(errc::structural, "ring table not distributive");
      }

  bool domain = n >= 2 && zero != one;
  for (std::size_t a = 0; a < n && domain; ++a) {
    if (a == static_cast<std::size_t>(zero)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == static_cast<std::size_t>(zero)) continue;
      if (mul[a][b] == zero) {
        domain = false;
        break;
      }
    }
  }
  impl->integral_domain = domain;

  bool field = n >= 2 && zero != one;
  for (std::size_t a = 0; a < n && field; ++a) {
    if (a == static_cast<std::size_t>(zero)) continue;
    bool invertible = false;
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a][b] == one) {
        invertible = true;
        break;
      }
    if (!invertible) field = false;
  }
  impl->field = field;
  impl->enumerate_finite();
  return Ring(std::move(impl));
}

RingKind Ring::kind() const { return impl_->kind; }
bool Ring::is_finite() const { return impl_->finite; }

std::size_t Ring::size() const {
  if (!impl_->finite) fail(errc::unsupported, "infinite ring has no size");
  return impl_->elems.size();
}

const std::vector<Element>& Ring::elements() const {
  if (!impl_->finite) fail(errc::unsupported, "cannot enumerate an infinite ring");
  return impl_->elems;
}

std::size_t Ring::index_of(const Element& e) const {
  if (!impl_->finite) fail(errc::unsupported, "cannot index into an infinite ring");
  auto it = impl_->index.find(e);
  if (it == impl_->index.end()) fail(errc::structural, "element not in ring enumeration");
  return it->second;
}

Element Ring::zero() const {
  switch (impl_->kind) {
    case RingKind::modular:
    case RingKind::integers:
      return Element(i64{0});
    case RingKind::table:
      return Element(impl_->zero_idx);
    case RingKind::polynomial:
      return Element(Polynomial(impl_->vars.size()));
    case RingKind::product: {
      Tuple t;
      t.reserve(impl_->factors.size());
      for (const auto& f : impl_->factors) t.push_back(f.zero());
      return Element(std::move(t));
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

Element Ring::one() const { return from_integer(1); }

Element Ring::from_integer(i64 k) const {
  switch (impl_->kind) {
    case RingKind::integers:
      return Element(k);
    case RingKind::modular:
      return Element(floor_mod(k, impl_->n));
    case RingKind::polynomial:
      return Element(Polynomial::constant(impl_->vars.size(), Rational(k)));
    case RingKind::product: {
      Tuple t;
      t.reserve(impl_->factors.size());
      for (const auto& f : impl_->factors) t.push_back(f.from_integer(k));
      return Element(std::move(t));
    }
    case RingKind::table: {
      // k·1 by repeated addition over the additive order of 1.
      i64 ord = 1;
      i64 acc = impl_->one_idx;
      while (acc != impl_->zero_idx) {
        acc = impl_->add_t[acc][impl_->one_idx];
        ++ord;
      }
      i64 r = floor_mod(k, ord);
      i64 out = impl_->zero_idx;
      for (i64 i = 0; i < r; ++i) out = impl_->add_t[out][impl_->one_idx];
      return Element(out);
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

void Ring::require_element(const Element& e) const {
  switch (impl_->kind) {
    case RingKind::integers:
      if (!e.is_scalar()) fail(errc::structural, "integer ring element must be a scalar");
      return;
    case RingKind::modular:
    case RingKind::table:
      if (!e.is_scalar() || e.scalar() < 0 || e.scalar() >= impl_->n)
        fail(errc::structural, "element is not a canonical residue/index of " + describe());
      return;
    case RingKind::polynomial:
      if (!e.is_polynomial() || e.polynomial().arity() != impl_->vars.size())
        fail(errc::structural, "element is not a polynomial over " + describe());
      return;
    case RingKind::product: {
      if (!e.is_tuple() || e.tuple().size() != impl_->factors.size())
        fail(errc::structural, "element is not a tuple over " + describe());
      for (std::size_t i = 0; i < impl_->factors.size(); ++i)
        impl_->factors[i].require_element(e.tuple()[i]);
      return;
    }
  }
}

Element Ring::add(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case RingKind::integers:
      return Element(checked_add(a.scalar(), b.scalar()));
    case RingKind::modular:
      return Element(floor_mod(a.scalar() + b.scalar(), impl_->n));
    case RingKind::table:
      return Element(impl_->add_t[a.scalar()][b.scalar()]);
    case RingKind::polynomial:
      return Element(a.polynomial() + b.polynomial());
    case RingKind::product: {
      const Tuple& ta = a.tuple();
      const Tuple& tb = b.tuple();
      if (ta.size() != tb.size()) fail(errc::structural, "mixed-ring operands");
      Tuple out;
      out.reserve(ta.size());
      for (std::size_t i = 0; i < ta.size(); ++i)
        out.push_back(impl_->factors[i].add(ta[i], tb[i]));
      return Element(std::move(out));
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

Element Ring::mul(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case RingKind::integers:
      return Element(checked_mul(a.scalar(), b.scalar()));
    case RingKind::modular: {
      // Residues are < n; the product fits in 64 bits for all desk-scale n.
      return Element(floor_mod(checked_mul(a.scalar(), b.scalar()), impl_->n));
    }
    case RingKind::table:
      return Element(impl_->mul_t[a.scalar()][b.scalar()]);
    case RingKind::polynomial:
      return Element(a.polynomial() * b.polynomial());
    case RingKind::product: {
      const Tuple& ta = a.tuple();
      const Tuple& tb = b.tuple();
      if (ta.size() != tb.size()) fail(errc::structural, "mixed-ring operands");
      Tuple out;
      out.reserve(ta.size());
      for (std::size_t i = 0; i < ta.size(); ++i)
        out.push_back(impl_->factors[i].mul(ta[i], tb[i]));
      return Element(std::move(out));
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

Element Ring::neg(const Element& a) const {
  switch (impl_->kind) {
    case RingKind::integers:
      return Element(checked_neg(a.scalar()));
    case RingKind::modular:
      return Element(floor_mod(-a.scalar(), impl_->n));
    case RingKind::table: {
      for (i64 y = 0; y < impl_->n; ++y)
        if (impl_->add_t[a.scalar()][y] == impl_->zero_idx) return Element(y);
      fail(errc::structural, "missing additive inverse");
    }
    case RingKind::polynomial:
      return Element(-a.polynomial());
    case RingKind::product: {
      Tuple out;
      out.reserve(a.tuple().size());
      for (std::size_t i = 0; i < a.tuple().size(); ++i)
        out.push_back(impl_->factors[i].neg(a.tuple()[i]));
      return Element(std::move(out));
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

bool Ring::eq(const Element& a, const Element& b) const { return a == b; }

bool Ring::is_zero(const Element& a) const { return a == zero(); }
bool Ring::is_one(const Element& a) const { return a == one(); }

bool Ring::is_integral_domain() const { return impl_->integral_domain; }

bool Ring::is_field() const {
  if (!impl_->finite) fail(errc::unsupported, "field test implemented for finite backends only");
  return impl_->field;
}

std::string Ring::to_string(const Element& e) const {
  switch (impl_->kind) {
    case RingKind::integers:
    case RingKind::modular:
    case RingKind::table:
      return std::to_string(e.scalar());
    case RingKind::polynomial:
      return e.polynomial().str(impl_->vars);
    case RingKind::product: {
      std::ostringstream out;
      out << "(";
      for (std::size_t i = 0; i < e.tuple().size(); ++i) {
        if (i) out << ", ";
        out << impl_->factors[i].to_string(e.tuple()[i]);
      }
      out << ")";
      return out.str();
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

std::string Ring::describe() const {
  switch (impl_->kind) {
    case RingKind::integers:
      return "Z";
    case RingKind::modular:
      return "Z/" + std::to_string(impl_->n);
    case RingKind::table:
      return "table(" + std::to_string(impl_->n) + ")";
    case RingKind::polynomial: {
      std::string s = "Q[";
      for (std::size_t i = 0; i < impl_->vars.size(); ++i) {
        if (i) s += ",";
        s += impl_->vars[i];
      }
      return s + "]";
    }
    case RingKind::product: {
      std::string s;
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i) s += " x ";
        s += impl_->factors[i].describe();
      }
      return s;
    }
  }
  fail(errc::structural, "unreachable ring kind");
}

i64 Ring::modulus() const {
  if (impl_->kind != RingKind::modular) fail(errc::structural, "not a modular ring");
  return impl_->n;
}

const std::vector<std::string>& Ring::variables() const {
  if (impl_->kind != RingKind::polynomial) fail(errc::structural, "not a polynomial ring");
  return impl_->vars;
}

const std::vector<Ring>& Ring::factors() const {
  if (impl_->kind != RingKind::product) fail(errc::structural, "not a product ring");
  return impl_->factors;
}

const std::vector<std::vector<i64>>& Ring::add_table() const {
  if (impl_->kind != RingKind::table) fail(errc::structural, "not a table ring");
  return impl_->add_t;
}

const std::vector<std::vector<i64>>& Ring::mul_table() const {
  if (impl_->kind != RingKind::table) fail(errc::structural, "not a table ring");
  return impl_->mul_t;
}

bool Ring::same_ring(const Ring& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->kind != other.impl_->kind) return false;
  switch (impl_->kind) {
    case RingKind::integers:
      return true;
    case RingKind::modular:
      return impl_->n == other.impl_->n;
    case RingKind::polynomial:
      return impl_->vars == other.impl_->vars;
    case RingKind::table:
      return impl_->add_t == other.impl_->add_t && impl_->mul_t == other.impl_->mul_t;
    case RingKind::product: {
      if (impl_->factors.size() != other.impl_->factors.size()) return false;
      for (std::size_t i = 0; i < impl_->factors.size(); ++i)
        if (!impl_->factors[i].same_ring(other.impl_->factors[i])) return false;
      return true;
    }
  }
  return false;
}

} // namespace qring
