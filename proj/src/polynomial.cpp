#include "qring/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

Polynomial::Polynomial(std::size_t arity, std::vector<Term> terms) : arity_(arity) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.first < a.first; });
  for (auto& t : terms) {
    if (t.first.arity() != arity_) fail(errc::structural, "monomial arity mismatch");
    if (t.second.is_zero()) continue;
    if (!terms_.empty() && terms_.back().first == t.first) {
      Rational merged = terms_.back().second + t.second;
      if (merged.is_zero()) {
        terms_.pop_back();
      } else {
        terms_.back().second = merged;
      }
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  if (!c.is_zero()) p.terms_.push_back({Monomial::unit(arity), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t var) {
  std::vector<std::uint32_t> e(arity, 0);
  e.at(var) = 1;
  Polynomial p(arity);
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  return p;
}

Polynomial Polynomial::term(std::size_t arity, Monomial m, const Rational& c) {
  if (m.arity() != arity) fail(errc::structural, "monomial arity mismatch");
  Polynomial p(arity);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) fail(errc::precondition, "zero polynomial has no leading monomial");
  return terms_.front().first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) fail(errc::precondition, "zero polynomial has no leading coefficient");
  return terms_.front().second;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(arity_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.first, -t.second});
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_) fail(errc::structural, "polynomial arity mismatch");
  Polynomial r(a.arity_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.first == tb.first) {
      Rational c = ta.second + tb.second;
      if (!c.is_zero()) r.terms_.push_back({ta.first, c});
      ++i, ++j;
    } else if (tb.first < ta.first) {
      r.terms_.push_back(ta);
      ++i;
    } else {
      r.terms_.push_back(tb);
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_) fail(errc::structural, "polynomial arity mismatch");
  std::vector<Polynomial::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      prods.push_back({ta.first.times(tb.first), ta.second * tb.second});
  return Polynomial(a.arity_, std::move(prods));
}

int Polynomial::structural_compare(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (ta.first != tb.first) return ta.first < tb.first ? -1 : 1;
    if (ta.second != tb.second) return ta.second < tb.second ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      if (c.is_negative()) out << "-";
    } else {
      out << (c.is_negative() ? " - " : " + ");
    }
    if (c.is_negative()) c = -c;
    first = false;

    std::string body;
    for (std::size_t v = 0; v < mono.arity(); ++v) {
      if (mono.exp(v) == 0) continue;
      if (!body.empty()) body += "*";
      body += v < vars.size() ? vars[v] : "x" + std::to_string(v);
      if (mono.exp(v) > 1) body += "^" + std::to_string(mono.exp(v));
    }
    if (body.empty()) {
      out << c.str();
    } else {
      if (c != Rational(1)) out << c.str() << "*";
      out << body;
    }
  }
  return out.str();
}

std::size_t Polynomial::hash() const {
  // FNV-1a over the term stream; stable across runs by construction.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(arity_);
  for (const auto& [mono, coeff] : terms_) {
    for (auto e : mono.exps()) mix(e + 1);
    mix(static_cast<std::uint64_t>(coeff.num()));
    mix(static_cast<std::uint64_t>(coeff.den()));
  }
  return static_cast<std::size_t>(h);
}

} // namespace qring
