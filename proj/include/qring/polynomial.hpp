#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qring/rational.hpp"

namespace qring {

/// Exponent vector of fixed arity. Ordered by graded lex: first by total
/// degree, then lexicographically on exponents.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial unit(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t exp(std::size_t var) const { return exps_[var]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_unit() const { return degree() == 0; }

  Monomial times(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps_ < b.exps_;
  }

private:
  std::vector<std::uint32_t> exps_;
};

/// Polynomial with rational coefficients. Terms are kept sorted by
/// descending monomial order with no zero coefficients, so representation
/// equality is structural equality.
class Polynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t arity) : arity_(arity) {}
  Polynomial(std::size_t arity, std::vector<Term> terms);

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t var);
  static Polynomial term(std::size_t arity, Monomial m, const Rational& c);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Total order used only for deterministic enumeration and printing,
  /// not for any ring-theoretic comparison.
  static int structural_compare(const Polynomial& a, const Polynomial& b);

  std::string str(const std::vector<std::string>& vars) const;

  std::size_t hash() const;

private:
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

} // namespace qring
