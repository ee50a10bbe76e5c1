#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qring/relation.hpp"
#include "qring/report.hpp"
#include "qring/window.hpp"

namespace qring {

/// Element of the fraction field of an integral domain: num/den, den != 0.
struct Fraction {
  Element num;
  Element den;
};

/// The quasi-order extension to the fraction field:
///   a/b <= x/y  iff  a*b*y^2 <= x*y*b^2  in the base relation.
/// The comparison is a closed form in the base ring, so fractions never need
/// to stay inside any window. Requires an integral domain and support {0}.
class FractionExtension {
public:
  const Ring& domain() const { return rel_.ring(); }
  const QuasiOrder& relation() const { return rel_; }

  bool leq(const Fraction& f, const Fraction& g) const;
  bool equiv(const Fraction& f, const Fraction& g) const { return leq(f, g) && leq(g, f); }
  /// Field equality: ad = cb in the domain.
  bool equal(const Fraction& f, const Fraction& g) const;

  Fraction make(Element num, Element den) const; // rejects zero denominators
  Fraction zero() const;
  Fraction one() const;
  Fraction add(const Fraction& f, const Fraction& g) const;
  Fraction mul(const Fraction& f, const Fraction& g) const;
  Fraction neg(const Fraction& f) const;

  std::string to_string(const Fraction& f) const;

private:
  friend FractionExtension fraction_extension(const QuasiOrder&);
  explicit FractionExtension(QuasiOrder rel) : rel_(std::move(rel)) {}
  QuasiOrder rel_;
};

/// errors: non-domain backend -> precondition; relations whose support is not
/// known or verified to be {0} -> precondition (quotient first).
FractionExtension fraction_extension(const QuasiOrder& rel);

/// All fractions num/den with num from the window and den from the nonzero
/// window elements, in scan order (outer numerator, inner denominator), plus
/// one representative per field-equality class in first-appearance order.
struct FractionWindow {
  std::vector<Fraction> all;
  std::vector<Fraction> representatives;
  std::vector<std::size_t> class_of; // all[i] belongs to representatives[class_of[i]]
};

FractionWindow fraction_window(const FractionExtension& ext, const Window& window);

/// Report items: well_defined (equal fractions compare identically against
/// every third fraction), reflexive, transitive, total, Q1 (f ~ 0 implies
/// num = 0), Q2, Q3, embedding (a/1 against x/1 matches the base relation).
/// The axiom scans run over the equality-class representatives; that is
/// sound because well_defined is itself among the checks.
Report check_fraction_extension(const FractionExtension& ext, const Window& window);

} // namespace qring
