#pragma once

#include <string>
#include <vector>

#include "qring/relation.hpp"
#include "qring/report.hpp"
#include "qring/ring.hpp"
#include "qring/window.hpp"

namespace qring {

/// Comparator on a two-variable polynomial ring, written for variables X, Y:
/// nonzero f with leading data r*X^i*Y^j is ranked below g with s*X^m*Y^n iff
/// n > 0, or j = n = 0 and i <= m. Every polynomial containing any Y term sits
/// in one maximal class; pure-X polynomials are staged by their X degree; 0 is
/// the unique bottom. The relation is reflexive, transitive, total, satisfies
/// QR1..QR4 and the unrestricted additivity O4, but violates QR5: multiplying
/// two distinct X stages by Y collapses them into the top class.
QuasiOrder dominant_monomial_relation(const Ring& ring);

/// Verdict sheet for the dominant-monomial relation on a window:
/// reflexive/transitive/total, O1..O3 and unrestricted additivity QR4 all
/// pass, the separation axiom QR2 passes, the cancellation axiom QR5 fails,
/// the relation is not an order (0 < -1), and the canonical witness triple
/// (X, X^2, Y) exhibits the QR5 failure.
Report counterexample_report(const Window& window);

/// Named ready-made structures for the CLI and the test suite.
struct BuiltinStructure {
  std::string name;
  Ring ring;
  QuasiOrder relation;
  Window window;
};

/// Fixed names: z_standard, z_padic_2, z_padic_3, z_padic_5, poly_at_infinity,
/// poly_x_adic, zmod_trivial_6_2, zmod_trivial_6_3, zmod_trivial_12_2,
/// zmod_trivial_12_3, sec3. Any zmod_trivial_<n>_<p> with (p) prime in Z/n is
/// also accepted. Unknown names raise lookup errors listing the fixed names.
BuiltinStructure builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

} // namespace qring
