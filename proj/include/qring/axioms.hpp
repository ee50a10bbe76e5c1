#pragma once

#include <optional>

#include "qring/order.hpp"
#include "qring/relation.hpp"
#include "qring/report.hpp"
#include "qring/valuation.hpp"
#include "qring/window.hpp"

namespace qring {

/// All checks scan exhaustively over a finite ring when no window is given
/// (status pass) and over the supplied window otherwise (pass-on-window).
/// Infinite rings require a window. Failures carry the scan-order-minimal
/// witness, identical for every worker count.

/// Preorder basics plus QR1..QR5. QR2 is restricted to pairs whose product
/// lies in the scan universe; all other product and sum probes evaluate
/// through the relation directly.
Report check_axioms(const QuasiOrder& rel, const std::optional<Window>& window = std::nullopt);

/// E0 = {x : x ~ 0} is a proper ideal and prime. Membership is a predicate,
/// so closure probes are not restricted to the window.
Report check_support_prime(const QuasiOrder& rel,
                           const std::optional<Window>& window = std::nullopt);

/// Consequence lemmas; diagnostic on relations that fail check_axioms.
///   sum_absorbs_null:     x !~ 0 and y ~ 0  =>  x+y ~ x
///   cancellation:         z !~ 0 and xz ~ yz  =>  x ~ y
///   squares_nonnegative:  0 <= x*x
///   qr5_implies_qr2:      QR2 cannot fail while QR5 passes
///   Q1..Q3:               field backends only, else skipped
Report lemma_suite(const QuasiOrder& rel, const std::optional<Window>& window = std::nullopt);

/// Ordered-ring axioms O1..O4 for a total-order comparator, plus the O2'
/// form, agreement of the two, and support primality.
Report check_order_axioms(const QuasiOrder& rel,
                          const std::optional<Window>& window = std::nullopt);

/// Cone axioms: P0 totality, P1 prime support, P2/P3 closure under products
/// and sums when the results lie in the scan universe.
Report check_cone(const PositiveCone& cone, const std::optional<Window>& window = std::nullopt);

/// V1..V4, the strengthened min equality for v(x) != v(y), and support
/// primality; pair scans only.
Report check_valuation_axioms(const Valuation& v,
                              const std::optional<Window>& window = std::nullopt);

} // namespace qring
