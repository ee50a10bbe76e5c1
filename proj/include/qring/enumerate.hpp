#pragma once

#include <cstdint>
#include <vector>

#include "qring/ideal.hpp"
#include "qring/relation.hpp"
#include "qring/report.hpp"

namespace qring {

/// Total preorder on n labeled elements as an ordered set partition:
/// level[i] is the block of element i, blocks numbered from least to
/// greatest. Reflexivity, transitivity and totality hold by construction.
struct WeakOrderCode {
  std::vector<std::uint8_t> level;
  std::uint8_t block_count = 0;

  /// Blocks from least to greatest, each listing element indices ascending.
  std::vector<std::vector<std::uint8_t>> blocks() const;
};

/// Every total preorder on n elements exactly once, deterministically
/// ordered; the count is the ordered Bell number. n must be in [1, 8].
std::vector<WeakOrderCode> enumerate_weak_orders(std::size_t n);

struct EnumerationResult {
  bool exhaustive = false; // filtered weak orders vs theory-guided constructions
  std::vector<QuasiOrder> relations;
};

/// Rings of at most `exhaustive_cap` elements: every weak order filtered
/// through QR1-QR5 exhaustively. Larger finite rings: the trivial quasi-order
/// at each prime ideal, verified exhaustively, flagged non-exhaustive. The
/// cap is a tuning knob; raising it past 8 hits the weak-order guard.
EnumerationResult enumerate_quasiorders(const Ring& ring, std::size_t exhaustive_cap = 8);

/// All prime ideals of a finite ring: join closure of the principal ideals,
/// filtered through the primality scan, ordered by size then elementwise.
std::vector<Ideal> enumerate_prime_ideals(const Ring& ring);

/// Cross-validation over the exhaustive enumeration. Items: all_valued
/// (every quasi-order classifies as valued with trivial value group),
/// none_ordered, supports_prime (every support is a prime ideal),
/// support_bijection (supports biject onto the prime ideals), roundtrip
/// (every quasi-order survives roundtrip_check).
Report cross_check_dichotomy(const Ring& ring);

} // namespace qring
