#include "qring/enumerate.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qring/axioms.hpp"
#include "qring/classify.hpp"
#include "qring/errors.hpp"
#include "qring/scan.hpp"
#include "qring/window.hpp"

namespace qring {

std::vector<std::vector<std::uint8_t>> WeakOrderCode::blocks() const {
  std::vector<std::vector<std::uint8_t>> out(block_count);
  for (std::size_t i = 0; i < level.size(); ++i)
    out[level[i]].push_back(static_cast<std::uint8_t>(i));
  return out;
}

namespace {

void grow_weak_orders(std::size_t n, std::vector<std::vector<std::uint8_t>>& blocks,
                      std::size_t next, std::vector<WeakOrderCode>& out) {
  if (next == n) {
    WeakOrderCode code;
    code.level.resize(n);
    code.block_count = static_cast<std::uint8_t>(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::uint8_t e : blocks[b]) code.level[e] = static_cast<std::uint8_t>(b);
    out.push_back(std::move(code));
    return;
  }
  const auto e = static_cast<std::uint8_t>(next);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(e);
    grow_weak_orders(n, blocks, next + 1, out);
    blocks[b].pop_back();
  }
  for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pos), {e});
    grow_weak_orders(n, blocks, next + 1, out);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pos));
  }
}

} // namespace

std::vector<WeakOrderCode> enumerate_weak_orders(std::size_t n) {
  if (n < 1 || n > 8)
    fail(errc::limit, "weak-order enumeration supports 1..8 elements, got " +
                          std::to_string(n));
  std::vector<WeakOrderCode> out;
  std::vector<std::vector<std::uint8_t>> blocks;
  grow_weak_orders(n, blocks, 0, out);
  return out;
}

namespace {

// Index tables make the axiom filter pure integer work per candidate code.
struct FilterTables {
  std::size_t n = 0;
  std::size_t i0 = 0, i1 = 0;
  std::vector<std::size_t> add, mul; // n*n, flattened

  explicit FilterTables(const Ring& R) {
    n = R.size();
    i0 = R.index_of(R.zero());
    i1 = R.index_of(R.one());
    add.resize(n * n);
    mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        add[i * n + j] = R.index_of(R.add(R.elements()[i], R.elements()[j]));
        mul[i * n + j] = R.index_of(R.mul(R.elements()[i], R.elements()[j]));
      }
  }
};

// QR1 then QR2 pairs then QR3/QR4/QR5 triples; reflexivity, transitivity and
// totality hold for every level map by construction.
bool passes_ring_axioms(const FilterTables& t, const std::vector<std::uint8_t>& lv) {
  const std::size_t n = t.n;
  const std::uint8_t l0 = lv[t.i0];
  if (lv[t.i1] <= l0) return false; // QR1
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lv[t.mul[i * n + j]] <= l0 && lv[i] > l0 && lv[j] > l0) return false; // QR2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool ij = lv[i] <= lv[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (ij && l0 <= lv[k] && lv[t.mul[i * n + k]] > lv[t.mul[j * n + k]])
          return false; // QR3
        if (ij && lv[k] != lv[j] && lv[t.add[i * n + k]] > lv[t.add[j * n + k]])
          return false; // QR4
        if (l0 < lv[k] && lv[t.mul[i * n + k]] <= lv[t.mul[j * n + k]] && lv[i] > lv[j])
          return false; // QR5
      }
    }
  return true;
}

QuasiOrder code_to_relation(const Ring& R, const std::vector<std::uint8_t>& lv) {
  const std::size_t n = R.size();
  std::vector<std::vector<std::uint8_t>> rows(n, std::vector<std::uint8_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = lv[i] <= lv[j] ? 1 : 0;
  return QuasiOrder::matrix(R, rows);
}

} // namespace

EnumerationResult enumerate_quasiorders(const Ring& ring, std::size_t exhaustive_cap) {
  if (!ring.is_finite())
    fail(errc::precondition, "quasi-order enumeration needs a finite ring");

  EnumerationResult result;
  if (ring.size() <= exhaustive_cap) {
    result.exhaustive = true;
    FilterTables tables(ring);
    std::vector<WeakOrderCode> codes = enumerate_weak_orders(ring.size());

    // Chunk-local pass lists concatenated in chunk order keep the output
    // identical for any worker count.
    std::vector<std::vector<std::size_t>> passed(worker_count());
    run_chunked(codes.size(), [&](std::size_t c, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i)
        if (passes_ring_axioms(tables, codes[i].level)) passed[c].push_back(i);
    });
    for (const auto& chunk : passed)
      for (std::size_t i : chunk) result.relations.push_back(code_to_relation(ring, codes[i].level));
    return result;
  }

  result.exhaustive = false;
  for (const Ideal& prime : enumerate_prime_ideals(ring)) {
    QuasiOrder rel = QuasiOrder::trivial_at_prime(prime);
    Report check = check_axioms(rel);
    if (!check.ok())
      fail(errc::inconsistency,
           "trivial quasi-order at a verified prime ideal failed the axiom check");
    result.relations.push_back(std::move(rel));
  }
  return result;
}

std::vector<Ideal> enumerate_prime_ideals(const Ring& ring) {
  if (!ring.is_finite()) fail(errc::precondition, "prime-ideal enumeration needs a finite ring");

  // Join closure of the principal ideals: every ideal is the join of the
  // principal ideals it contains, so the fixpoint reaches all of them.
  std::vector<Ideal> ideals;
  auto push_unique = [&](Ideal candidate) {
    for (const Ideal& known : ideals)
      if (known == candidate) return false;
    ideals.push_back(std::move(candidate));
    return true;
  };
  for (const auto& x : ring.elements()) push_unique(Ideal::span(ring, {x}));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = ideals.size();
    for (std::size_t i = 0; i < count && !grew; ++i)
      for (std::size_t j = i + 1; j < count && !grew; ++j) {
        std::vector<Element> gens = ideals[i].elements();
        const auto& more = ideals[j].elements();
        gens.insert(gens.end(), more.begin(), more.end());
        grew = push_unique(Ideal::span(ring, gens));
      }
  }

  std::vector<Ideal> primes;
  for (const Ideal& ideal : ideals)
    if (is_prime_ideal(ring, ideal).ok()) primes.push_back(ideal);

  std::sort(primes.begin(), primes.end(), [&](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& ea = a.elements();
    const auto& eb = b.elements();
    for (std::size_t i = 0; i < ea.size(); ++i) {
      std::size_t ia = ring.index_of(ea[i]);
      std::size_t ib = ring.index_of(eb[i]);
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  return primes;
}

Report cross_check_dichotomy(const Ring& ring) {
  EnumerationResult enumerated = enumerate_quasiorders(ring);
  if (!enumerated.exhaustive)
    fail(errc::precondition, "dichotomy cross-check needs the exhaustive enumeration");
  std::vector<Ideal> primes = enumerate_prime_ideals(ring);
  Window all = Window::all(ring);

  Report rep;
  rep.subject = "dichotomy cross-check on " + ring.describe();
  rep.window = all.describe();
  rep.exhaustive = true;

  bool all_valued = true, none_ordered = true, supports_prime = true, roundtrips = true;
  std::string note;
  std::vector<std::size_t> hit(primes.size(), 0);
  bool bijection = enumerated.relations.size() == primes.size();
  if (!bijection)
    note = std::to_string(enumerated.relations.size()) + " quasi-orders vs " +
           std::to_string(primes.size()) + " prime ideals";

  for (std::size_t r = 0; r < enumerated.relations.size(); ++r) {
    const QuasiOrder& rel = enumerated.relations[r];
    Classification cls = classify(rel, all);
    if (cls.branch == Branch::ordered) {
      none_ordered = false;
      all_valued = false;
      continue;
    }
    if (cls.group_kind != "trivial") all_valued = false;

    Ideal support = Ideal::from_elements(ring, cls.support.members);
    if (!is_prime_ideal(ring, support).ok()) supports_prime = false;
    bool matched = false;
    for (std::size_t p = 0; p < primes.size(); ++p)
      if (primes[p] == support) {
        ++hit[p];
        matched = true;
        break;
      }
    if (!matched) bijection = false;

    if (!roundtrip_check(rel, cls, all).ok()) roundtrips = false;
  }
  for (std::size_t p = 0; p < primes.size(); ++p)
    if (hit[p] != 1) bijection = false;

  auto verdict = [&rep](const char* name, bool ok, std::string failure_note = {}) {
    rep.add(name, ok ? CheckStatus::pass : CheckStatus::fail, {},
            ok ? std::string{} : std::move(failure_note));
  };
  verdict("all_valued", all_valued, "a quasi-order classified with a nontrivial value group");
  verdict("none_ordered", none_ordered, "a quasi-order classified as ordered");
  verdict("supports_prime", supports_prime, "a support failed the primality scan");
  verdict("support_bijection", bijection,
          note.empty() ? "supports do not biject onto the prime ideals" : note);
  verdict("roundtrip", roundtrips, "a re-induced relation differs from its source");
  return rep;
}

} // namespace qring
