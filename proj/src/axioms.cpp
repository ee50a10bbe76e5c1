#include "qring/axioms.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <unordered_map>
#include <unordered_set>

#include "qring/errors.hpp"
#include "qring/scan.hpp"

namespace qring {
namespace {

// Pair tables hold n*n 32-bit entries; beyond the cap scans fall back to
// direct evaluation.
constexpr std::size_t kPairTableCap = 4096;
// Raw scans memoize sum/product elements below this size.
constexpr std::size_t kRawMemoCap = 256;
// Full rank-vs-comparator agreement check below this size, sampled above.
constexpr std::size_t kAgreementCap = 1024;

struct Universe {
  std::vector<Element> elems;
  bool exhaustive = false;
  std::string label;
  std::size_t i0 = 0, i1 = 0;  // indices of 0 and 1
};

std::size_t universe_index(const std::vector<Element>& elems, const Element& e,
                           const char* what) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == e) return i;
  fail(errc::invalid_window, std::string("scan universe lacks ") + what);
}

Universe resolve_universe(const Ring& ring, const std::optional<Window>& window) {
  Universe u;
  if (window) {
    if (!window->ring().same_ring(ring))
      fail(errc::structural, "window was built over a different ring");
    u.elems = window->elements();
    u.exhaustive = window->exhaustive();
    u.label = window->describe();
  } else {
    if (!ring.is_finite())
      fail(errc::precondition, "checks over " + ring.describe() + " require a window");
    Window all = Window::all(ring);
    u.elems = all.elements();
    u.exhaustive = true;
    u.label = all.describe();
  }
  u.i0 = universe_index(u.elems, ring.zero(), "0");
  u.i1 = universe_index(u.elems, ring.one(), "1");
  return u;
}

CheckStatus pass_status(bool exhaustive) {
  return exhaustive ? CheckStatus::pass : CheckStatus::pass_on_window;
}

template <std::size_t A>
void add_item(Report& rep, const Universe& u, std::string name,
              const std::optional<std::array<std::size_t, A>>& w, std::string note = {}) {
  if (w) {
    std::vector<Element> ws;
    for (std::size_t idx : *w) ws.push_back(u.elems[idx]);
    rep.add(std::move(name), CheckStatus::fail, std::move(ws), std::move(note));
  } else {
    rep.add(std::move(name), pass_status(u.exhaustive));
  }
}

// ---------------------------------------------------------------------------
// Probe contexts. Every context exposes the same comparator probes over
// universe indices; w = window element, m = pairwise product, a = pairwise
// sum. prod_in reports whether the product of two universe elements lies in
// the scan universe (QR2's quantification domain).

// Finite ring scanned exhaustively: everything is a table lookup.
struct IndexedCtx {
  std::size_t n = 0;
  std::vector<std::uint8_t> leqt;
  std::vector<std::int32_t> addi, muli;

  bool tab(std::size_t x, std::size_t y) const { return leqt[x * n + y] != 0; }
  std::size_t mi(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(muli[a * n + b]);
  }
  std::size_t ai(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(addi[a * n + b]);
  }

  bool leq_ww(std::size_t i, std::size_t j) const { return tab(i, j); }
  bool leq_mm(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return tab(mi(a, b), mi(c, d));
  }
  bool leq_aa(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return tab(ai(a, b), ai(c, d));
  }
  bool leq_wm(std::size_t i, std::size_t a, std::size_t b) const { return tab(i, mi(a, b)); }
  bool leq_mw(std::size_t a, std::size_t b, std::size_t j) const { return tab(mi(a, b), j); }
  bool leq_wa(std::size_t i, std::size_t a, std::size_t b) const { return tab(i, ai(a, b)); }
  bool leq_aw(std::size_t a, std::size_t b, std::size_t j) const { return tab(ai(a, b), j); }
  bool prod_in(std::size_t, std::size_t) const { return true; }
};

IndexedCtx build_indexed(const QuasiOrder& rel, const Universe& u) {
  const Ring& ring = rel.ring();
  IndexedCtx c;
  c.n = u.elems.size();
  std::size_t n = c.n;
  c.leqt.resize(n * n);
  c.addi.resize(n * n);
  c.muli.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c.leqt[i * n + j] = rel.leq(u.elems[i], u.elems[j]) ? 1 : 0;
      c.addi[i * n + j] = static_cast<std::int32_t>(ring.index_of(ring.add(u.elems[i], u.elems[j])));
      c.muli[i * n + j] = static_cast<std::int32_t>(ring.index_of(ring.mul(u.elems[i], u.elems[j])));
    }
  }
  return c;
}

// Rank-keyed relation on an infinite ring: elements, sums and products are
// mapped once to ordinals of their sorted distinct ranks, after which every
// probe is an integer comparison.
struct RankedCtx {
  std::size_t n = 0;
  std::vector<std::int32_t> ord;
  std::vector<std::int32_t> addo, mulo;
  std::vector<std::uint8_t> prodw;

  bool leq_ww(std::size_t i, std::size_t j) const { return ord[i] <= ord[j]; }
  bool leq_mm(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return mulo[a * n + b] <= mulo[c * n + d];
  }
  bool leq_aa(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return addo[a * n + b] <= addo[c * n + d];
  }
  bool leq_wm(std::size_t i, std::size_t a, std::size_t b) const {
    return ord[i] <= mulo[a * n + b];
  }
  bool leq_mw(std::size_t a, std::size_t b, std::size_t j) const {
    return mulo[a * n + b] <= ord[j];
  }
  bool leq_wa(std::size_t i, std::size_t a, std::size_t b) const {
    return ord[i] <= addo[a * n + b];
  }
  bool leq_aw(std::size_t a, std::size_t b, std::size_t j) const {
    return addo[a * n + b] <= ord[j];
  }
  bool prod_in(std::size_t i, std::size_t j) const { return prodw[i * n + j] != 0; }
};

RankedCtx build_ranked(const QuasiOrder& rel, const Universe& u, const Window& window) {
  const Ring& ring = rel.ring();
  RankedCtx c;
  c.n = u.elems.size();
  std::size_t n = c.n;

  std::unordered_map<Rank, std::int32_t, RankHash> intern;
  auto key_of = [&intern](const Rank& r) {
    auto [it, fresh] = intern.emplace(r, static_cast<std::int32_t>(intern.size()));
    (void)fresh;
    return it->second;
  };

  c.ord.resize(n);
  c.addo.resize(n * n);
  c.mulo.resize(n * n);
  c.prodw.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) c.ord[i] = key_of(rel.rank(u.elems[i]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element sum = ring.add(u.elems[i], u.elems[j]);
      Element prod = ring.mul(u.elems[i], u.elems[j]);
      c.addo[i * n + j] = key_of(rel.rank(sum));
      c.mulo[i * n + j] = key_of(rel.rank(prod));
      c.prodw[i * n + j] = window.contains(prod) ? 1 : 0;
    }
  }

  // Interned ids -> ordinals of the sorted distinct ranks.
  std::vector<const Rank*> distinct(intern.size());
  for (const auto& [rank, id] : intern) distinct[static_cast<std::size_t>(id)] = &rank;
  std::vector<std::int32_t> order(intern.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return Rank::compare(*distinct[static_cast<std::size_t>(a)],
                         *distinct[static_cast<std::size_t>(b)]) < 0;
  });
  std::vector<std::int32_t> ordinal(intern.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    ordinal[static_cast<std::size_t>(order[pos])] = static_cast<std::int32_t>(pos);
  for (auto& v : c.ord) v = ordinal[static_cast<std::size_t>(v)];
  for (auto& v : c.addo) v = ordinal[static_cast<std::size_t>(v)];
  for (auto& v : c.mulo) v = ordinal[static_cast<std::size_t>(v)];

  // The rank key must reproduce the comparator; disagreement means a broken
  // backend, which would silently poison every scan.
  std::size_t step = n <= kAgreementCap ? 1 : (n + kAgreementCap - 1) / kAgreementCap;
  for (std::size_t i = 0; i < n; i += step) {
    for (std::size_t j = 0; j < n; j += step) {
      bool direct = rel.leq(u.elems[i], u.elems[j]);
      if (direct != (c.ord[i] <= c.ord[j]))
        fail(errc::inconsistency,
             "rank key disagrees with the comparator at (" + ring.to_string(u.elems[i]) +
                 ", " + ring.to_string(u.elems[j]) + ")");
    }
  }
  return c;
}

// Fallback: direct evaluation through the relation and ring operations.
struct RawCtx {
  const QuasiOrder* rel = nullptr;
  const Ring* ring = nullptr;
  const Window* window = nullptr;
  const std::vector<Element>* elems = nullptr;
  std::size_t n = 0;
  std::vector<std::uint8_t> leqt;
  bool memo = false;
  std::vector<Element> sums, prods;

  Element sum_of(std::size_t a, std::size_t b) const {
    return memo ? sums[a * n + b] : ring->add((*elems)[a], (*elems)[b]);
  }
  Element prod_of(std::size_t a, std::size_t b) const {
    return memo ? prods[a * n + b] : ring->mul((*elems)[a], (*elems)[b]);
  }

  bool leq_ww(std::size_t i, std::size_t j) const { return leqt[i * n + j] != 0; }
  bool leq_mm(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return rel->leq(prod_of(a, b), prod_of(c, d));
  }
  bool leq_aa(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return rel->leq(sum_of(a, b), sum_of(c, d));
  }
  bool leq_wm(std::size_t i, std::size_t a, std::size_t b) const {
    return rel->leq((*elems)[i], prod_of(a, b));
  }
  bool leq_mw(std::size_t a, std::size_t b, std::size_t j) const {
    return rel->leq(prod_of(a, b), (*elems)[j]);
  }
  bool leq_wa(std::size_t i, std::size_t a, std::size_t b) const {
    return rel->leq((*elems)[i], sum_of(a, b));
  }
  bool leq_aw(std::size_t a, std::size_t b, std::size_t j) const {
    return rel->leq(sum_of(a, b), (*elems)[j]);
  }
  bool prod_in(std::size_t i, std::size_t j) const {
    return window == nullptr || window->contains(prod_of(i, j));
  }
};

RawCtx build_raw(const QuasiOrder& rel, const Universe& u, const Window* window) {
  RawCtx c;
  c.rel = &rel;
  c.ring = &rel.ring();
  c.window = window;
  c.elems = &u.elems;
  c.n = u.elems.size();
  std::size_t n = c.n;
  c.leqt.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.leqt[i * n + j] = rel.leq(u.elems[i], u.elems[j]) ? 1 : 0;
  if (n <= kRawMemoCap) {
    c.memo = true;
    c.sums.reserve(n * n);
    c.prods.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c.sums.push_back(c.ring->add(u.elems[i], u.elems[j]));
        c.prods.push_back(c.ring->mul(u.elems[i], u.elems[j]));
      }
    }
  }
  return c;
}

enum class ScanMode { indexed, ranked, raw };

ScanMode pick_mode(const QuasiOrder& rel, const Universe& u) {
  if (rel.ring().is_finite() && u.exhaustive) return ScanMode::indexed;
  if (rel.has_rank() && u.elems.size() <= kPairTableCap) return ScanMode::ranked;
  return ScanMode::raw;
}

template <class Fn>
void with_context(const QuasiOrder& rel, const Universe& u,
                  const std::optional<Window>& window, Fn&& fn) {
  switch (pick_mode(rel, u)) {
    case ScanMode::indexed: {
      IndexedCtx c = build_indexed(rel, u);
      fn(c);
      return;
    }
    case ScanMode::ranked: {
      RankedCtx c = build_ranked(rel, u, *window);
      fn(c);
      return;
    }
    case ScanMode::raw: {
      RawCtx c = build_raw(rel, u, window ? &*window : nullptr);
      fn(c);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Shared axiom predicates.

template <class Ctx>
std::optional<std::array<std::size_t, 3>> scan_transitive(const Ctx& ctx) {
  return scan_triples(ctx.n, [&ctx](std::size_t i, std::size_t j, std::size_t k) {
    return ctx.leq_ww(i, j) && ctx.leq_ww(j, k) && !ctx.leq_ww(i, k);
  });
}

template <class Ctx>
std::optional<std::array<std::size_t, 2>> scan_total(const Ctx& ctx) {
  return scan_pairs(ctx.n, [&ctx](std::size_t i, std::size_t j) {
    return j > i && !ctx.leq_ww(i, j) && !ctx.leq_ww(j, i);
  });
}

template <class Ctx>
std::optional<std::array<std::size_t, 2>> scan_qr2(const Ctx& ctx, std::size_t i0) {
  return scan_pairs(ctx.n, [&ctx, i0](std::size_t i, std::size_t j) {
    return ctx.prod_in(i, j) && ctx.leq_mw(i, j, i0) && !ctx.leq_ww(i, i0) &&
           !ctx.leq_ww(j, i0);
  });
}

template <class Ctx>
std::optional<std::array<std::size_t, 3>> scan_qr3(const Ctx& ctx, std::size_t i0) {
  return scan_triples(ctx.n, [&ctx, i0](std::size_t i, std::size_t j, std::size_t k) {
    return ctx.leq_ww(i, j) && ctx.leq_ww(i0, k) && !ctx.leq_mm(i, k, j, k);
  });
}

template <class Ctx>
std::optional<std::array<std::size_t, 3>> scan_qr4(const Ctx& ctx) {
  return scan_triples(ctx.n, [&ctx](std::size_t i, std::size_t j, std::size_t k) {
    return ctx.leq_ww(i, j) && !(ctx.leq_ww(k, j) && ctx.leq_ww(j, k)) &&
           !ctx.leq_aa(i, k, j, k);
  });
}

template <class Ctx>
std::optional<std::array<std::size_t, 3>> scan_qr5(const Ctx& ctx, std::size_t i0) {
  return scan_triples(ctx.n, [&ctx, i0](std::size_t i, std::size_t j, std::size_t k) {
    return ctx.leq_ww(i0, k) && !ctx.leq_ww(k, i0) && ctx.leq_mm(i, k, j, k) &&
           !ctx.leq_ww(i, j);
  });
}

template <class Ctx>
void basic_items(const Ctx& ctx, const Universe& u, Report& rep) {
  add_item(rep, u, "reflexive",
           scan_one(ctx.n, [&ctx](std::size_t i) { return !ctx.leq_ww(i, i); }));
  add_item(rep, u, "transitive", scan_transitive(ctx));
  add_item(rep, u, "total", scan_total(ctx));
}

// strict(0,1) is a single instance, decided completely even on a window.
void add_zero_one_item(const char* name, Report& rep, const Universe& u, bool holds) {
  if (holds)
    rep.add(name, CheckStatus::pass);
  else
    rep.add(name, CheckStatus::fail, {u.elems[u.i0], u.elems[u.i1]}, "strict(0,1) fails");
}

template <class Ctx>
void quasi_items(const Ctx& ctx, const Universe& u, Report& rep) {
  basic_items(ctx, u, rep);
  add_zero_one_item("QR1", rep, u, ctx.leq_ww(u.i0, u.i1) && !ctx.leq_ww(u.i1, u.i0));
  add_item(rep, u, "QR2", scan_qr2(ctx, u.i0));
  add_item(rep, u, "QR3", scan_qr3(ctx, u.i0));
  add_item(rep, u, "QR4", scan_qr4(ctx));
  add_item(rep, u, "QR5", scan_qr5(ctx, u.i0));
}

// E0 membership probes; the membership predicate evaluates anywhere, so
// closure scans are not restricted to in-universe results.
template <class Ctx>
struct SupportProbe {
  const Ctx& ctx;
  std::size_t i0;
  std::vector<std::uint8_t> member;

  SupportProbe(const Ctx& c, std::size_t zero_index) : ctx(c), i0(zero_index) {
    member.resize(ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i)
      member[i] = (ctx.leq_ww(i, i0) && ctx.leq_ww(i0, i)) ? 1 : 0;
  }
  bool sum_in(std::size_t a, std::size_t b) const {
    return ctx.leq_aw(a, b, i0) && ctx.leq_wa(i0, a, b);
  }
  bool prod_in(std::size_t a, std::size_t b) const {
    return ctx.leq_mw(a, b, i0) && ctx.leq_wm(i0, a, b);
  }
};

struct SupportVerdict {
  std::optional<std::array<std::size_t, 2>> witness;
  std::string note;
  std::optional<std::array<std::size_t, 1>> proper_witness;
};

template <class Ctx>
SupportVerdict scan_support_ideal(const SupportProbe<Ctx>& sp, const Universe& u) {
  SupportVerdict out;
  if (sp.member[u.i1]) {
    out.proper_witness = std::array<std::size_t, 1>{u.i1};
    out.note = "support contains 1";
    return out;
  }
  auto additive = scan_pairs(sp.ctx.n, [&sp](std::size_t i, std::size_t j) {
    return sp.member[i] && sp.member[j] && !sp.sum_in(i, j);
  });
  if (additive) {
    out.witness = additive;
    out.note = "support not closed under addition";
    return out;
  }
  auto absorbing = scan_pairs(sp.ctx.n, [&sp](std::size_t i, std::size_t j) {
    return sp.member[j] && !sp.prod_in(i, j);
  });
  if (absorbing) {
    out.witness = absorbing;
    out.note = "support not absorbing under ring multiplication";
    return out;
  }
  auto prime = scan_pairs(sp.ctx.n, [&sp](std::size_t i, std::size_t j) {
    return sp.prod_in(i, j) && !sp.member[i] && !sp.member[j];
  });
  if (prime) {
    out.witness = prime;
    out.note = "product lies in the support but neither factor does";
    return out;
  }
  return out;
}

template <class Ctx>
void support_items(const Ctx& ctx, const Universe& u, Report& rep) {
  SupportProbe<Ctx> sp(ctx, u.i0);
  if (sp.member[u.i1]) {
    rep.add("support_proper", CheckStatus::fail, {u.elems[u.i1]}, "1 ~ 0");
  } else {
    rep.add("support_proper", pass_status(u.exhaustive));
  }
  add_item(rep, u, "support_additive",
           scan_pairs(ctx.n, [&sp](std::size_t i, std::size_t j) {
             return sp.member[i] && sp.member[j] && !sp.sum_in(i, j);
           }));
  add_item(rep, u, "support_absorbing",
           scan_pairs(ctx.n, [&sp](std::size_t i, std::size_t j) {
             return sp.member[j] && !sp.prod_in(i, j);
           }));
  add_item(rep, u, "support_prime",
           scan_pairs(ctx.n, [&sp](std::size_t i, std::size_t j) {
             return sp.prod_in(i, j) && !sp.member[i] && !sp.member[j];
           }));
}

template <class Ctx>
void lemma_items(const QuasiOrder& rel, const Ctx& ctx, const Universe& u, Report& rep) {
  const std::size_t i0 = u.i0;
  auto equiv_ww = [&ctx](std::size_t i, std::size_t j) {
    return ctx.leq_ww(i, j) && ctx.leq_ww(j, i);
  };

  add_item(rep, u, "sum_absorbs_null",
           scan_pairs(ctx.n, [&](std::size_t i, std::size_t j) {
             return !equiv_ww(i, i0) && equiv_ww(j, i0) &&
                    !(ctx.leq_aw(i, j, i) && ctx.leq_wa(i, i, j));
           }));
  add_item(rep, u, "cancellation",
           scan_triples(ctx.n, [&](std::size_t i, std::size_t j, std::size_t k) {
             return !equiv_ww(k, i0) && ctx.leq_mm(i, k, j, k) && ctx.leq_mm(j, k, i, k) &&
                    !equiv_ww(i, j);
           }));
  add_item(rep, u, "squares_nonnegative",
           scan_one(ctx.n, [&ctx, i0](std::size_t i) { return !ctx.leq_wm(i0, i, i); }));

  auto qr5 = scan_qr5(ctx, i0);
  auto qr2 = scan_qr2(ctx, i0);
  if (!qr5 && qr2) {
    add_item(rep, u, "qr5_implies_qr2", qr2, "QR2 fails although QR5 holds here");
  } else {
    rep.add("qr5_implies_qr2", pass_status(u.exhaustive));
  }

  const Ring& ring = rel.ring();
  bool field_backend = ring.is_finite() && ring.is_field();
  if (!field_backend) {
    std::string note = "ring backend is not a field";
    rep.add("Q1", CheckStatus::skipped, {}, note);
    rep.add("Q2", CheckStatus::skipped, {}, note);
    rep.add("Q3", CheckStatus::skipped, {}, note);
    return;
  }
  add_item(rep, u, "Q1", scan_one(ctx.n, [&](std::size_t i) {
             return i != i0 && equiv_ww(i, i0);
           }));
  add_item(rep, u, "Q2", scan_qr3(ctx, i0));
  add_item(rep, u, "Q3", scan_qr4(ctx));
}

template <class Ctx>
void order_items(const Ctx& ctx, const Universe& u, Report& rep) {
  const std::size_t i0 = u.i0;
  basic_items(ctx, u, rep);
  add_zero_one_item("O1", rep, u, ctx.leq_ww(u.i0, u.i1) && !ctx.leq_ww(u.i1, u.i0));

  auto o2 = scan_pairs(ctx.n, [&ctx, i0](std::size_t i, std::size_t j) {
    return ctx.leq_mw(i, j, i0) && !ctx.leq_ww(i, i0) && !ctx.leq_ww(j, i0);
  });
  add_item(rep, u, "O2", o2);

  auto equiv_zero = [&ctx, i0](std::size_t i) {
    return ctx.leq_ww(i, i0) && ctx.leq_ww(i0, i);
  };
  auto o2p = scan_pairs(ctx.n, [&](std::size_t i, std::size_t j) {
    return ctx.leq_mw(i, j, i0) && ctx.leq_wm(i0, i, j) && !equiv_zero(i) && !equiv_zero(j);
  });
  add_item(rep, u, "O2'", o2p);

  if (o2.has_value() == o2p.has_value()) {
    rep.add("O2_agreement", pass_status(u.exhaustive), {},
            o2 ? "both forms fail" : "both forms hold");
  } else {
    const char* note = o2 ? "O2 fails while O2' holds" : "O2' fails while O2 holds";
    std::vector<Element> ws;
    for (std::size_t idx : (o2 ? *o2 : *o2p)) ws.push_back(u.elems[idx]);
    rep.add("O2_agreement", CheckStatus::fail, std::move(ws), note);
  }

  add_item(rep, u, "O3", scan_qr3(ctx, i0));
  add_item(rep, u, "O4", scan_triples(ctx.n, [&ctx](std::size_t i, std::size_t j, std::size_t k) {
             return ctx.leq_ww(i, j) && !ctx.leq_aa(i, k, j, k);
           }));

  SupportProbe<Ctx> sp(ctx, i0);
  SupportVerdict verdict = scan_support_ideal(sp, u);
  if (verdict.proper_witness) {
    add_item(rep, u, "support_prime", verdict.proper_witness, verdict.note);
  } else if (verdict.witness) {
    add_item(rep, u, "support_prime", verdict.witness, verdict.note);
  } else {
    rep.add("support_prime", pass_status(u.exhaustive));
  }
}

}  // namespace

Report check_axioms(const QuasiOrder& rel, const std::optional<Window>& window) {
  Universe u = resolve_universe(rel.ring(), window);
  Report rep;
  rep.subject = rel.describe();
  rep.window = u.label;
  rep.exhaustive = u.exhaustive;
  with_context(rel, u, window, [&](const auto& ctx) { quasi_items(ctx, u, rep); });
  return rep;
}

Report check_support_prime(const QuasiOrder& rel, const std::optional<Window>& window) {
  Universe u = resolve_universe(rel.ring(), window);
  Report rep;
  rep.subject = "support of " + rel.describe();
  rep.window = u.label;
  rep.exhaustive = u.exhaustive;
  with_context(rel, u, window, [&](const auto& ctx) { support_items(ctx, u, rep); });
  return rep;
}

Report lemma_suite(const QuasiOrder& rel, const std::optional<Window>& window) {
  Universe u = resolve_universe(rel.ring(), window);
  Report rep;
  rep.subject = "lemma suite for " + rel.describe();
  rep.window = u.label;
  rep.exhaustive = u.exhaustive;
  with_context(rel, u, window, [&](const auto& ctx) { lemma_items(rel, ctx, u, rep); });
  return rep;
}

Report check_order_axioms(const QuasiOrder& rel, const std::optional<Window>& window) {
  Universe u = resolve_universe(rel.ring(), window);
  Report rep;
  rep.subject = rel.describe();
  rep.window = u.label;
  rep.exhaustive = u.exhaustive;
  with_context(rel, u, window, [&](const auto& ctx) { order_items(ctx, u, rep); });
  return rep;
}

Report check_cone(const PositiveCone& cone, const std::optional<Window>& window) {
  const Ring& ring = cone.ring();
  Universe u = resolve_universe(ring, window);
  Report rep;
  rep.subject = cone.describe();
  rep.window = u.label;
  rep.exhaustive = u.exhaustive;
  std::size_t n = u.elems.size();

  std::unordered_set<Element, ElementHash> in_universe(u.elems.begin(), u.elems.end());
  std::vector<std::uint8_t> pos(n), mem(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = cone.contains(u.elems[i]) ? 1 : 0;
    mem[i] = (pos[i] && cone.contains(ring.neg(u.elems[i]))) ? 1 : 0;
  }
  auto p_member = [&](const Element& e) {
    return cone.contains(e) && cone.contains(ring.neg(e));
  };

  add_item(rep, u, "P0", scan_one(n, [&](std::size_t i) {
             return !pos[i] && !cone.contains(ring.neg(u.elems[i]));
           }));

  // P1: the support is a proper, closed, prime ideal; closure probes only
  // where results stay in the universe.
  {
    std::optional<std::array<std::size_t, 2>> w;
    std::string note;
    if (mem[u.i1]) {
      rep.add("P1", CheckStatus::fail, {u.elems[u.i1]}, "support contains 1");
    } else {
      w = scan_pairs(n, [&](std::size_t i, std::size_t j) {
        if (!mem[i] || !mem[j]) return false;
        Element s = ring.add(u.elems[i], u.elems[j]);
        return in_universe.count(s) != 0 && !p_member(s);
      });
      if (w) note = "support not closed under addition";
      if (!w) {
        w = scan_pairs(n, [&](std::size_t i, std::size_t j) {
          if (!mem[j]) return false;
          Element p = ring.mul(u.elems[i], u.elems[j]);
          return in_universe.count(p) != 0 && !p_member(p);
        });
        if (w) note = "support not absorbing under ring multiplication";
      }
      if (!w) {
        w = scan_pairs(n, [&](std::size_t i, std::size_t j) {
          if (mem[i] || mem[j]) return false;
          Element p = ring.mul(u.elems[i], u.elems[j]);
          return in_universe.count(p) != 0 && p_member(p);
        });
        if (w) note = "product lies in the support but neither factor does";
      }
      add_item(rep, u, "P1", w, note);
    }
  }

  add_item(rep, u, "P2", scan_pairs(n, [&](std::size_t i, std::size_t j) {
             if (!pos[i] || !pos[j]) return false;
             Element p = ring.mul(u.elems[i], u.elems[j]);
             return in_universe.count(p) != 0 && !cone.contains(p);
           }));
  add_item(rep, u, "P3", scan_pairs(n, [&](std::size_t i, std::size_t j) {
             if (!pos[i] || !pos[j]) return false;
             Element s = ring.add(u.elems[i], u.elems[j]);
             return in_universe.count(s) != 0 && !cone.contains(s);
           }));
  return rep;
}

Report check_valuation_axioms(const Valuation& v, const std::optional<Window>& window) {
  const Ring& ring = v.ring();
  Universe u = resolve_universe(ring, window);
  Report rep;
  rep.subject = v.describe();
  rep.window = u.label;
  rep.exhaustive = u.exhaustive;
  std::size_t n = u.elems.size();
  const OrderedAbelianGroup& G = v.group();

  std::vector<Val> vals;
  vals.reserve(n);
  for (const auto& e : u.elems) vals.push_back(v.vmap(e));

  if (vals[u.i0].inf)
    rep.add("V1", CheckStatus::pass);
  else
    rep.add("V1", CheckStatus::fail, {u.elems[u.i0]}, "v(0) is finite");

  if (val_eq(G, vals[u.i1], Val::finite(G.zero())))
    rep.add("V2", CheckStatus::pass);
  else
    rep.add("V2", CheckStatus::fail, {u.elems[u.i1]}, "v(1) != 0");

  add_item(rep, u, "V3", scan_pairs(n, [&](std::size_t i, std::size_t j) {
             Val pv = v.vmap(ring.mul(u.elems[i], u.elems[j]));
             return !val_eq(G, pv, val_add(G, vals[i], vals[j]));
           }));

  auto val_min = [&G](const Val& a, const Val& b) { return val_leq(G, a, b) ? a : b; };
  add_item(rep, u, "V4", scan_pairs(n, [&](std::size_t i, std::size_t j) {
             Val sv = v.vmap(ring.add(u.elems[i], u.elems[j]));
             return !val_leq(G, val_min(vals[i], vals[j]), sv);
           }));
  add_item(rep, u, "min_equality", scan_pairs(n, [&](std::size_t i, std::size_t j) {
             if (val_eq(G, vals[i], vals[j])) return false;
             Val sv = v.vmap(ring.add(u.elems[i], u.elems[j]));
             return !val_eq(G, sv, val_min(vals[i], vals[j]));
           }));

  // Support primality through the membership predicate v(x) = infinity.
  {
    std::vector<std::uint8_t> mem(n);
    for (std::size_t i = 0; i < n; ++i) mem[i] = vals[i].inf ? 1 : 0;
    std::optional<std::array<std::size_t, 2>> w;
    std::string note;
    if (mem[u.i1]) {
      rep.add("support_prime", CheckStatus::fail, {u.elems[u.i1]}, "support contains 1");
      return rep;
    }
    w = scan_pairs(n, [&](std::size_t i, std::size_t j) {
      return mem[i] && mem[j] && !v.vmap(ring.add(u.elems[i], u.elems[j])).inf;
    });
    if (w) note = "support not closed under addition";
    if (!w) {
      w = scan_pairs(n, [&](std::size_t i, std::size_t j) {
        return mem[j] && !v.vmap(ring.mul(u.elems[i], u.elems[j])).inf;
      });
      if (w) note = "support not absorbing under ring multiplication";
    }
    if (!w) {
      w = scan_pairs(n, [&](std::size_t i, std::size_t j) {
        return !mem[i] && !mem[j] && v.vmap(ring.mul(u.elems[i], u.elems[j])).inf;
      });
      if (w) note = "product lies in the support but neither factor does";
    }
    add_item(rep, u, "support_prime", w, note);
  }
  return rep;
}

} // namespace qring
