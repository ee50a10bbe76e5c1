#include "qring/io.hpp"

#include <fstream>
#include <map>
#include <utility>
#include <vector>

#include "qring/errors.hpp"
#include "qring/gallery.hpp"
#include "qring/order.hpp"
#include "qring/valuation.hpp"

namespace qring {
namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(errc::parse, where + ": " + what);
}

void reject_unknown_keys(const ordered_json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const auto& a : allowed)
      if (key == a) known = true;
    if (!known) bad(where, "unknown key \"" + key + "\"");
  }
}

const ordered_json& field(const ordered_json& obj, const std::string& key,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, "missing key \"" + key + "\"");
  return *it;
}

std::string kind_of(const ordered_json& obj, const std::string& where) {
  const ordered_json& k = field(obj, "kind", where);
  if (!k.is_string()) bad(where, "\"kind\" must be a string");
  return k.get<std::string>();
}

i64 integer_of(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<i64>();
}

std::vector<i64> integer_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<i64> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(integer_of(v, where));
  return out;
}

std::vector<std::vector<i64>> integer_table(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<std::vector<i64>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(integer_list(row, where));
  return out;
}

Element element_from_json(const Ring& ring, const ordered_json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (ring.kind() == RingKind::polynomial)
      return Element(Polynomial::constant(ring.variables().size(), Rational(j.get<i64>())));
    return ring.from_integer(j.get<i64>());
  }
  if (j.is_array()) {
    if (ring.kind() != RingKind::polynomial)
      bad(where, "term-list elements need a polynomial ring");
    const std::size_t arity = ring.variables().size();
    Polynomial p(arity);
    for (const auto& term : j) {
      if (!term.is_array() || term.size() != 2)
        bad(where, "each term must be [coeff, [exponents...]]");
      i64 c = integer_of(term[0], where);
      std::vector<i64> exps = integer_list(term[1], where);
      if (exps.size() != arity) bad(where, "exponent vector length must match the arity");
      std::vector<std::uint32_t> e;
      for (i64 v : exps) {
        if (v < 0) bad(where, "exponents must be nonnegative");
        e.push_back(static_cast<std::uint32_t>(v));
      }
      p = p + Polynomial::term(arity, Monomial(std::move(e)), Rational(c));
    }
    return Element(std::move(p));
  }
  bad(where, "expected an integer or a term list");
}

std::vector<Element> element_list(const Ring& ring, const ordered_json& j,
                                  const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of elements");
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(element_from_json(ring, v, where));
  return out;
}

Ring parse_ring(const ordered_json& j) {
  const std::string where = "ring";
  std::string kind = kind_of(j, where);
  if (kind == "integers") {
    reject_unknown_keys(j, {"kind"}, where);
    return Ring::integers();
  }
  if (kind == "modular") {
    reject_unknown_keys(j, {"kind", "n"}, where);
    return Ring::modular(integer_of(field(j, "n", where), where));
  }
  if (kind == "polynomial") {
    reject_unknown_keys(j, {"kind", "vars"}, where);
    const ordered_json& vars = field(j, "vars", where);
    if (!vars.is_array() || vars.empty()) bad(where, "\"vars\" must be a nonempty array");
    std::vector<std::string> names;
    for (const auto& v : vars) {
      if (!v.is_string()) bad(where, "variable names must be strings");
      names.push_back(v.get<std::string>());
    }
    return Ring::polynomial(std::move(names));
  }
  if (kind == "table") {
    reject_unknown_keys(j, {"kind", "add", "mul"}, where);
    return Ring::table(integer_table(field(j, "add", where), where),
                       integer_table(field(j, "mul", where), where));
  }
  bad(where, "unknown ring kind \"" + kind + "\"");
}

/// Single generator on the integers means the ideal (m); finite backends span.
Ideal ideal_from_generators(const Ring& ring, const ordered_json& j, const std::string& where) {
  std::vector<i64> gens = integer_list(j, where);
  if (ring.kind() == RingKind::integers) {
    if (gens.size() != 1) bad(where, "integer ideals take exactly one generator");
    if (gens[0] < 0) bad(where, "integer ideal generators are nonnegative");
    return Ideal::integer_multiples(ring, gens[0]);
  }
  std::vector<Element> elems;
  elems.reserve(gens.size());
  for (i64 g : gens) elems.push_back(ring.from_integer(g));
  return Ideal::span(ring, elems);
}

Valuation parse_valuation(const Ring& ring, const ordered_json& j) {
  const std::string where = "relation.valuation";
  std::string kind = kind_of(j, where);
  if (kind == "padic") {
    reject_unknown_keys(j, {"kind", "p"}, where);
    return Valuation::padic(ring, integer_of(field(j, "p", where), where));
  }
  if (kind == "monomial") {
    reject_unknown_keys(j, {"kind", "weights"}, where);
    if (ring.kind() != RingKind::polynomial)
      bad(where, "monomial valuations need a polynomial ring");
    const ordered_json& w = field(j, "weights", where);
    if (!w.is_object()) bad(where, "\"weights\" must map variable names to vectors");
    const auto& vars = ring.variables();
    if (w.size() != vars.size()) bad(where, "weights must cover every variable exactly once");
    std::vector<std::vector<i64>> weights;
    for (const auto& name : vars) {
      auto it = w.find(name);
      if (it == w.end()) bad(where, "missing weight for variable \"" + name + "\"");
      weights.push_back(integer_list(*it, where));
    }
    return Valuation::monomial(ring, std::move(weights));
  }
  if (kind == "trivial") {
    reject_unknown_keys(j, {"kind", "generators"}, where);
    return Valuation::trivial(ideal_from_generators(ring, field(j, "generators", where), where));
  }
  if (kind == "table") {
    reject_unknown_keys(j, {"kind", "values"}, where);
    const ordered_json& values = field(j, "values", where);
    if (!values.is_array()) bad(where, "\"values\" must be an array");
    std::vector<std::optional<i64>> vals;
    for (const auto& v : values) {
      if (v.is_null())
        vals.push_back(std::nullopt);
      else
        vals.push_back(integer_of(v, where));
    }
    return Valuation::table(ring, std::move(vals));
  }
  bad(where, "unknown valuation kind \"" + kind + "\"");
}

Order parse_order(const Ring& ring, const ordered_json& j) {
  const std::string where = "relation.order";
  std::string kind = kind_of(j, where);
  if (kind == "standard") {
    reject_unknown_keys(j, {"kind"}, where);
    return Order::standard_integer(ring);
  }
  if (kind == "poly_at_infinity") {
    reject_unknown_keys(j, {"kind", "precedence"}, where);
    const ordered_json& prec = field(j, "precedence", where);
    if (!prec.is_array()) bad(where, "\"precedence\" must be an array of variable names");
    std::vector<std::string> names;
    for (const auto& v : prec) {
      if (!v.is_string()) bad(where, "precedence entries must be strings");
      names.push_back(v.get<std::string>());
    }
    return Order::poly_at_infinity(ring, names);
  }
  if (kind == "cone") {
    reject_unknown_keys(j, {"kind", "elements"}, where);
    return Order::from_cone(
        PositiveCone(ring, element_list(ring, field(j, "elements", where), where)));
  }
  bad(where, "unknown order kind \"" + kind + "\"");
}

QuasiOrder parse_relation(const Ring& ring, const ordered_json& j) {
  const std::string where = "relation";
  std::string kind = kind_of(j, where);
  if (kind == "matrix") {
    reject_unknown_keys(j, {"kind", "rows"}, where);
    auto table = integer_table(field(j, "rows", where), where);
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& r : table) {
      std::vector<std::uint8_t> row;
      for (i64 v : r) {
        if (v != 0 && v != 1) bad(where + ".rows", "matrix entries must be 0 or 1");
        row.push_back(static_cast<std::uint8_t>(v));
      }
      rows.push_back(std::move(row));
    }
    try {
      return QuasiOrder::matrix(ring, std::move(rows));
    } catch (const error& e) {
      bad(where + ".rows", e.what());
    }
  }
  if (kind == "valuation") {
    reject_unknown_keys(j, {"kind", "valuation"}, where);
    return QuasiOrder::from_valuation(parse_valuation(ring, field(j, "valuation", where)));
  }
  if (kind == "order") {
    reject_unknown_keys(j, {"kind", "order"}, where);
    return QuasiOrder::from_order(parse_order(ring, field(j, "order", where)));
  }
  if (kind == "trivial_at_prime") {
    reject_unknown_keys(j, {"kind", "generators"}, where);
    return QuasiOrder::trivial_at_prime(
        ideal_from_generators(ring, field(j, "generators", where), where));
  }
  if (kind == "counterexample_sec3") {
    reject_unknown_keys(j, {"kind"}, where);
    return dominant_monomial_relation(ring);
  }
  bad(where, "unknown relation kind \"" + kind + "\"");
}

Window parse_window(const Ring& ring, const ordered_json& j) {
  const std::string where = "window";
  std::string kind = kind_of(j, where);
  if (kind == "interval") {
    reject_unknown_keys(j, {"kind", "lo", "hi"}, where);
    return Window::integer_interval(ring, integer_of(field(j, "lo", where), where),
                                    integer_of(field(j, "hi", where), where));
  }
  if (kind == "poly") {
    reject_unknown_keys(j, {"kind", "max_degree", "coeffs"}, where);
    i64 deg = integer_of(field(j, "max_degree", where), where);
    if (deg < 0) bad(where, "\"max_degree\" must be nonnegative");
    return Window::polynomial(ring, static_cast<std::uint32_t>(deg),
                              integer_list(field(j, "coeffs", where), where));
  }
  if (kind == "all") {
    reject_unknown_keys(j, {"kind"}, where);
    return Window::all(ring);
  }
  bad(where, "unknown window kind \"" + kind + "\"");
}

} // namespace

Structure parse_structure(const ordered_json& doc) {
  reject_unknown_keys(doc, {"ring", "relation", "window"}, "structure");
  Ring ring = parse_ring(field(doc, "ring", "structure"));
  QuasiOrder relation = parse_relation(ring, field(doc, "relation", "structure"));
  std::optional<Window> window;
  if (doc.contains("window")) window = parse_window(ring, doc.at("window"));
  if (!window && !ring.is_finite())
    fail(errc::invalid_window, "structure: infinite rings require a window");
  return {std::move(ring), std::move(relation), std::move(window)};
}

Structure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open structure file " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse, path + ": " + e.what());
  }
  return parse_structure(doc);
}

std::string render_element(const Ring& ring, const Element& e) {
  if (e.is_tuple() && ring.kind() != RingKind::product) {
    const auto& t = e.tuple();
    if (t.size() == 2)
      return ring.to_string(t[0]) + "/" + ring.to_string(t[1]);
  }
  return ring.to_string(e);
}

ordered_json element_to_json(const Ring& ring, const Element& e) {
  if (e.is_scalar() &&
      (ring.kind() == RingKind::integers || ring.kind() == RingKind::modular ||
       ring.kind() == RingKind::table))
    return e.scalar();
  return render_element(ring, e);
}

ordered_json report_to_json(const Report& report, const Ring& ring) {
  ordered_json out;
  out["subject"] = report.subject;
  out["exhaustive"] = report.exhaustive;
  out["ok"] = report.ok();
  ordered_json items = ordered_json::array();
  for (const auto& item : report.items) {
    ordered_json it;
    it["name"] = item.name;
    it["status"] = status_label(item.status);
    if (!item.witness.empty()) {
      ordered_json w = ordered_json::array();
      for (const auto& e : item.witness) w.push_back(element_to_json(ring, e));
      it["witness"] = std::move(w);
    }
    if (!item.note.empty()) it["note"] = item.note;
    items.push_back(std::move(it));
  }
  out["items"] = std::move(items);
  return out;
}

ordered_json support_to_json(const SupportSet& support, const Ring& ring) {
  ordered_json out;
  out["exhaustive"] = support.exhaustive;
  ordered_json members = ordered_json::array();
  for (const auto& e : support.members) members.push_back(element_to_json(ring, e));
  out["members"] = std::move(members);
  return out;
}

namespace {

/// Window elements of finite value, one entry per element, k = index of its
/// value class with classes sorted ascending. Deterministic: classes are
/// discovered in window scan order and sorted by the group comparison.
ordered_json value_map_json(const Classification& cls, const Ring& ring) {
  const Valuation& v = *cls.valuation;
  struct ClassEntry {
    Val value;
    std::size_t order_index = 0; // position after sorting
  };
  std::vector<Val> classes;
  std::vector<std::pair<const Element*, std::size_t>> entries; // element, class slot
  for (const Element& e : cls.window.elements()) {
    Val val = v.vmap(e);
    if (val.inf) continue;
    std::size_t slot = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (val_eq(v.group(), classes[i], val)) {
        slot = i;
        break;
      }
    if (slot == classes.size()) classes.push_back(val);
    entries.push_back({&e, slot});
  }
  // Rank of each class = number of strictly smaller classes.
  std::vector<std::size_t> rank(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (val_leq(v.group(), classes[j], classes[i]) &&
          !val_leq(v.group(), classes[i], classes[j]))
        ++rank[i];
  ordered_json map = ordered_json::array();
  for (const auto& [elem, slot] : entries)
    map.push_back(ordered_json::array(
        {element_to_json(ring, *elem), static_cast<i64>(rank[slot])}));
  return map;
}

} // namespace

ordered_json classification_to_json(const Classification& cls, const Ring& ring) {
  ordered_json out;
  if (cls.branch == Branch::ordered) {
    out["branch"] = "ordered";
    ordered_json cone = ordered_json::array();
    if (cls.cone)
      for (const auto& e : cls.cone->members()) cone.push_back(element_to_json(ring, e));
    out["cone_window"] = std::move(cone);
    ordered_json support = ordered_json::array();
    for (const auto& e : cls.support.members) support.push_back(element_to_json(ring, e));
    out["support"] = std::move(support);
  } else {
    out["branch"] = "valued";
    out["group"] = ordered_json{{"kind", cls.group_kind}};
    ordered_json support = ordered_json::array();
    for (const auto& e : cls.support.members) support.push_back(element_to_json(ring, e));
    out["support"] = std::move(support);
    out["map"] = value_map_json(cls, ring);
  }
  out["sign_evidence"] = cls.sign_evidence;
  return out;
}

} // namespace qring
