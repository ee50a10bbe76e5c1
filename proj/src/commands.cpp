#include "qring/commands.hpp"

#include <sstream>
#include <vector>

#include "qring/axioms.hpp"
#include "qring/classify.hpp"
#include "qring/enumerate.hpp"
#include "qring/errors.hpp"
#include "qring/fraction.hpp"
#include "qring/gallery.hpp"

namespace qring {

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse:
    case errc::structural:
    case errc::invalid_window:
    case errc::lookup:
    case errc::limit:
      return 2;
    default:
      return 1;
  }
}

Window parse_window_spec(const Ring& ring, const std::string& spec) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(part);
    return parts;
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      i64 v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(errc::parse, "--window: \"" + s + "\" is not an integer");
    }
  };
  if (spec == "all") return Window::all(ring);
  std::vector<std::string> parts = split(spec, ':');
  if (parts.size() == 3 && parts[0] == "int")
    return Window::integer_interval(ring, to_int(parts[1]), to_int(parts[2]));
  if (parts.size() == 3 && parts[0] == "poly") {
    i64 deg = to_int(parts[1]);
    if (deg < 0) fail(errc::parse, "--window: degree must be nonnegative");
    std::vector<i64> coeffs;
    for (const auto& c : split(parts[2], ',')) coeffs.push_back(to_int(c));
    return Window::polynomial(ring, static_cast<std::uint32_t>(deg), coeffs);
  }
  fail(errc::parse,
       "--window: expected \"all\", \"int:<lo>:<hi>\" or \"poly:<deg>:<c1>,<c2>,...\"");
}

Input resolve_structure(Structure structure, const std::string& window_spec,
                        ordered_json echo) {
  std::optional<Window> w;
  if (!window_spec.empty())
    w = parse_window_spec(structure.ring, window_spec);
  else if (structure.window)
    w = *structure.window;
  else if (structure.ring.is_finite())
    w = Window::all(structure.ring);
  else
    fail(errc::invalid_window, "infinite rings require a window");
  return Input{std::move(structure), std::move(*w), std::move(echo)};
}

Input resolve_input(const std::string& file, const std::string& builtin_name,
                    const std::string& window_spec) {
  if (!file.empty() && !builtin_name.empty())
    fail(errc::parse, "give either a structure file or --builtin, not both");
  ordered_json echo = ordered_json::object();
  if (!file.empty()) {
    echo["file"] = file;
    return resolve_structure(load_structure_file(file), window_spec, std::move(echo));
  }
  if (builtin_name.empty()) fail(errc::parse, "give a structure file or --builtin <name>");
  BuiltinStructure b = builtin(builtin_name);
  echo["builtin"] = builtin_name;
  return resolve_structure(Structure{b.ring, b.relation, b.window}, window_spec,
                           std::move(echo));
}

namespace {

ordered_json describe_input(const Input& in) {
  ordered_json out;
  out["input"] = in.echo;
  out["ring"] = in.structure.ring.describe();
  out["relation"] = in.structure.relation.describe();
  out["window"] = in.window.describe();
  return out;
}

} // namespace

ordered_json check_document(const Input& in) {
  const QuasiOrder& rel = in.structure.relation;
  const Ring& ring = in.structure.ring;
  std::optional<Window> w;
  if (!in.window.exhaustive()) w = in.window;

  ordered_json doc;
  doc["command"] = "check";
  doc.update(describe_input(in));
  Report axioms = check_axioms(rel, w);
  Report prime = check_support_prime(rel, w);
  Report lemmas = lemma_suite(rel, w);
  doc["axioms"] = report_to_json(axioms, ring);
  doc["support_prime"] = report_to_json(prime, ring);
  doc["lemmas"] = report_to_json(lemmas, ring);
  bool ok = axioms.ok() && prime.ok() && lemmas.ok();
  if (const Valuation* v = rel.valuation()) {
    Report vr = check_valuation_axioms(*v, w);
    doc["valuation_axioms"] = report_to_json(vr, ring);
    ok = ok && vr.ok();
  }
  if (rel.order_backend() != nullptr) {
    Report orr = check_order_axioms(rel, w);
    doc["order_axioms"] = report_to_json(orr, ring);
    ok = ok && orr.ok();
  }
  doc["support"] = support_to_json(compute_support(rel, w), ring);
  doc["ok"] = ok;
  return doc;
}

ordered_json classify_document(const Input& in) {
  ordered_json doc;
  doc["command"] = "classify";
  doc.update(describe_input(in));
  Classification cls = classify(in.structure.relation, in.window);
  doc["classification"] = classification_to_json(cls, in.structure.ring);
  RoundtripResult rt = roundtrip_check(in.structure.relation, cls, in.window);
  ordered_json rtj;
  rtj["relation_match"] = rt.relation_match;
  rtj["support_match"] = rt.support_match;
  if (rt.first_difference) {
    rtj["first_difference"] =
        ordered_json::array({element_to_json(in.structure.ring, rt.first_difference->first),
                             element_to_json(in.structure.ring, rt.first_difference->second)});
  } else {
    rtj["first_difference"] = nullptr;
  }
  doc["roundtrip"] = std::move(rtj);
  doc["ok"] = rt.ok();
  return doc;
}

ordered_json quotfield_document(const Input& in) {
  ordered_json doc;
  doc["command"] = "quotfield";
  doc.update(describe_input(in));
  FractionExtension ext = fraction_extension(in.structure.relation);
  FractionWindow fw = fraction_window(ext, in.window);
  Report checks = check_fraction_extension(ext, in.window);
  doc["fraction_count"] = fw.all.size();
  doc["class_count"] = fw.representatives.size();
  doc["checks"] = report_to_json(checks, in.structure.ring);
  ordered_json samples = ordered_json::array();
  const auto& reps = fw.representatives;
  for (std::size_t i = 0; i + 1 < reps.size() && samples.size() < 5; ++i) {
    const Fraction &f = reps[i], &g = reps[i + 1];
    if (ext.leq(f, g))
      samples.push_back(ext.to_string(f) + " <= " + ext.to_string(g));
    else
      samples.push_back(ext.to_string(g) + " <= " + ext.to_string(f));
  }
  doc["samples"] = std::move(samples);
  doc["ok"] = checks.ok();
  return doc;
}

ordered_json counterexample_document(const Input& in) {
  ordered_json doc = check_document(in);
  doc["command"] = "counterexample";
  Report rep = counterexample_report(in.window);
  doc["counterexample"] = report_to_json(rep, in.structure.ring);
  // The report must find QR5 broken and everything else intact.
  bool shape_ok = !rep.ok();
  if (const CheckItem* qr5 = rep.find("QR5"))
    shape_ok = shape_ok && qr5->status == CheckStatus::fail;
  doc["counterexample_confirmed"] = shape_ok;
  doc["ok"] = false;
  return doc;
}

ordered_json enumerate_document(const std::string& ring_spec, std::size_t max_n) {
  if (ring_spec.rfind("zmod:", 0) != 0) fail(errc::parse, "--ring: expected \"zmod:<n>\"");
  i64 n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoll(ring_spec.substr(5), &pos);
    if (pos != ring_spec.size() - 5) throw std::invalid_argument(ring_spec);
  } catch (const std::exception&) {
    fail(errc::parse, "--ring: expected \"zmod:<n>\" with integer n");
  }
  Ring ring = Ring::modular(n);
  EnumerationResult result = enumerate_quasiorders(ring, max_n);

  ordered_json doc;
  doc["command"] = "enumerate";
  doc["ring"] = ring.describe();
  doc["exhaustive"] = result.exhaustive;
  doc["count"] = result.relations.size();
  Window all = Window::all(ring);
  ordered_json list = ordered_json::array();
  for (const auto& rel : result.relations) {
    ordered_json entry;
    if (const auto* rows = rel.matrix_rows()) {
      ordered_json m = ordered_json::array();
      for (const auto& row : *rows) m.push_back(std::vector<int>(row.begin(), row.end()));
      entry["matrix"] = std::move(m);
    }
    entry["support"] = support_to_json(compute_support(rel), ring);
    Classification cls = classify(rel, all);
    entry["classification"] = classification_to_json(cls, ring);
    list.push_back(std::move(entry));
  }
  doc["quasi_orders"] = std::move(list);
  bool ok = true;
  if (result.exhaustive) {
    Report cross = cross_check_dichotomy(ring);
    doc["cross_check"] = report_to_json(cross, ring);
    ok = cross.ok();
  } else {
    doc["cross_check"] = nullptr;
    doc["notice"] =
        "ring larger than the exhaustive cap: theory-guided enumeration, cross-check skipped";
  }
  doc["ok"] = ok;
  return doc;
}

} // namespace qring
