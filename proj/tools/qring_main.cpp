// Batch front end: load a structure (file or builtin), run the axiom engine,
// the classifier, the finite-model enumerator or the fraction-field checks,
// and print one JSON document (--json) or its human rendering. Exit codes:
// 0 success, 1 semantic failure (axiom or round-trip), 2 usage/input error.
#include <cctype>
#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qring/commands.hpp"
#include "qring/errors.hpp"

namespace {

using qring::ordered_json;

void print_report(std::ostream& os, const std::string& title, const ordered_json& rep) {
  os << title << ": " << (rep.at("ok").get<bool>() ? "ok" : "FAIL")
     << (rep.at("exhaustive").get<bool>() ? " (exhaustive)" : " (window)") << "\n";
  for (const auto& item : rep.at("items")) {
    os << "  " << item.at("name").get<std::string>() << ": "
       << item.at("status").get<std::string>();
    if (item.contains("witness")) {
      os << "  witness (";
      bool first = true;
      for (const auto& w : item.at("witness")) {
        if (!first) os << ", ";
        first = false;
        os << (w.is_string() ? w.get<std::string>() : w.dump());
      }
      os << ")";
    }
    if (item.contains("note")) os << "  -- " << item.at("note").get<std::string>();
    os << "\n";
  }
}

void print_support(std::ostream& os, const ordered_json& sup) {
  os << "support: {";
  bool first = true;
  for (const auto& m : sup.at("members")) {
    if (!first) os << ", ";
    first = false;
    os << (m.is_string() ? m.get<std::string>() : m.dump());
  }
  os << "}" << (sup.at("exhaustive").get<bool>() ? " (exhaustive)" : " (window)") << "\n";
}

void print_classification(std::ostream& os, const ordered_json& cls) {
  std::string branch = cls.at("branch").get<std::string>();
  for (auto& c : branch) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  os << "branch: " << branch << "\n";
  os << "evidence: " << cls.at("sign_evidence").get<std::string>() << "\n";
  if (cls.contains("group"))
    os << "value group: " << cls.at("group").at("kind").get<std::string>() << "\n";
  if (cls.contains("cone_window")) {
    os << "cone window: ";
    const auto& cone = cls.at("cone_window");
    os << "[";
    bool first = true;
    for (const auto& m : cone) {
      if (!first) os << ", ";
      first = false;
      os << (m.is_string() ? m.get<std::string>() : m.dump());
    }
    os << "] (" << cone.size() << " elements)\n";
  }
  if (cls.contains("map"))
    os << "value map: " << cls.at("map").size() << " window elements in "
       << "ascending class order\n";
}

void print_human(std::ostream& os, const ordered_json& doc, double seconds) {
  os << "command: " << doc.at("command").get<std::string>() << "\n";
  for (const char* key : {"ring", "relation", "window"})
    if (doc.contains(key)) os << key << ": " << doc.at(key).get<std::string>() << "\n";
  if (doc.contains("axioms")) print_report(os, "axioms", doc.at("axioms"));
  if (doc.contains("support_prime")) print_report(os, "support primality", doc.at("support_prime"));
  if (doc.contains("lemmas")) print_report(os, "lemmas", doc.at("lemmas"));
  if (doc.contains("valuation_axioms"))
    print_report(os, "valuation axioms", doc.at("valuation_axioms"));
  if (doc.contains("order_axioms")) print_report(os, "order axioms", doc.at("order_axioms"));
  if (doc.contains("support")) print_support(os, doc.at("support"));
  if (doc.contains("classification")) print_classification(os, doc.at("classification"));
  if (doc.contains("roundtrip")) {
    const auto& rt = doc.at("roundtrip");
    os << "roundtrip: relation "
       << (rt.at("relation_match").get<bool>() ? "matches" : "DIFFERS") << ", support "
       << (rt.at("support_match").get<bool>() ? "matches" : "DIFFERS") << "\n";
  }
  if (doc.contains("counterexample")) print_report(os, "counterexample", doc.at("counterexample"));
  if (doc.contains("fraction_count"))
    os << "fractions: " << doc.at("fraction_count").get<std::size_t>() << " ("
       << doc.at("class_count").get<std::size_t>() << " classes)\n";
  if (doc.contains("checks")) print_report(os, "fraction checks", doc.at("checks"));
  if (doc.contains("samples"))
    for (const auto& s : doc.at("samples")) os << "sample: " << s.get<std::string>() << "\n";
  if (doc.contains("count"))
    os << "quasi-orders found: " << doc.at("count").get<std::size_t>()
       << (doc.at("exhaustive").get<bool>() ? " (exhaustive)" : " (theory-guided)") << "\n";
  if (doc.contains("quasi_orders")) {
    std::size_t idx = 0;
    for (const auto& entry : doc.at("quasi_orders")) {
      os << "--- quasi-order " << idx++ << " ---\n";
      print_support(os, entry.at("support"));
      print_classification(os, entry.at("classification"));
    }
  }
  if (doc.contains("cross_check") && !doc.at("cross_check").is_null())
    print_report(os, "cross-check", doc.at("cross_check"));
  if (doc.contains("notice")) os << "notice: " << doc.at("notice").get<std::string>() << "\n";
  os << "result: " << (doc.at("ok").get<bool>() ? "ok" : "FAIL") << "\n";
  os << "elapsed: " << seconds << " s\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and classification kernel for quasi-ordered commutative rings"};
  app.require_subcommand(1);

  struct CommonArgs {
    std::string file;
    std::string builtin_name;
    std::string window_spec;
    bool json = false;
  };
  auto add_common = [](CLI::App* cmd, CommonArgs& args, bool with_file = true) {
    if (with_file) cmd->add_option("file", args.file, "structure file (JSON)");
    cmd->add_option("--builtin", args.builtin_name, "builtin structure name");
    cmd->add_option("--window", args.window_spec,
                    "window override: all | int:<lo>:<hi> | poly:<deg>:<c1>,<c2>,...");
    cmd->add_flag("--json", args.json, "print the JSON document instead of text");
  };

  CommonArgs check_args, classify_args, quot_args, counter_args;
  CLI::App* cmd_check = app.add_subcommand("check", "run the axiom and lemma checks");
  add_common(cmd_check, check_args);
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "decide the ordered/valued dichotomy and round-trip it");
  add_common(cmd_classify, classify_args);
  CLI::App* cmd_quot =
      app.add_subcommand("quotfield", "extend the quasi-order to the fraction field");
  add_common(cmd_quot, quot_args);
  CLI::App* cmd_counter = app.add_subcommand(
      "counterexample", "check the two-variable relation that defeats cancellation");
  add_common(cmd_counter, counter_args, false);

  std::string ring_spec;
  std::size_t max_n = 8;
  bool enum_json = false;
  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list every quasi-order on a finite ring");
  cmd_enum->add_option("--ring", ring_spec, "finite ring: zmod:<n>")->required();
  cmd_enum->add_option("--max-n", max_n, "largest ring size enumerated exhaustively (default 8)");
  cmd_enum->add_flag("--json", enum_json, "print the JSON document instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bool json = false;
  try {
    auto started = std::chrono::steady_clock::now();
    ordered_json doc;
    if (cmd_check->parsed()) {
      json = check_args.json;
      doc = qring::check_document(qring::resolve_input(check_args.file, check_args.builtin_name,
                                                       check_args.window_spec));
    } else if (cmd_classify->parsed()) {
      json = classify_args.json;
      doc = qring::classify_document(qring::resolve_input(
          classify_args.file, classify_args.builtin_name, classify_args.window_spec));
    } else if (cmd_quot->parsed()) {
      json = quot_args.json;
      doc = qring::quotfield_document(
          qring::resolve_input(quot_args.file, quot_args.builtin_name, quot_args.window_spec));
    } else if (cmd_counter->parsed()) {
      json = counter_args.json;
      doc = qring::counterexample_document(qring::resolve_input(
          "", counter_args.builtin_name.empty() ? "sec3" : counter_args.builtin_name,
          counter_args.window_spec));
    } else if (cmd_enum->parsed()) {
      json = enum_json;
      doc = qring::enumerate_document(ring_spec, max_n);
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      print_human(std::cout, doc, seconds);
    return doc.at("ok").get<bool>() ? 0 : 1;
  } catch (const qring::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qring::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
