#pragma once

#include <optional>
#include <string>

#include "qring/io.hpp"
#include "qring/window.hpp"

namespace qring {

/// Document builders shared by every front end (CLI, python bindings). Each
/// returns the full JSON document for one command; "ok" carries the verdict
/// that decides the process exit code. Identical inputs produce byte-identical
/// documents regardless of worker count.

/// Exit code for an error escaping a command: 2 for input/usage problems
/// (parse, structural, invalid_window, lookup, limit), 1 otherwise.
int exit_code_for(errc code);

/// Window override formats: "all", "int:<lo>:<hi>",
/// "poly:<max_degree>:<c1>,<c2>,...".
Window parse_window_spec(const Ring& ring, const std::string& spec);

/// A structure plus its resolved scan window. Resolution order: explicit
/// override spec, then the structure's own window, then the whole ring when
/// finite; infinite rings without a window are an invalid_window error.
struct Input {
  Structure structure;
  Window window;
  ordered_json echo; // input origin fields echoed into the documents
};

/// Exactly one of `file` / `builtin_name` must be nonempty.
Input resolve_input(const std::string& file, const std::string& builtin_name,
                    const std::string& window_spec);

/// Same resolution for an already-parsed structure (bindings feed documents
/// directly instead of via files).
Input resolve_structure(Structure structure, const std::string& window_spec,
                        ordered_json echo = ordered_json::object());

/// Axioms, support primality, lemma suite, backend-specific axiom families,
/// and the support set. ok = every report clean.
ordered_json check_document(const Input& in);

/// Dichotomy verdict, witnessing structure and round-trip comparison.
/// ok = round trip succeeded.
ordered_json classify_document(const Input& in);

/// Fraction-field extension checks with sample comparisons.
/// ok = all fraction checks clean.
ordered_json quotfield_document(const Input& in);

/// check_document plus the dedicated counterexample report; ok is always
/// false (the input defeats QR5 by construction).
ordered_json counterexample_document(const Input& in);

/// Every quasi-order on zmod:<n>: matrix, support, classification, and the
/// cross-check when the enumeration was exhaustive.
ordered_json enumerate_document(const std::string& ring_spec, std::size_t max_n);

} // namespace qring
