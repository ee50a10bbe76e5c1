#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qring/classify.hpp"
#include "qring/relation.hpp"
#include "qring/report.hpp"
#include "qring/ring.hpp"
#include "qring/window.hpp"

namespace qring {

using ordered_json = nlohmann::ordered_json;

/// A parsed structure file: one ring, one relation on it, an optional window.
struct Structure {
  Ring ring;
  QuasiOrder relation;
  std::optional<Window> window;
};

/// Accepted document shape (unknown keys are rejected everywhere):
///   ring:     {"kind":"integers"} | {"kind":"modular","n":12}
///             | {"kind":"polynomial","vars":["X","Y"]}
///             | {"kind":"table","add":[[...]],"mul":[[...]]}
///   relation: {"kind":"matrix","rows":[[...]]}
///             | {"kind":"valuation","valuation":{...}}
///             | {"kind":"order","order":{...}}
///             | {"kind":"trivial_at_prime","generators":[...]}
///             | {"kind":"counterexample_sec3"}
///   window:   {"kind":"interval","lo":-20,"hi":20}
///             | {"kind":"poly","max_degree":3,"coeffs":[-2,-1,1,2]}
///             | {"kind":"all"}   (finite rings only; optional there)
/// valuation: {"kind":"padic","p":2} | {"kind":"monomial","weights":{"X":[1,0]}}
///            | {"kind":"trivial","generators":[3]} | {"kind":"table","values":[...]}
/// order:     {"kind":"standard"} | {"kind":"poly_at_infinity","precedence":["X"]}
///            | {"kind":"cone","elements":[...]}
/// Elements are JSON integers on scalar backends; on polynomial rings they
/// are term lists [[coeff, [exponents...]], ...] with integer coefficients.
Structure parse_structure(const ordered_json& doc);
Structure load_structure_file(const std::string& path);

/// Element rendering for reports: tuple elements on non-product rings are
/// fraction witnesses and print as num/den.
std::string render_element(const Ring& ring, const Element& e);

/// Elements serialize as integers on scalar backends, strings elsewhere.
ordered_json element_to_json(const Ring& ring, const Element& e);

ordered_json report_to_json(const Report& report, const Ring& ring);
ordered_json support_to_json(const SupportSet& support, const Ring& ring);

/// {"branch":"valued","group":{"kind":...},"support":[...],"map":[[elem,k],...]}
/// where k is the index of the element's value class, classes listed in
/// ascending value order over the window, support elements excluded; or
/// {"branch":"ordered","cone_window":[...],"support":[...]}.
ordered_json classification_to_json(const Classification& cls, const Ring& ring);

} // namespace qring
