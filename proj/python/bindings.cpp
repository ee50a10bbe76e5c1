// Python face of the toolkit: the same JSON documents the CLI prints,
// returned as strings (the qring package parses them into dicts). Input
// errors raise ValueError, semantic/internal errors raise RuntimeError.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "qring/commands.hpp"
#include "qring/errors.hpp"
#include "qring/gallery.hpp"

namespace py = pybind11;

namespace {

qring::Input input_from(const std::string& file, const std::string& builtin_name,
                        const std::string& text, const std::string& window) {
  if (!text.empty()) {
    if (!file.empty() || !builtin_name.empty())
      qring::fail(qring::errc::parse, "give structure text, a file or a builtin, not several");
    qring::ordered_json doc;
    try {
      doc = qring::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      qring::fail(qring::errc::parse, std::string("structure text: ") + e.what());
    }
    qring::ordered_json echo = qring::ordered_json::object();
    echo["text"] = true;
    return qring::resolve_structure(qring::parse_structure(doc), window, std::move(echo));
  }
  return qring::resolve_input(file, builtin_name, window);
}

std::string check_json(const std::string& file, const std::string& builtin_name,
                       const std::string& text, const std::string& window) {
  return qring::check_document(input_from(file, builtin_name, text, window)).dump();
}

std::string classify_json(const std::string& file, const std::string& builtin_name,
                          const std::string& text, const std::string& window) {
  return qring::classify_document(input_from(file, builtin_name, text, window)).dump();
}

std::string quotfield_json(const std::string& file, const std::string& builtin_name,
                           const std::string& text, const std::string& window) {
  return qring::quotfield_document(input_from(file, builtin_name, text, window)).dump();
}

std::string counterexample_json(const std::string& builtin_name, const std::string& window) {
  return qring::counterexample_document(
             qring::resolve_input("", builtin_name.empty() ? "sec3" : builtin_name, window))
      .dump();
}

std::string enumerate_json(qring::i64 n, std::size_t max_n) {
  return qring::enumerate_document("zmod:" + std::to_string(n), max_n).dump();
}

} // namespace

PYBIND11_MODULE(_qring, m) {
  m.doc() = "axiom checking and ordered/valued classification for quasi-ordered "
            "commutative rings";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qring::error& e) {
      if (qring::exit_code_for(e.code()) == 2)
        PyErr_SetString(PyExc_ValueError, e.what());
      else
        PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("builtin_names", [] { return qring::builtin_names(); },
        "names of the builtin structures");
  m.def("check_json", &check_json, py::arg("file") = "", py::arg("builtin") = "",
        py::arg("text") = "", py::arg("window") = "",
        "axiom/lemma report document as JSON text");
  m.def("classify_json", &classify_json, py::arg("file") = "", py::arg("builtin") = "",
        py::arg("text") = "", py::arg("window") = "",
        "ordered/valued classification document as JSON text");
  m.def("quotfield_json", &quotfield_json, py::arg("file") = "", py::arg("builtin") = "",
        py::arg("text") = "", py::arg("window") = "",
        "fraction-field extension document as JSON text");
  m.def("counterexample_json", &counterexample_json, py::arg("builtin") = "",
        py::arg("window") = "", "counterexample document as JSON text");
  m.def("enumerate_json", &enumerate_json, py::arg("n"), py::arg("max_n") = 8,
        "enumeration document for Z/n as JSON text");
}
