#pragma once

#include <string>
#include <vector>

#include "qring/element.hpp"

namespace qring {

/// pass: exhaustive over a finite universe. pass_on_window: no violation
/// among the scanned window tuples. fail: witness found. skipped: check not
/// applicable to this backend (noted).
enum class CheckStatus { pass, pass_on_window, fail, skipped };

inline const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::pass_on_window: return "pass-on-window";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<Element> witness;  // fail only, when a witness tuple exists
  std::string note;
};

struct Report {
  std::string subject;
  std::string window;
  bool exhaustive = false;
  std::vector<CheckItem> items;

  void add(std::string name, CheckStatus status, std::vector<Element> witness = {},
           std::string note = {}) {
    items.push_back({std::move(name), status, std::move(witness), std::move(note)});
  }

  bool ok() const {
    for (const auto& it : items)
      if (it.status == CheckStatus::fail) return false;
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
};

} // namespace qring
