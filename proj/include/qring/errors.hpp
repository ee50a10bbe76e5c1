#pragma once

#include <stdexcept>
#include <string>

namespace qring {

/// Failure categories surfaced by the library. The CLI maps `parse`,
/// `structural`, `invalid_window`, `lookup` and `limit` to usage errors
/// (exit 2) and everything else to semantic failures (exit 1).
enum class errc {
  structural,     ///< malformed value, or operand from the wrong ring
  unsupported,    ///< operation not available on this backend
  invalid_ideal,  ///< ideal closure or membership data is broken
  invalid_window, ///< window missing 0, 1 or -1, or not negation-closed
  limit,          ///< enumeration guard exceeded
  precondition,   ///< documented operation precondition violated
  inconsistency,  ///< internal contradiction; indicates a checker bug
  rejected_input, ///< relation failed the axiom gate
  overflow,       ///< exact 64-bit arithmetic left its range
  parse,          ///< malformed structure file or spec string
  lookup,         ///< unknown name (builtin registry, command)
};

class error : public std::runtime_error {
public:
  error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace qring
