#pragma once

#include <stdexcept>
#include <string>

namespace tgp {

/// Malformed textual input (partitions, rationals, words).
struct parse_error : std::invalid_argument {
  explicit parse_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A documented precondition of an operation was violated by the caller.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An exact identity that must hold by theorem failed; signals a bug
/// in the computation pipeline, not bad input.
struct integrity_error : std::logic_error {
  explicit integrity_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace tgp
