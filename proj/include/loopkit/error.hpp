#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loopkit {

/// Domain error with a machine-readable kind tag. Front ends render these as
/// `ERROR <kind>: <message>`; `witness()` carries the offending elements when
/// the failure has one (e.g. the pair breaking an autotopism equation).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  Error(std::string kind, const std::string& message, std::vector<unsigned> witness)
      : std::runtime_error(message), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<unsigned>& witness() const noexcept { return witness_; }

private:
  std::string kind_;
  std::vector<unsigned> witness_;
};

/// Raised when a computation contradicts a result this library exists to
/// uphold. A distinct type so harnesses cannot accidentally swallow it as an
/// ordinary domain error.
class TheoremViolation : public Error {
public:
  explicit TheoremViolation(const std::string& message)
      : Error("theorem-violation", message) {}
};

/// Cycle-notation parse failure; `position()` is the 0-based byte offset of
/// the offending character or token.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse", message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace loopkit
