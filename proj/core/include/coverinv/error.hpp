#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace coverinv {

enum class ErrorKind {
  MissingEmpty,
  MissingWhole,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  DuplicatePoint,
  NotAHomeomorphism,
  NotACover,
  EmptyMember,
  InvalidSpec,
  CapExceeded,
  NotAcyclic,
  LevelMismatch,
  NotExhaustible,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `detail()` carries the machine-readable
/// witness (offending pair of opens, uncovered cell, cycle, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, nlohmann::json detail = nlohmann::json::object());

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

  /// `{"error":{"kind":...,"message":...,"detail":...}}`
  nlohmann::json to_json() const;

 private:
  ErrorKind kind_;
  nlohmann::json detail_;
};

[[noreturn]] void throw_cap_exceeded(std::string_view what, std::size_t value, std::size_t cap);

}  // namespace coverinv
