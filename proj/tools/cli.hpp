#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "coverinv/error.hpp"
#include "coverinv/fingerprint.hpp"
#include "coverinv/invariants.hpp"

namespace coverinv::cli {

enum class Format { Json, Dot, Text };

struct RunConfig {
  std::string command;
  std::string input;
  std::string input_b;
  std::optional<std::size_t> n;
  std::optional<std::pair<std::size_t, std::size_t>> n_range;
  Level level = Level::Graph;
  Caps caps;
  std::optional<Format> format;  // unset: dot for `graph`, json otherwise
  std::string out;               // empty: write to the `out` stream
  bool replay = false;           // certify: check an existing certificate

  /// Throws InvalidArgument on an unknown command or a non-positive cap.
  void validate() const;
};

/// Exit codes. Every library error kind maps to its own code.
enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kNegative = 2,  // compare found a difference, certify found nothing
  kParseError = 3,
  kCapExceeded = 4,
  kNotACover = 5,
  kNotAHomeomorphism = 6,
  kInvalidTopology = 7,
  kNotAcyclic = 8,
  kLevelMismatch = 9,
  kNotExhaustible = 10,
  kInvalidSpec = 11,
  kInvalidArgument = 12,
};

int exit_code(ErrorKind kind) noexcept;

Format parse_format(const std::string& text);

/// "4" or "2..5".
std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text);

/// Applies COVERINV_CAP_COVER / COVERINV_CAP_VERTICES when set.
void apply_env_caps(Caps& caps);

/// Runs one command. Results go to `config.out` when set, otherwise to `out`;
/// errors are written to `out` as a JSON error object.
int run(const RunConfig& config, std::ostream& out);

}  // namespace coverinv::cli
