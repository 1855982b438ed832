#include "coverinv/error.hpp"

namespace coverinv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingEmpty: return "MissingEmpty";
    case ErrorKind::MissingWhole: return "MissingWhole";
    case ErrorKind::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorKind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::NotAHomeomorphism: return "NotAHomeomorphism";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::EmptyMember: return "EmptyMember";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotExhaustible: return "NotExhaustible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, nlohmann::json detail)
    : std::runtime_error(std::move(message)), kind_(kind), detail_(std::move(detail)) {}

nlohmann::json Error::to_json() const {
  return {{"error", {{"kind", std::string(to_string(kind_))}, {"message", what()}, {"detail", detail_}}}};
}

void throw_cap_exceeded(std::string_view what, std::size_t value, std::size_t cap) {
  throw Error(ErrorKind::CapExceeded,
              std::string(what) + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap),
              {{"what", std::string(what)}, {"value", value}, {"cap", cap}});
}

}  // namespace coverinv
