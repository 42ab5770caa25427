#include "hartogs/error.hpp"

namespace hartogs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
  }
  return "Unknown";
}

}  // namespace hartogs
