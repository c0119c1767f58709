#include "suliciu/errors.hpp"

namespace suliciu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kNoClassicalSolution: return "NoClassicalSolution";
    case ErrorCode::kNotInDeltaRegion: return "NotInDeltaRegion";
    case ErrorCode::kDegenerateJump: return "DegenerateJump";
    case ErrorCode::kUnsolvedRegion: return "UnsolvedRegion";
    case ErrorCode::kSingularAtOrigin: return "SingularAtOrigin";
    case ErrorCode::kDomainExcludesOrigin: return "DomainExcludesOrigin";
    case ErrorCode::kVacuumProduced: return "VacuumProduced";
    case ErrorCode::kNoSpikeFound: return "NoSpikeFound";
    case ErrorCode::kUnsupportedTestFunction: return "UnsupportedTestFunction";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace suliciu
