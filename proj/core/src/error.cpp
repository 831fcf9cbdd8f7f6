#include "collabnet/error.hpp"

namespace collabnet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::ConflictingMapping: return "ConflictingMapping";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::UnknownInstitution: return "UnknownInstitution";
    case ErrorCode::UnknownSubject: return "UnknownSubject";
    case ErrorCode::SubjectsUnavailable: return "SubjectsUnavailable";
    case ErrorCode::DegenerateComponent: return "DegenerateComponent";
    case ErrorCode::InsufficientTail: return "InsufficientTail";
    case ErrorCode::DegenerateSequence: return "DegenerateSequence";
    case ErrorCode::EmptyNetwork: return "EmptyNetwork";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace collabnet
