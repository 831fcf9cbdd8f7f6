#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace collabnet {

enum class ErrorCode {
  MalformedRow,
  UnknownCategory,
  ConflictingMapping,
  MalformedLine,
  UnknownInstitution,
  UnknownSubject,
  SubjectsUnavailable,
  DegenerateComponent,
  InsufficientTail,
  DegenerateSequence,
  EmptyNetwork,
  NoConvergence,
  InvalidConfig,
  IoError,
  UsageError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this type. The code is the
/// stable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace collabnet
