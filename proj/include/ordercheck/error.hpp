#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordercheck {

enum class ErrorCode {
  kEmpty,
  kNotSorted,
  kNonZeroSum,
  kNegativeEntry,
  kNegativeThreshold,
  kMalformedRepresentation,
  kNonConvexSample,
  kInvalidAtom,
  kInexactFunction,
  kLengthMismatch,
  kProductNotOne,
  kNonPositiveEntry,
  kBudgetExceeded,
  kEvaluationFailure,
  kNotMonotone,
  kParse,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Bad caller input. The CLI maps these to exit status 2.
class InputError : public std::runtime_error {
 public:
  InputError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when two independent routes to the same quantity disagree, or a
/// proof step that must hold by construction does not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ordercheck
