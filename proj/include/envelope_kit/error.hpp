#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace envkit {

enum class ErrorKind {
  kCycleDetected,
  kDuplicateLabel,
  kUnknownLabel,
  kNotComparable,
  kNoTop,
  kNotALattice,
  kJoinMissing,
  kStrongConditionFails,
  kIntervalNotDistributive,
  kNoLowerBound,
  kNotMeetIrreducible,
  kIsTop,
  kNotMinimal,
  kFlagsNotVerified,
  kNotAValuation,
  kNotWellDefined,
  kPairingFailure,
  kSizeCap,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind plus a rendered message
// such as "IntervalNotDistributive(0,1)".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace envkit
