#include "envelope_kit/error.hpp"

namespace envkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kNotComparable: return "NotComparable";
    case ErrorKind::kNoTop: return "NoTop";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kJoinMissing: return "JoinMissing";
    case ErrorKind::kStrongConditionFails: return "StrongConditionFails";
    case ErrorKind::kIntervalNotDistributive: return "IntervalNotDistributive";
    case ErrorKind::kNoLowerBound: return "NoLowerBound";
    case ErrorKind::kNotMeetIrreducible: return "NotMeetIrreducible";
    case ErrorKind::kIsTop: return "IsTop";
    case ErrorKind::kNotMinimal: return "NotMinimal";
    case ErrorKind::kFlagsNotVerified: return "FlagsNotVerified";
    case ErrorKind::kNotAValuation: return "NotAValuation";
    case ErrorKind::kNotWellDefined: return "NotWellDefined";
    case ErrorKind::kPairingFailure: return "PairingFailure";
    case ErrorKind::kSizeCap: return "SizeCap";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string render(ErrorKind kind, const std::string& detail) {
  std::string out(to_string(kind));
  if (!detail.empty()) {
    if (detail.front() == '(') {
      out += detail;
    } else {
      out += ": ";
      out += detail;
    }
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(render(kind, detail)), kind_(kind) {}

}  // namespace envkit
