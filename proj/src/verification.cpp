#include "envelope_kit/verification.hpp"

namespace envkit {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "n/a";
  }
  return "unknown";
}

}  // namespace envkit
