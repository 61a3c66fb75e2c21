#pragma once

#include <string>
#include <vector>

namespace envkit {

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string to_string(CheckStatus status);

// Outcome of one machine-checked statement on one instance. `witness`
// names a counterexample on failure, `note` carries observations.
struct VerificationItem {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string witness;
  std::string note;
  double seconds = 0.0;

  bool passed() const noexcept { return status != CheckStatus::kFail; }

  void fail(std::string why) {
    if (status == CheckStatus::kFail) return;  // keep the first witness
    status = CheckStatus::kFail;
    witness = std::move(why);
  }
};

inline VerificationItem make_item(std::string name) {
  VerificationItem item;
  item.name = std::move(name);
  return item;
}

}  // namespace envkit
