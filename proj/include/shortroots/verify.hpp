#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "shortroots/config.hpp"
#include "shortroots/root_system.hpp"

namespace shortroots {

enum class CheckStatus { Pass, Fail, Skipped };

std::string toString(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string title;
  RootSystemSpec system;
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;       // why it failed or was skipped
  nlohmann::json details;   // values compared; failing checks carry computed and expected
  std::optional<double> elapsedMs;
};

struct VerificationReport {
  RootSystemSpec system;
  std::vector<CheckResult> checks;  // sorted by id

  bool allPassed() const;  // no failures; skipped checks do not count against
  std::size_t count(CheckStatus s) const;
};

struct CheckInfo {
  std::string id;
  std::string title;
};

// Every check id, in sorted order.
const std::vector<CheckInfo>& checkRegistry();

struct VerifyOptions {
  std::vector<std::string> only;  // empty: all checks
  Limits limits;
  bool timing = false;
};

// Runs the selected checks concurrently. Throws ValidationError for unknown ids.
VerificationReport runChecks(const RootSystem& rs, const VerifyOptions& opts);

}  // namespace shortroots
