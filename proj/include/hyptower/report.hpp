#pragma once

#include <string>
#include <vector>

namespace hyptower {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Ordered list of named checks plus a final verdict.  The overall outcome is
// the conjunction of the checks; a structural failure stops the run early,
// so later semantic checks simply do not appear.
struct VerificationReport {
  std::vector<CheckResult> checks;
  std::string verdict;

  void add(std::string name, bool passed, std::string detail = "");
  bool ok() const;
};

std::string to_text(const VerificationReport& r);
// Line-delimited records, one JSON object per check plus one for the verdict.
std::string to_records(const VerificationReport& r);

}  // namespace hyptower
