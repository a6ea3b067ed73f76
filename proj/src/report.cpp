#include "hyptower/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hyptower {

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << "verdict: " << r.verdict << "\n";
  return out.str();
}

std::string to_records(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    nlohmann::json j{{"record", "check"}, {"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out << j.dump() << "\n";
  }
  nlohmann::json v{{"record", "verdict"}, {"verdict", r.verdict}, {"passed", r.ok()}};
  out << v.dump() << "\n";
  return out.str();
}

}  // namespace hyptower
