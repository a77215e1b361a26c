#include "abideal/report.hpp"

namespace abideal {

void Report::merge(const Report& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& v : other.violations) {
    if (violations.size() >= kStoredViolations) break;
    violations.push_back(other.name.empty() ? v : other.name + ": " + v);
  }
}

std::string Report::summary() const {
  return "SUITE " + name + ": " + (passed() ? "pass" : "FAIL") + " (" + std::to_string(checks) + " checks)";
}

}  // namespace abideal
