#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace abideal {

/// Outcome of a verification sweep: how many assertions ran and which failed.
struct Report {
  static constexpr std::size_t kStoredViolations = 50;

  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> violations;  // first kStoredViolations messages

  explicit Report(std::string n = {}) : name(std::move(n)) {}

  // The message is only built when the check fails.
  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (violations.size() < kStoredViolations) violations.push_back(describe());
    }
    return ok;
  }
  bool check(bool ok, const char* message) {
    return check(ok, [message] { return std::string(message); });
  }

  bool passed() const { return failures == 0; }
  void merge(const Report& other);
  /// "SUITE <name>: pass (<checks> checks)"
  std::string summary() const;
};

}  // namespace abideal
