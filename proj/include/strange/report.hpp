#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace strange {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A list of named pass/fail checks. Verification never throws on a failed
/// identity; it records it here.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
  bool ok() const { return failures() == 0; }
};

}  // namespace strange
