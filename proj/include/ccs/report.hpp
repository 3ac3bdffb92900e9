#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccs {

/// One named pass/fail entry of a verification report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of checks. Verification routines return these instead of
/// throwing so callers can assert on the specific axiom that failed.
class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  /// Appends the checks of `other`, named "prefix.name" (no extra dot when
  /// the prefix already ends in one).
  void merge(const Report& other, std::string_view prefix = {});

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(std::string_view name) const;
  bool passed(std::string_view name) const;

  /// First failing check, formatted for diagnostics; empty when ok().
  std::string first_failure() const;

 private:
  std::vector<Check> checks_;
};

/// Raised when a backtracking search exhausts its node budget.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccs
