#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace measuringkit {

struct CheckResult {
  std::string check;
  bool passed = true;
  std::string witness;  // empty when passed
};

/// Outcome of a law check: one entry per diagram, with a basis witness for
/// every failure.
class LawReport {
 public:
  void pass(std::string check);
  void fail(std::string check, std::string witness);
  void add(std::string check, bool passed, std::string witness = {});
  /// Appends other's results, prefixing their check names.
  void merge(const LawReport& other, const std::string& prefix = {});

  bool ok() const;
  const std::vector<CheckResult>& results() const { return results_; }
  const CheckResult* first_failure() const;
  /// "ok" or "<check>: <witness>" for the first failure.
  std::string summary() const;

 private:
  std::vector<CheckResult> results_;
};

/// Thrown when a structure is constructed from data violating its laws.
class LawViolation : public std::runtime_error {
 public:
  LawViolation(std::string what, LawReport report);
  const LawReport& report() const { return report_; }

 private:
  LawReport report_;
};

}  // namespace measuringkit
