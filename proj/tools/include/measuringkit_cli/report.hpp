#pragma once

// Command reports: one entry per check, rendered for people and as the
// machine-readable list [{check, status, witness?}].

#include <string>
#include <vector>

#include "measuringkit/report.hpp"

namespace measuringkit::cli {

struct ReportEntry {
  std::string check;
  bool passed = true;
  std::string witness;
};

class Report {
 public:
  void add(std::string check, bool passed, std::string witness = {});
  void merge(const LawReport& r, const std::string& prefix = {});
  bool ok() const;
  const std::vector<ReportEntry>& entries() const { return entries_; }
  /// "PASS <check>" / "FAIL <check>: <witness>" lines.
  std::string to_text() const;
  /// Two-space indented JSON array with a trailing newline.
  std::string to_json() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace measuringkit::cli
