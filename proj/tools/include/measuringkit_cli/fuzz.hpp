#pragma once

// Seeded property fuzzing over random and curated structures.
//
// Case i runs property i mod P on structures drawn from a generator seeded
// by (seed, i), so a report depends only on the configuration, not on the
// number of worker threads. A failing case is shrunk by rerunning its
// property at smaller dimension bounds.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "measuringkit/report.hpp"
#include "measuringkit/scalar.hpp"
#include "measuringkit_cli/report.hpp"

namespace measuringkit::cli {

struct FuzzConfig {
  Field field = Field::prime(2);
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  std::size_t dim_max = 2;
  /// Empty, or one of fuzz_faults(): corrupts the named computation.
  std::string fault;
  bool shrink = true;
  unsigned jobs = 1;
};

struct FuzzProperty {
  std::string name;
  std::vector<std::string> operations;  // library operations exercised
  std::function<LawReport(const Field&, std::size_t dim_max, std::mt19937_64&, const std::string& fault)> run;
};

const std::vector<FuzzProperty>& fuzz_properties();
/// Faults understood by --inject, each aimed at one property.
const std::vector<std::string>& fuzz_faults();

struct FuzzCase {
  std::size_t index = 0;
  std::string property;
  std::uint64_t seed = 0;
  enum class Status { pass, fail, skip } status = Status::pass;
  std::string witness;
  std::size_t shrunk_dim = 0;  // smallest failing dimension bound found
  std::size_t checks = 0;      // law checks the case ran
  std::uint64_t digest = 0;    // hash of the check names and witnesses
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<FuzzCase> cases;
  std::size_t count(FuzzCase::Status s) const;
  /// One entry per property, with a digest of every case's checks and the
  /// first (shrunk) failure as witness.
  Report to_report() const;
};

/// Throws std::invalid_argument on an unknown fault or dim_max == 0.
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace measuringkit::cli
