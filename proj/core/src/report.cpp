#include "measuringkit/report.hpp"

namespace measuringkit {

void LawReport::pass(std::string check) { results_.push_back({std::move(check), true, {}}); }

void LawReport::fail(std::string check, std::string witness) {
  results_.push_back({std::move(check), false, std::move(witness)});
}

void LawReport::add(std::string check, bool passed, std::string witness) {
  if (passed) {
    pass(std::move(check));
  } else {
    fail(std::move(check), std::move(witness));
  }
}

void LawReport::merge(const LawReport& other, const std::string& prefix) {
  for (const auto& r : other.results_) results_.push_back({prefix + r.check, r.passed, r.witness});
}

bool LawReport::ok() const { return first_failure() == nullptr; }

const CheckResult* LawReport::first_failure() const {
  for (const auto& r : results_)
    if (!r.passed) return &r;
  return nullptr;
}

std::string LawReport::summary() const {
  const CheckResult* f = first_failure();
  if (!f) return "ok";
  return f->check + ": " + f->witness;
}

LawViolation::LawViolation(std::string what, LawReport report)
    : std::runtime_error(what + " (" + report.summary() + ")"), report_(std::move(report)) {}

}  // namespace measuringkit
