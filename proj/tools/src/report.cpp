#include "measuringkit_cli/report.hpp"

#include <json.hpp>

namespace measuringkit::cli {

void Report::add(std::string check, bool passed, std::string witness) {
  entries_.push_back(ReportEntry{std::move(check), passed, passed ? std::string{} : std::move(witness)});
}

void Report::merge(const LawReport& r, const std::string& prefix) {
  for (const auto& c : r.results()) add(prefix + c.check, c.passed, c.witness);
}

bool Report::ok() const {
  for (const auto& e : entries_)
    if (!e.passed) return false;
  return true;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.passed ? "PASS " : "FAIL ";
    out += e.check;
    if (!e.passed && !e.witness.empty()) out += ": " + e.witness;
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j = {{"check", e.check}, {"status", e.passed ? "pass" : "fail"}};
    if (!e.passed) j["witness"] = e.witness;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace measuringkit::cli
