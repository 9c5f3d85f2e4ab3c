#include "slq/report.hpp"

#include <algorithm>

namespace slq {

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::pass(std::string name, std::string range, std::optional<std::string> note) {
  checks_.push_back({std::move(name), std::move(range), true, std::nullopt, std::move(note)});
}

void VerificationReport::fail(std::string name, std::string range, std::string counterexample) {
  if (counterexample.empty()) counterexample = "(no description)";
  checks_.push_back({std::move(name), std::move(range), false, std::move(counterexample), std::nullopt});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void CheckAccumulator::commit(VerificationReport& report) const {
  std::string range = range_ + " (" + std::to_string(cases_) + " cases)";
  if (counterexample_) {
    report.fail(name_, std::move(range), *counterexample_);
  } else {
    report.pass(name_, std::move(range), note_);
  }
}

}  // namespace slq
