#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slq {

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::optional<std::string> counterexample;  // always set when !passed
  std::optional<std::string> note;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;

  void pass(std::string name, std::string range, std::optional<std::string> note = std::nullopt);
  void fail(std::string name, std::string range, std::string counterexample);
  void merge(const VerificationReport& other);

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

/// Runs a family of cases under a single report entry; the first failing
/// case's description becomes the counterexample.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string name, std::string range)
      : name_(std::move(name)), range_(std::move(range)) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && !counterexample_) counterexample_ = describe();
  }

  bool ok() const { return !counterexample_; }
  std::size_t cases() const { return cases_; }
  void note(std::string text) { note_ = std::move(text); }
  void commit(VerificationReport& report) const;

 private:
  std::string name_;
  std::string range_;
  std::size_t cases_ = 0;
  std::optional<std::string> counterexample_;
  std::optional<std::string> note_;
};

}  // namespace slq
