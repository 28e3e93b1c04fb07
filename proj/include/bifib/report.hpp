#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bifib {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Wall time; informational only, never part of golden output.
  double seconds = 0.0;
};

/// Ordered collection of verification outcomes. Failures are recorded here,
/// never raised.
class Report {
 public:
  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void merge(const Report& other);
  /// Orders checks by name so output does not depend on completion order.
  void sort_by_name();

  bool passed() const;
  std::size_t failure_count() const;
  const std::vector<CheckResult>& checks() const { return checks_; }

 private:
  std::vector<CheckResult> checks_;
};

/// Collects failing indices for one identity and turns them into a CheckResult.
class IdentityTally {
 public:
  IdentityTally(std::string name, std::string range) : name_(std::move(name)), range_(std::move(range)) {}

  void record(bool ok, const std::string& where);
  CheckResult finish(double seconds = 0.0) const;

 private:
  std::string name_;
  std::string range_;
  std::size_t checked_ = 0;
  std::vector<std::string> failures_;
};

std::string to_text(const Report& report);
std::string to_json(const Report& report, bool with_timing);

}  // namespace bifib
