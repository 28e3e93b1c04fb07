#include "bifib/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bifib {

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void Report::sort_by_name() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

bool Report::passed() const { return failure_count() == 0; }

std::size_t Report::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

void IdentityTally::record(bool ok, const std::string& where) {
  ++checked_;
  if (!ok) failures_.push_back(where);
}

CheckResult IdentityTally::finish(double seconds) const {
  CheckResult r{name_, failures_.empty(), {}, seconds};
  std::ostringstream d;
  if (failures_.empty()) {
    d << "holds for " << range_ << " (" << checked_ << " cases)";
  } else {
    d << failures_.size() << " of " << checked_ << " cases fail; first at";
    for (std::size_t i = 0; i < std::min<std::size_t>(failures_.size(), 5); ++i) d << " " << failures_[i];
  }
  r.detail = d.str();
  return r;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (const auto& c : report.checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  out << (report.passed() ? "OK" : "FAILED") << " " << report.checks().size() - report.failure_count() << "/"
      << report.checks().size() << " checks passed\n";
  return out.str();
}

std::string to_json(const Report& report, bool with_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks()) {
    nlohmann::json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}};
    if (with_timing) j["nongolden_seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  nlohmann::json doc{{"schema", 1},
                     {"passed", report.passed()},
                     {"failures", report.failure_count()},
                     {"checks", std::move(checks)}};
  return doc.dump(2);
}

}  // namespace bifib
