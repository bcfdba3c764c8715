#include "altnf/report.hpp"

#include <json.hpp>

namespace altnf {

std::string to_json(const VerificationReport &report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["n"] = report.n;
  j["passed"] = report.passed;
  if (!report.counterexample.empty())
    j["counterexample"] = report.counterexample;
  j["stats"] = report.stats;
  if (!report.representatives.empty())
    j["representatives"] = report.representatives;
  return j.dump();
}

std::string to_text(const VerificationReport &report) {
  std::string line = report.passed ? "PASS " : "FAIL ";
  line += report.check + " n=" + std::to_string(report.n);
  for (const auto &[key, value] : report.stats)
    line += " " + key + "=" + std::to_string(value);
  if (!report.counterexample.empty()) {
    line += "\n  counterexample:";
    for (const auto &[key, value] : report.counterexample)
      line += " " + key + "=" + value;
  }
  for (const auto &rep : report.representatives) {
    line += "\n  representative:";
    for (const auto &g : rep)
      line += " " + g;
  }
  return line;
}

} // namespace altnf
