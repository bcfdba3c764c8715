#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace altnf {

/// Outcome of one verification check. Serializes to a JSON object with the
/// stable keys {check, n, passed, counterexample?, stats}; census reports
/// additionally carry one representative tuple per orbit.
struct VerificationReport {
  std::string check;
  int n = 0;
  bool passed = false;

  /// Present (non-empty) exactly when passed == false.
  std::map<std::string, std::string> counterexample;

  /// Instance counts, timings, orders and similar counters.
  std::map<std::string, std::int64_t> stats;

  /// Census only: each entry is one generating tuple, cycle-form strings.
  std::vector<std::vector<std::string>> representatives;
};

std::string to_json(const VerificationReport &report);

/// One "PASS name n=... k=v ..." line; failures append a counterexample
/// line, census reports append one line per representative.
std::string to_text(const VerificationReport &report);

} // namespace altnf
