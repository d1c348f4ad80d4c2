#pragma once

// The eight acceptance criteria as runnable checks. Each criterion reports
// exact pass/fail plus a JSON detail block; wall time is measured separately
// and never enters the detail so that reports stay byte-identical.

#include "agslice/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace agslice::acceptance {

struct Config {
  std::uint64_t seed = 0;
  /// Upper rank for the orbit/ideal sweep (criterion 3) and the
  /// highest-weight sweep (criterion 4).
  int n_max = 4;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  json_io::json detail;
  bool within_budget() const { return seconds <= budget_seconds; }
  bool pass() const { return checks_pass && within_budget(); }
};

/// Runtime budgets in seconds, indexed by criterion id (1..8).
double budget(int id);

/// Criteria 1..7; throws std::invalid_argument for other ids.
CriterionResult run_criterion(int id, const Config& cfg);

/// All eight in order. Criterion 8 reruns 1..7 and compares the reports.
std::vector<CriterionResult> run_all(const Config& cfg);

/// Versioned report without timings.
json_io::json report(const std::vector<CriterionResult>& results, const Config& cfg);

/// "PASS [3] title" or "FAIL [3] title (reason)".
std::string status_line(const CriterionResult& r);

}  // namespace agslice::acceptance
