#pragma once

// The ten acceptance criteria, run deterministically from a seed and a
// solver tolerance. Rows carry no timings so repeated runs are byte-identical.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "advkit/advsdp.hpp"
#include "advkit/compose.hpp"

namespace advkit {

/// `budget` marks a solver that ran out of iterations, as opposed to a
/// mathematical counterexample (`fail`).
enum class CriterionStatus { pass, fail, budget, error };
const char* status_name(CriterionStatus s);

struct CriterionRow {
  int id = 0;
  std::string name;
  /// The statement the criterion reproduces.
  std::string anchor;
  double computed = 0.0;
  double expected = 0.0;
  double margin = 0.0;
  CriterionStatus status = CriterionStatus::error;
  std::string detail;

  bool pass() const noexcept { return status == CriterionStatus::pass; }
};

struct ReportOptions {
  double tol = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  /// Criterion ids to run; empty runs all ten.
  std::vector<int> criteria;
};

inline constexpr int kCriterionCount = 10;

CriterionRow run_criterion(int id, const ReportOptions& options);
std::vector<CriterionRow> reproduction_report(const ReportOptions& options);

/// criterion,name,anchor,computed,expected,margin,status,detail
void write_report_csv(std::ostream& out, const std::vector<CriterionRow>& rows);
void write_report_text(std::ostream& out, const std::vector<CriterionRow>& rows);

}  // namespace advkit
