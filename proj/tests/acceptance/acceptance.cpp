// Runs every acceptance criterion at its stated tolerance and wall-clock
// limit, printing one PASS/FAIL line each. Exit status is the failure count.

#include <chrono>
#include <cstdio>
#include <optional>

#include "advkit/report.hpp"

namespace {

// Seconds; criteria without a limit have none.
std::optional<double> time_limit(int id) {
  switch (id) {
    case 1: return 60.0;
    case 2: return 600.0;
    case 5: return 1.0;
    case 6: return 900.0;
    case 7: return 600.0;
    case 9: return 300.0;
    default: return std::nullopt;
  }
}

}  // namespace

int main() {
  advkit::ReportOptions options;
  int failures = 0;
  for (int id = 1; id <= advkit::kCriterionCount; ++id) {
    auto start = std::chrono::steady_clock::now();
    advkit::CriterionRow row = advkit::run_criterion(id, options);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto limit = time_limit(id);
    bool in_time = !limit || seconds <= *limit;
    bool ok = row.pass() && in_time;
    if (!ok) ++failures;
    std::printf("criterion %2d %-22s %s  status=%s computed=%.12g expected=%.12g margin=%.12g time=%.2fs%s  %s\n", id,
                row.name.c_str(), ok ? "PASS" : "FAIL", advkit::status_name(row.status), row.computed, row.expected,
                row.margin, seconds, in_time ? "" : " (over limit)", row.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", advkit::kCriterionCount - failures, advkit::kCriterionCount);
  return failures;
}
