#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace advkit {

/// One checked inequality lhs ≤ rhs (or equality recast as |a − b| ≤ slack).
struct CheckRow {
  std::string instance_id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  /// Oracle queries spent, for string sweeps.
  std::optional<std::uint64_t> queries;
  /// Free-form context for counterexamples (matrices, tables).
  std::string detail;

  double margin() const noexcept { return rhs - lhs; }
};

struct CheckReport {
  std::vector<CheckRow> rows;

  void add(std::string id, double lhs, double rhs, std::string detail = {});
  void add_exact(std::string id, bool ok, std::string detail = {});
  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
  void append(const CheckReport& other);

  /// instance_id,lhs,rhs,margin,pass
  void write_csv(std::ostream& out) const;
  /// instance_id,lhs,rhs,pass,queries
  void write_query_csv(std::ostream& out) const;
};

}  // namespace advkit
