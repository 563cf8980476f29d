#include "advkit/check_report.hpp"

#include <algorithm>
#include <ostream>

#include "advkit/csv.hpp"

namespace advkit {

void CheckReport::add(std::string id, double lhs, double rhs, std::string detail) {
  rows.push_back({std::move(id), lhs, rhs, lhs <= rhs, std::nullopt, std::move(detail)});
}

void CheckReport::add_exact(std::string id, bool ok, std::string detail) {
  rows.push_back({std::move(id), ok ? 0.0 : 1.0, 0.0, ok, std::nullopt, std::move(detail)});
}

bool CheckReport::all_pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

std::size_t CheckReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

void CheckReport::append(const CheckReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

void CheckReport::write_csv(std::ostream& out) const {
  out << "instance_id,lhs,rhs,margin,pass\n";
  for (const auto& r : rows) {
    out << r.instance_id << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
        << format_number(r.margin()) << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

void CheckReport::write_query_csv(std::ostream& out) const {
  out << "instance_id,lhs,rhs,pass,queries\n";
  for (const auto& r : rows) {
    out << r.instance_id << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
        << (r.pass ? 1 : 0) << ',';
    if (r.queries) out << *r.queries;
    out << '\n';
  }
}

}  // namespace advkit
