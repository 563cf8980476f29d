#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "advkit/check_report.hpp"
#include "advkit/cli/dispatch.hpp"

namespace advkit::cli {

using Cell = std::variant<std::string, double, std::int64_t, bool>;

struct Field {
  std::string key;
  Cell value;
};

/// One record: `k=v k=v` for csv/text, an object for json.
void emit_fields(std::ostream& out, Format format, const std::vector<Field>& fields);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV with a header row, an aligned table, or an array of objects.
void emit_table(std::ostream& out, Format format, const Table& table);

/// instance_id,lhs,rhs,margin,pass
Table check_table(const CheckReport& report);
/// instance_id,lhs,rhs,pass,queries
Table query_table(const CheckReport& report);

}  // namespace advkit::cli
