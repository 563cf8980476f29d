#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "advkit/csv.hpp"

namespace advkit::cli {

namespace {

std::string render(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<bool>(c) ? "1" : "0";
}

nlohmann::ordered_json to_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) {
    // Round through the 12-digit form so json agrees with the other formats.
    if (!std::isfinite(*d)) return format_number(*d);
    return std::stod(format_number(*d));
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<bool>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void emit_fields(std::ostream& out, Format format, const std::vector<Field>& fields) {
  if (format == Format::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& f : fields) j[f.key] = to_json(f.value);
    out << j.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << (i ? " " : "") << fields[i].key << '=' << render(fields[i].value);
  }
  out << '\n';
}

void emit_table(std::ostream& out, Format format, const Table& table) {
  if (format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < table.columns.size() && c < row.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_escape(table.columns[c]);
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(render(row[c]));
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table.rows) {
    auto& r = cells.emplace_back();
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      r.push_back(render(row[c]));
      width[c] = std::max(width[c], r.back().size());
    }
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) s += "  ";
      s += r[c];
      if (c + 1 < r.size()) s.append(width[c] - r[c].size(), ' ');
    }
    out << s << '\n';
  };
  line(table.columns);
  for (const auto& r : cells) line(r);
}

Table check_table(const CheckReport& report) {
  Table t{{"instance_id", "lhs", "rhs", "margin", "pass"}, {}};
  for (const auto& r : report.rows) t.rows.push_back({r.instance_id, r.lhs, r.rhs, r.margin(), r.pass});
  return t;
}

Table query_table(const CheckReport& report) {
  Table t{{"instance_id", "lhs", "rhs", "pass", "queries"}, {}};
  for (const auto& r : report.rows) {
    t.rows.push_back({r.instance_id, static_cast<std::int64_t>(r.lhs), static_cast<std::int64_t>(r.rhs), r.pass,
                      static_cast<std::int64_t>(r.queries.value_or(0))});
  }
  return t;
}

}  // namespace advkit::cli
