#include "advkit/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "advkit/errors.hpp"

namespace advkit {

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_matrix_csv(std::ostream& out, const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels, const Eigen::MatrixXd& m) {
  if (static_cast<Eigen::Index>(row_labels.size()) != m.rows() ||
      static_cast<Eigen::Index>(col_labels.size()) != m.cols()) {
    throw InvalidArgument("label count does not match matrix shape");
  }
  for (const auto& c : col_labels) out << ',' << c;
  out << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << row_labels[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << ',' << full_precision(m(r, c));
    out << '\n';
  }
}

std::string matrix_to_csv(const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, const Eigen::MatrixXd& m) {
  std::ostringstream out;
  write_matrix_csv(out, row_labels, col_labels, m);
  return out.str();
}

LabeledMatrix read_matrix_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  LabeledMatrix result;
  std::vector<std::vector<double>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_commas(line);
    if (header) {
      if (cells.size() < 2) throw ParseError(line_no, "CSV header needs at least one column label");
      result.col_labels.assign(cells.begin() + 1, cells.end());
      header = false;
      continue;
    }
    if (cells.size() != result.col_labels.size() + 1) {
      throw ParseError(line_no, "row has " + std::to_string(cells.size() - 1) + " values, expected " +
                                    std::to_string(result.col_labels.size()));
    }
    result.row_labels.push_back(cells[0]);
    std::vector<double> values;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      try {
        std::size_t pos = 0;
        values.push_back(std::stod(cells[i], &pos));
        if (pos != cells[i].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "not a number: '" + cells[i] + "'");
      }
    }
    rows.push_back(std::move(values));
  }
  if (header) throw ParseError(0, "empty CSV");
  result.values.resize(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(result.col_labels.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      result.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return result;
}

LabeledMatrix read_matrix_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open CSV file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_matrix_csv(buf.str());
}

}  // namespace advkit
