#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace advkit {

/// A matrix with row and column labels. CSV layout: a header row
/// `,<col labels...>` followed by one `<row label>,<values...>` line per row.
struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Eigen::MatrixXd values;
};

void write_matrix_csv(std::ostream& out, const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels, const Eigen::MatrixXd& m);
std::string matrix_to_csv(const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, const Eigen::MatrixXd& m);

LabeledMatrix read_matrix_csv(std::string_view text);
LabeledMatrix read_matrix_csv_file(const std::filesystem::path& path);

/// `%.12g`, the fixed precision for human-facing numeric output.
std::string format_number(double v);

}  // namespace advkit
