#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace advkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A violated precondition on arguments (shape mismatch, bad parameter, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// |D|·n over the desk-scale cap for the SDP module.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Some pair (x, y) has a nonzero target entry but every filter masks it off.
class InfeasibleProgram : public Error {
 public:
  InfeasibleProgram(std::size_t row, std::size_t col, const std::string& what);
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// The solver ran out of iterations (or stalled) before reaching the requested
/// tolerance. Carries the best primal/dual bracket seen.
class SolverBudgetExceeded : public Error {
 public:
  SolverBudgetExceeded(double lower, double upper, std::size_t iterations,
                       const std::string& what);
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  std::size_t iterations_;
};

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

/// An adversary matrix or vector solution that does not satisfy its contract.
class InvalidCertificate : public Error {
 public:
  InvalidCertificate(std::vector<MatrixEntry> offending, const std::string& what);
  const std::vector<MatrixEntry>& offending() const noexcept { return offending_; }

 private:
  std::vector<MatrixEntry> offending_;
};

/// Recurrence shapes the symbolic engine does not handle.
class UnsupportedForm : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// A comparison oracle answered with a row marked impossible in the removal tables.
class ImpossibleOracleAnswer : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was observed to fail. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace advkit
