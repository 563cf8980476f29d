#include "advkit/errors.hpp"

#include <utility>

namespace advkit {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

InfeasibleProgram::InfeasibleProgram(std::size_t row, std::size_t col, const std::string& what)
    : Error(what), row_(row), col_(col) {}

SolverBudgetExceeded::SolverBudgetExceeded(double lower, double upper, std::size_t iterations,
                                           const std::string& what)
    : Error(what), lower_(lower), upper_(upper), iterations_(iterations) {}

InvalidCertificate::InvalidCertificate(std::vector<MatrixEntry> offending, const std::string& what)
    : Error(what), offending_(std::move(offending)) {}

}  // namespace advkit
