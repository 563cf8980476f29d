#pragma once

// Small dense semidefinite programs in standard form
//
//     minimize ⟨C, X⟩  subject to  ⟨A_i, X⟩ = b_i,  X ⪰ 0
//     maximize bᵀy     subject to  Σ y_i A_i + Z = C,  Z ⪰ 0
//
// with X, Z block diagonal. Dense blocks are full symmetric matrices;
// diagonal blocks are nonnegative vectors (LP variables). Solved by an
// infeasible primal-dual path-following method using the HKM search
// direction with a Mehrotra predictor-corrector step.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace advkit::sdp {

enum class BlockKind { Dense, Diagonal };

struct BlockSpec {
  BlockKind kind;
  Eigen::Index size;
};

/// One entry of a symmetric sparse matrix: value at (row, col) and (col, row).
/// Entries in a diagonal block must have row == col.
struct Entry {
  std::size_t block;
  Eigen::Index row;
  Eigen::Index col;
  double value;
};

struct Problem {
  std::vector<BlockSpec> blocks;
  std::vector<Entry> objective;
  std::vector<std::vector<Entry>> constraints;
  std::vector<double> rhs;
};

/// Block variable. Dense blocks are size×size; diagonal blocks size×1.
struct BlockVar {
  std::vector<Eigen::MatrixXd> blocks;
};

struct Options {
  /// Relative gap and relative infeasibility target.
  double tolerance = 1e-8;
  std::size_t max_iterations = 100000;
};

struct Result {
  BlockVar x;
  BlockVar z;
  Eigen::VectorXd y;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double relative_gap = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  std::size_t iterations = 0;
};

/// Throws SolverBudgetExceeded (carrying [dual, primal] objectives) when the
/// iteration budget runs out or progress stalls before `tolerance` is met.
Result solve(const Problem& problem, const Options& options = {});

/// ⟨A_i, X⟩ for constraint entries `a` against block variable `x`.
double apply(const std::vector<Entry>& a, const BlockVar& x);

}  // namespace advkit::sdp
