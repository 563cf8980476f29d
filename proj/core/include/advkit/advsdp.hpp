#pragma once

// Adversary quantities and filtered γ₂ norms of small explicit functions,
// computed as semidefinite programs over the joint Gram matrix of the
// solution vectors, plus validators for primal (vector) and dual (matrix)
// certificates.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "advkit/funcore.hpp"

namespace advkit {

inline constexpr double kDefaultTolerance = 1e-4;
inline constexpr std::size_t kDefaultIterationBudget = 100000;

/// Real symmetric Γ over D × D with Γ ∘ F = 0.
struct AdversaryMatrix {
  Eigen::MatrixXd gamma;
};

/// Gram matrix of solution vectors. With two families the index of u_xj is
/// x·n + j and of v_yj is (rows + y)·n + j. With one family (the Boolean
/// adversary-optimization program) only the u block exists.
struct VectorSolution {
  Eigen::MatrixXd gram;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t arity = 0;
  int families = 2;
  double value = 0.0;

  Eigen::Index u(std::size_t x, std::size_t j) const {
    return static_cast<Eigen::Index>(x * arity + j);
  }
  Eigen::Index v(std::size_t y, std::size_t j) const {
    return static_cast<Eigen::Index>((rows + y) * arity + j);
  }
  /// Σ_j ‖u_xj‖².
  double row_weight(std::size_t x) const;
  /// Σ_j ‖v_yj‖² (two families only).
  double col_weight(std::size_t y) const;
};

struct AdvBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string notes;
  /// Lower bound certified by an adversary matrix read off the dual solution.
  std::optional<double> certified_lower;
  /// Single-family program value (Boolean f, cross-check mode only).
  std::optional<double> single_family;
  /// Cross-check disagreement above 10·tol.
  bool solver_defect = false;
};

struct SolveOptions {
  double tol = kDefaultTolerance;
  std::size_t max_iterations = kDefaultIterationBudget;
};

struct Gamma2Result {
  double value = 0.0;
  VectorSolution solution;
  /// Dual variables: per-row weights a_x, per-column weights b_y (both ≥ 0,
  /// summing to at most 1) and the pair multipliers W_xy.
  Eigen::VectorXd row_dual;
  Eigen::VectorXd col_dual;
  Eigen::MatrixXd pair_dual;
  std::size_t iterations = 0;
};

/// γ₂(A | Z): minimize max(max_x Σ_j‖u_xj‖², max_y Σ_j‖v_yj‖²) subject to
/// Σ_j (Z_j)_xy ⟨u_xj, v_yj⟩ = A_xy for every (x, y). Pairs where every Z_j
/// vanishes and A_xy = 0 impose nothing.
///
/// Throws InfeasibleProgram for a pair with A_xy ≠ 0 and every Z_j masked
/// off, CapExceeded when the Gram dimension exceeds 2·kSdpCap, and
/// SolverBudgetExceeded when the solver does not converge.
Gamma2Result gamma2_filtered(const Eigen::MatrixXd& a, const std::vector<Eigen::MatrixXd>& z,
                             const SolveOptions& options = {});

/// Bracket [g / (2(1 − 1/|E|)), g] with g = γ₂(J − F | Δ). For Boolean f the
/// two ends coincide. With `cross_check` and Boolean f the single-family
/// program is solved as well and compared.
AdvBracket adv_value(const FiniteFunction& f, const SolveOptions& options = {},
                     bool cross_check = false);

/// Single-family program for Boolean f: minimize A₀ subject to class-1 weight
/// sums ≤ 1, class-0 sums ≤ A₀ and Σ_{j: x_j≠y_j} ⟨u_xj, u_yj⟩ = 1 for every
/// pair with f(x) ≠ f(y). The returned value is √A₀ = Adv(f).
Gamma2Result adv_opt(const FiniteFunction& f, const SolveOptions& options = {});

/// Adversary matrix built from the dual of γ₂(J − F | Δ).
AdversaryMatrix extract_adversary_matrix(const FiniteFunction& f, const Gamma2Result& dual);

/// ‖Γ‖ / max_j ‖Γ ∘ Δ_j‖. Throws InvalidCertificate when Γ is not symmetric,
/// when Γ ∘ F ≠ 0 beyond `tol`, or when Γ ≠ 0 but every Γ ∘ Δ_j vanishes.
double adv_lower_certify(const FiniteFunction& f, const AdversaryMatrix& gamma, double tol = 1e-9);

/// Largest singular value, from the eigenvalues of [[0, M], [Mᵀ, 0]].
double spectral_norm(const Eigen::MatrixXd& m);

/// Checks a two-family solution against γ₂(A | Z): PSD within −tol·trace and
/// each constraint residual ≤ tol·(1 + |A_xy|). Throws InvalidCertificate.
void validate_gamma2_solution(const VectorSolution& s, const Eigen::MatrixXd& a,
                              const std::vector<Eigen::MatrixXd>& z, double tol);

/// Checks a single-family solution for Boolean f: PSD and unit pair
/// constraints within tol. Throws InvalidCertificate.
void validate_single_family(const VectorSolution& s, const FiniteFunction& f, double tol);

/// Class weights A_b = max_{x: f(x)=b} Σ_j‖u_xj‖² (0 for an empty class).
std::pair<double, double> class_weights(const VectorSolution& s, const FiniteFunction& f);

/// J − F for f.
Eigen::MatrixXd output_difference(const FiniteFunction& f);

/// The standard adversary matrix for OR_n: Γ[0ⁿ, e_i] = Γ[e_i, 0ⁿ] = 1.
AdversaryMatrix or_certificate(const FiniteFunction& or_fn);

}  // namespace advkit
