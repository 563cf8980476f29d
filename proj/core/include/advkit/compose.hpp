#pragma once

// Composition of adversary solutions: the OR/AND vector construction, the
// SWITCH proof-chain bound, and numerical checks of the γ₂ algebra facts
// (triangle inequality, Hadamard product, direct sum).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "advkit/advsdp.hpp"
#include "advkit/check_report.hpp"
#include "advkit/funcore.hpp"

namespace advkit {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Single-family solution for g∨ (or g∧) assembled from base solutions.
/// Domain order is that of build_or / build_and.
struct ComposedSolution {
  VectorSolution solution;
  double a0 = 0.0;
  double a1 = 0.0;
  double value = 0.0;
};

/// Rescales a single-family solution of Boolean f so that the class-1 weight
/// is 1 and the class-0 weight is value²; leaves all-zero vectors when a class
/// is empty.
VectorSolution rescale_single_family(const VectorSolution& s, const FiniteFunction& f);

/// Builds λ-vectors for g∨(x, x') = f1(x) ∨ f2(x') from single-family
/// solutions of f1 and f2. The inputs are validated first.
ComposedSolution compose_or_vectors(const FiniteFunction& f1, const FiniteFunction& f2,
                                    const VectorSolution& sol1, const VectorSolution& sol2,
                                    double tol = kDefaultTolerance);
/// Same vectors for g∧ = ¬(¬f1 ∨ ¬f2): negation swaps class labels only.
ComposedSolution compose_and_vectors(const FiniteFunction& f1, const FiniteFunction& f2,
                                     const VectorSolution& sol1, const VectorSolution& sol2,
                                     double tol = kDefaultTolerance);

struct OrAndValues {
  double adv1 = 0.0;
  double adv2 = 0.0;
  double adv_or = 0.0;
  double adv_and = 0.0;
  double composed = 0.0;
};

/// adv(g∨)² ≤ adv(f1)² + adv(f2)² + tol, |adv(g∧) − adv(g∨)| ≤ 10·tol, and
/// the λ-table solution is feasible with value² within the same bound.
CheckReport verify_or_and_bound(const FiniteFunction& f1, const FiniteFunction& f2, const SolveOptions& options,
                                const std::string& id = "0", OrAndValues* values = nullptr);

/// Shared-variable form h(x) = f1(x) ∧ f2(x): adv(h) ≤ √(adv(f1)² + adv(f2)²) + tol.
CheckReport verify_shared_and(const FiniteFunction& f1, const FiniteFunction& f2, const SolveOptions& options,
                              const std::string& id = "0");

struct SwitchDecomposition {
  /// Attained values of f in codomain order, with their domain indices.
  std::vector<std::string> values;
  std::vector<std::vector<std::size_t>> parts;
  std::vector<Eigen::MatrixXd> g_blocks;
  /// mask_blocks[s][j] = Δ_j restricted to f⁻¹(s).
  std::vector<std::vector<Eigen::MatrixXd>> mask_blocks;
  /// Entry mismatches across H' = ⊕ G̃_s, F = ⊕ J_{b_s}, Δ_j ∘ F = ⊕ Δ_j^{(b_s)}.
  std::size_t mismatches = 0;

  bool identities_hold() const noexcept { return mismatches == 0; }
};

SwitchDecomposition switch_block_decompose(const FiniteFunction& f,
                                           const std::map<std::string, FiniteFunction>& g_family);

/// adv(h) ≤ γ₂(J − F | Δ) + max_s adv(g_s) + tol for h(x) = g_{f(x)}(x), plus
/// the block-decomposition identities.
CheckReport verify_switch_bound(const FiniteFunction& f, const std::map<std::string, FiniteFunction>& g_family,
                                const SolveOptions& options, const std::string& id = "0");

struct OrAndSweep {
  std::size_t n1 = 2;
  std::size_t n2 = 2;
  /// Draw each arity uniformly from [1, n_i] instead of fixing it.
  bool vary_arity = false;
  /// Redraw constant truth tables. With a constant component the equality
  /// adv(g∧) = adv(g∨) fails (f2 ≡ 1 makes g∨ constant while g∧ = f1), so the
  /// equality sweep samples non-constant functions only.
  bool nonconstant = true;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
};
CheckReport sweep_or_and(const OrAndSweep& sweep, const SolveOptions& options);

struct SwitchSweep {
  std::size_t arity = 2;
  std::size_t max_values = 3;
  std::size_t trials = 50;
  std::uint64_t seed = kDefaultSeed;
};
CheckReport sweep_switch(const SwitchSweep& sweep, const SolveOptions& options);

struct FactSweep {
  Eigen::Index rows = 4;
  Eigen::Index cols = 4;
  std::size_t filters = 2;
  std::size_t trials = 50;
  std::uint64_t seed = kDefaultSeed;
};

/// Triangle, Hadamard and direct-sum checks on random (A, B, Z) triples.
CheckReport gamma2_fact_checks(const FactSweep& sweep, const SolveOptions& options);

/// The random instance used by gamma2_fact_checks for a given trial stream.
struct FactInstance {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  /// Filters shared by A and B; `y` are the filters paired with B in the
  /// direct sum A ⊕ B | {z_j ⊕ y_j}.
  std::vector<Eigen::MatrixXd> z;
  std::vector<Eigen::MatrixXd> y;
};
FactInstance random_fact_instance(const FactSweep& sweep, CounterRng& rng);

}  // namespace advkit
