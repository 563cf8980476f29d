#pragma once

// k-common subsequences, block signatures, critical subproblems and the
// witness graph of a common subsequence. Positions and blocks are 0-based.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advkit/rng.hpp"
#include "advkit/strings/query_string.hpp"

namespace advkit::strings {

std::size_t lcs_length(SymbolView x, SymbolView y);
/// LCS length ≥ k.
bool kcs_decide(SymbolView x, SymbolView y, std::size_t k);
bool kcs_decide(const QueryString& x, const QueryString& y, std::size_t k);

enum class Split { even, balanced };
BlockPartition make_partition(std::size_t n, std::size_t m, Split split);

/// m×m collision pattern, row i = x-block, column j = y-block, row-major.
struct Signature {
  std::size_t m = 0;
  std::vector<std::uint8_t> bits;

  static Signature zeros(std::size_t m);
  /// Bit c = i·m + j of `mask`; requires m ≤ 8.
  static Signature from_mask(std::size_t m, std::uint64_t mask);
  std::uint64_t mask() const;

  bool at(std::size_t i, std::size_t j) const { return bits[i * m + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits[i * m + j] = v ? 1 : 0; }
  std::string str() const;
};

/// Requires |x| = |y|.
Signature signature(SymbolView x, SymbolView y, std::size_t m, Split split = Split::even);

using Cell = std::pair<std::size_t, std::size_t>;

/// (i1 < i2 ∧ j1 < j2) ∨ (i1 > i2 ∧ j1 > j2).
bool compatible(Cell a, Cell b) noexcept;
/// Relevant cells with no relevant compatible cell.
std::vector<Cell> critical_set(const Signature& s);

/// The staircase (i, m−1−i) ∪ (i, m−2−i): 2m − 1 cells, pairwise incompatible.
Signature extremal_signature(std::size_t m);

struct MaxCritical {
  std::size_t m = 0;
  std::size_t value = 0;
  bool exhaustive = false;
  /// Sampled signatures (0 when exhaustive).
  std::size_t samples = 0;
  /// Signatures with more than 2m − 1 critical cells, or two critical cells
  /// on one slope i − j.
  std::size_t violations = 0;
  std::string method;
};

/// Exhaustive over all 2^{m²} signatures for m ≤ 4. For larger m, the
/// extremal construction plus `samples` random signatures checked against
/// the 2m − 1 ceiling; value is the best count seen.
MaxCritical max_critical(std::size_t m, std::size_t samples = 100000, std::uint64_t seed = 42);

/// A composite k-CS: one not contained in a single block pair.
enum class CompositeMode { automatic, enumerate, dp };
inline constexpr std::size_t kEnumerateUpTo = 24;
bool composite_decide(SymbolView x, SymbolView y, std::size_t k, std::size_t m, Split split = Split::even,
                      CompositeMode mode = CompositeMode::automatic);

/// Some critical block pair of the signature holds a k-CS.
bool critical_block_decide(SymbolView x, SymbolView y, std::size_t k, std::size_t m, Split split = Split::even);

struct KcsDecomposition {
  bool lhs = false;
  bool composite = false;
  bool critical = false;

  bool rhs() const noexcept { return composite || critical; }
  bool holds() const noexcept { return lhs == rhs(); }
};
KcsDecomposition kcs_decompose_check(SymbolView x, SymbolView y, std::size_t k, std::size_t m,
                                     Split split = Split::even);

/// Collision pairs (i, j) with x[i] = y[j], both coordinates increasing.
using Witness = std::vector<Cell>;

/// Throws InvalidArgument naming the first offending pair.
void validate_witness(SymbolView x, SymbolView y, const Witness& w);

/// Calls `visit` on every k-CS witness; stops when it returns false.
void for_each_witness(SymbolView x, SymbolView y, std::size_t k, const std::function<bool(const Witness&)>& visit);

struct WitnessGraph {
  std::size_t m = 0;
  /// (x-block, y-block) → number of witness collisions in it.
  std::map<Cell, std::size_t> edges;
  Witness witness;

  std::size_t total_weight() const;
  bool simple() const noexcept { return edges.size() == 1; }
  /// The edge ⪯ every other edge, where (i,j) ⪯ (i',j') ⇔ i ≤ i' ∧ j ≤ j'.
  std::optional<Cell> leftmost() const;
  std::size_t x_degree(std::size_t i) const;
  std::size_t y_degree(std::size_t j) const;
  /// The leftmost edge has an endpoint of degree 1.
  bool leftmost_has_leaf() const;
  /// No two edges cross: (i < i' ∧ j > j') never happens.
  bool non_crossing() const;
};

/// Validates the witness, then builds G_S.
WitnessGraph witness_graph(SymbolView x, SymbolView y, const Witness& w, std::size_t m, Split split = Split::even);

/// Smallest p with xb[0, p) and yb sharing a k1-CS, by binary search over p.
/// `oracle_calls` counts the kcs_decide calls.
std::optional<std::size_t> minimal_prefix(SymbolView xb, SymbolView yb, std::size_t k1,
                                          std::size_t* oracle_calls = nullptr);
/// minimal_prefix on blocks x^{(i)} and y^{(j)}.
std::optional<std::size_t> minimal_p(SymbolView x, SymbolView y, std::size_t i, std::size_t j, std::size_t k1,
                                     std::size_t m, Split split = Split::even);

}  // namespace advkit::strings
