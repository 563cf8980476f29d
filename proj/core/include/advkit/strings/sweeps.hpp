#pragma once

// Exhaustive and seeded random checks of the string decompositions. Each row
// compares a direct value (lhs) with the decomposed one (rhs); pass means
// equality. Only failing rows are kept unless `keep_all` is set.

#include <cstdint>

#include "advkit/check_report.hpp"

namespace advkit::strings {

struct StringSweep {
  CheckReport report;
  std::size_t instances = 0;
  std::size_t failures = 0;

  bool pass() const noexcept { return failures == 0; }
};

/// Every x ∈ {0,1,2}^n, 1 ≤ n ≤ max_n: regular_cross = brute g_n and the
/// recursion equals regular_decide.
StringSweep regular_sweep(std::size_t max_n = 10, bool keep_all = false);

/// Random (x, y), n ∈ {8,16,32}, alphabets of size 2–4: the recurrence right
/// side equals minsub_decide.
StringSweep minsub_recurrence_sweep(std::size_t trials = 10000, std::uint64_t seed = 42, bool keep_all = false);

/// Same instances: the cross term from the four candidate positions equals
/// brute g_n, and the full recurrence agrees with minsub_decide.
StringSweep minsub_positions_sweep(std::size_t trials = 10000, std::uint64_t seed = 42, bool keep_all = false);

/// Every x over {0,..,alphabet−1} ∪ {*}, 1 ≤ n ≤ max_n, 1 ≤ k ≤ max_k:
/// lis_decompose = lis_decide, and each cross term equals its enumeration.
StringSweep lis_sweep(std::size_t max_n = 8, std::size_t alphabet = 3, std::size_t max_k = 3, bool keep_all = false);

/// Random (x, y) with n ∈ [m, max_n], k ∈ [2, max_k], balanced m-block split:
/// LCS_k = composite ∨ critical-block. The identity needs k ≥ 2: a single
/// collision is never composite, and a signature such as {(0,0), (1,1)} has no
/// critical cell.
StringSweep kcs_sweep(std::size_t trials = 10000, std::size_t max_n = 28, std::size_t max_k = 3, std::size_t m = 7,
                      std::uint64_t seed = 42, bool keep_all = false);

/// Every k-CS witness of random instances (n ≤ max_n, m ∈ {2,3,4}, k ≤ 3):
/// total weight k, non-crossing, unique leftmost edge with a degree-1 end,
/// and more than one edge exactly for composite witnesses.
struct WitnessSweep {
  StringSweep sweep;
  std::size_t witnesses = 0;
};
WitnessSweep witness_sweep(std::size_t trials = 1000, std::size_t max_n = 12, std::uint64_t seed = 42,
                           bool keep_all = false);

}  // namespace advkit::strings
