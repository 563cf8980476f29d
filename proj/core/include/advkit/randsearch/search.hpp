#pragma once

// Randomized bracketing search for a distinguished element s of a multiset S,
// using a three-way comparison oracle O and a uniform sampling oracle R.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "advkit/rng.hpp"
#include "advkit/strings/query_string.hpp"

namespace advkit::randsearch {

using Value = std::int64_t;

/// ⌈10·log₂(n/δ)⌉.
std::size_t iteration_budget(std::size_t n, double delta);

/// Position of s relative to a probe r.
enum class Answer { less, equal, greater };

/// Open bracket (lo, hi); an absent end is infinite.
struct Bracket {
  std::optional<Value> lo;
  std::optional<Value> hi;

  bool contains(Value v) const noexcept { return (!lo || *lo < v) && (!hi || v < *hi); }
};

class CompareOracle {
 public:
  using Fn = std::function<Answer(Value r)>;
  explicit CompareOracle(Fn fn) : fn_(std::move(fn)) {}
  Answer operator()(Value r);
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  Fn fn_;
  std::uint64_t calls_ = 0;
};

class SampleOracle {
 public:
  /// Uniform element of {a ∈ S : a ∈ bracket}; nullopt when that set is empty.
  using Fn = std::function<std::optional<Value>(const Bracket&, CounterRng&)>;
  explicit SampleOracle(Fn fn) : fn_(std::move(fn)) {}
  /// Throws InvariantViolation if the sample falls outside the bracket.
  std::optional<Value> operator()(const Bracket& b, CounterRng& rng);
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  Fn fn_;
  std::uint64_t calls_ = 0;
};

struct SearchOptions {
  double delta = 0.01;
  /// Probability of replacing O's answer by a different one (exploration only).
  double noise = 0.0;
};

struct SearchResult {
  std::optional<Value> found;
  std::size_t iterations = 0;
  std::uint64_t compare_calls = 0;
  std::uint64_t sample_calls = 0;
  bool aborted = false;
  /// X_t = |S ∩ bracket| before each iteration, then 0 on success. Filled
  /// only by the multiset overload.
  std::vector<std::size_t> trace;
  std::uint64_t seed = 0;
};

/// The bracketing loop over abstract oracles, aborting after
/// iteration_budget(n, δ) iterations. One R call and one O call per iteration.
SearchResult randomized_search(CompareOracle& compare, SampleOracle& sample, std::size_t n,
                               const SearchOptions& options, CounterRng& rng);

/// Oracles built from an explicit multiset; s must occur in S. Checks that
/// the candidate set strictly shrinks while s is not found.
SearchResult randomized_search(const std::vector<Value>& S, Value s, const SearchOptions& options, std::uint64_t seed);

/// E[X_{t+1} | X_t = x, rank p] for distinct values.
double expected_next_size(std::size_t x, std::size_t p);

struct TailRow {
  std::size_t t = 0;
  double empirical = 0.0;
  double standard_error = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct ShrinkReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Mean of X_{t+1}/X_t over all steps with X_t ≥ 2.
  double ratio_mean = 0.0;
  double ratio_standard_error = 0.0;
  std::size_t ratio_samples = 0;
  bool ratio_pass = false;
  /// prob(X_t > 1) ≤ (3/4)^t·n·(1 + 3σ̂) for t = 1..⌈10·log₂ n⌉.
  std::vector<TailRow> tail;

  bool pass() const;
};

/// Random distinct-valued S of size n with a uniformly random target rank.
ShrinkReport shrink_statistic(std::size_t n, std::size_t trials, std::uint64_t seed);

struct SuccessSweep {
  std::size_t n = 1000;
  /// 1-based rank of s in {1..n}; random per trial when absent.
  std::optional<std::size_t> target_rank;
  double delta = 0.01;
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  double noise = 0.0;
};

struct SuccessReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t max_iterations = 0;
  std::size_t budget = 0;
  std::vector<SearchResult> runs;

  double success_rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
};

/// S = {1..n}; trial t uses seed derived from (seed, t).
SuccessReport success_sweep(const SuccessSweep& sweep);

/// trial,iterations,success,O_calls,R_calls
void write_runs_csv(std::ostream& out, const std::vector<SearchResult>& runs);

struct ViaSearch {
  /// False when x has no j-IS* (decided by one initial LIS call).
  bool exists = false;
  std::optional<strings::Symbol> value;
  SearchResult run;
};

/// min-last / max-first located by randomized search: O is the pair of LIS
/// calls on removal-filtered views read through the table, R samples
/// uniformly among the non-* values of x in the bracket.
ViaSearch min_last_via_search(const strings::QueryString& x, std::size_t j, double delta, std::uint64_t seed,
                              double noise = 0.0);
ViaSearch max_first_via_search(const strings::QueryString& x, std::size_t j, double delta, std::uint64_t seed,
                               double noise = 0.0);

struct AgreementSweep {
  std::size_t length = 64;
  std::size_t j = 1;
  double delta = 0.05;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  /// Values drawn from [0, value_range); '*' with probability star_rate.
  std::size_t value_range = 64;
  double star_rate = 0.1;
};

struct AgreementReport {
  std::size_t trials = 0;
  std::size_t min_last_agree = 0;
  std::size_t max_first_agree = 0;

  double min_last_rate() const;
  double max_first_rate() const;
};

/// Random strings; both search instantiations compared against the exact values.
AgreementReport agreement_sweep(const AgreementSweep& sweep);

}  // namespace advkit::randsearch
