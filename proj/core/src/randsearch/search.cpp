#include "advkit/randsearch/search.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "advkit/errors.hpp"
#include "advkit/strings/lis.hpp"

namespace advkit::randsearch {

namespace {

Answer perturb(Answer a, CounterRng& rng) {
  // One of the two other answers, uniformly.
  int shift = rng.bernoulli(0.5) ? 1 : 2;
  return static_cast<Answer>((static_cast<int>(a) + shift) % 3);
}

Answer from_relation(strings::Relation r) {
  switch (r) {
    case strings::Relation::less: return Answer::less;
    case strings::Relation::equal: return Answer::equal;
    case strings::Relation::greater: return Answer::greater;
  }
  return Answer::equal;
}

std::pair<std::size_t, std::size_t> bracket_range(const std::vector<Value>& sorted, const Bracket& b) {
  auto first = b.lo ? std::upper_bound(sorted.begin(), sorted.end(), *b.lo) : sorted.begin();
  auto last = b.hi ? std::lower_bound(sorted.begin(), sorted.end(), *b.hi) : sorted.end();
  if (last < first) last = first;
  return {static_cast<std::size_t>(first - sorted.begin()), static_cast<std::size_t>(last - sorted.begin())};
}

SearchResult run_loop(CompareOracle& compare, SampleOracle& sample, std::size_t n, const SearchOptions& options,
                      CounterRng& rng, const std::function<std::size_t(const Bracket&)>& candidates) {
  SearchResult out;
  out.seed = rng.seed();
  const std::size_t budget = iteration_budget(n, options.delta);
  Bracket b;
  if (candidates) out.trace.push_back(candidates(b));
  for (std::size_t it = 1; it <= budget; ++it) {
    auto u = sample(b, rng);
    if (!u) {
      if (options.noise > 0) break;
      throw InvariantViolation("randomized_search: empty candidate set while s is bracketed");
    }
    Answer a = compare(*u);
    if (options.noise > 0 && rng.bernoulli(options.noise)) a = perturb(a, rng);
    out.iterations = it;
    if (a == Answer::equal) {
      out.found = *u;
      if (candidates) out.trace.push_back(0);
      break;
    }
    if (a == Answer::less) {
      b.hi = *u;
    } else {
      b.lo = *u;
    }
    if (candidates) {
      std::size_t next = candidates(b);
      if (options.noise == 0 && next >= out.trace.back()) {
        throw InvariantViolation("randomized_search: candidate set did not shrink");
      }
      out.trace.push_back(next);
    }
  }
  out.aborted = !out.found;
  out.compare_calls = compare.calls();
  out.sample_calls = sample.calls();
  return out;
}

}  // namespace

std::size_t iteration_budget(std::size_t n, double delta) {
  if (n == 0) throw InvalidArgument("iteration_budget: n must be positive");
  if (!(delta > 0 && delta < 1)) throw InvalidArgument("iteration_budget: delta must lie in (0, 1)");
  return static_cast<std::size_t>(std::ceil(10.0 * std::log2(static_cast<double>(n) / delta)));
}

Answer CompareOracle::operator()(Value r) {
  ++calls_;
  return fn_(r);
}

std::optional<Value> SampleOracle::operator()(const Bracket& b, CounterRng& rng) {
  ++calls_;
  auto u = fn_(b, rng);
  if (u && !b.contains(*u)) throw InvariantViolation("SampleOracle returned a value outside the bracket");
  return u;
}

SearchResult randomized_search(CompareOracle& compare, SampleOracle& sample, std::size_t n,
                               const SearchOptions& options, CounterRng& rng) {
  return run_loop(compare, sample, n, options, rng, {});
}

SearchResult randomized_search(const std::vector<Value>& S, Value s, const SearchOptions& options, std::uint64_t seed) {
  if (S.empty()) throw InvalidArgument("randomized_search: S is empty");
  std::vector<Value> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  if (!std::binary_search(sorted.begin(), sorted.end(), s)) throw InvalidArgument("randomized_search: s is not in S");
  CompareOracle compare([s](Value r) { return s < r ? Answer::less : s == r ? Answer::equal : Answer::greater; });
  SampleOracle sample([&sorted](const Bracket& b, CounterRng& rng) -> std::optional<Value> {
    auto [first, last] = bracket_range(sorted, b);
    if (first == last) return std::nullopt;
    return sorted[first + rng.uniform(last - first)];
  });
  CounterRng rng(seed);
  auto count = [&sorted](const Bracket& b) {
    auto [first, last] = bracket_range(sorted, b);
    return last - first;
  };
  return run_loop(compare, sample, S.size(), options, rng, count);
}

double expected_next_size(std::size_t x, std::size_t p) {
  if (x == 0 || p == 0 || p > x) throw InvalidArgument("expected_next_size: need 1 ≤ p ≤ x");
  double sum = 0;
  for (std::size_t i = 1; i < p; ++i) sum += static_cast<double>(x - i);
  for (std::size_t i = p; i < x; ++i) sum += static_cast<double>(i);
  return sum / static_cast<double>(x);
}

bool ShrinkReport::pass() const {
  return ratio_pass && std::all_of(tail.begin(), tail.end(), [](const TailRow& r) { return r.pass; });
}

ShrinkReport shrink_statistic(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("shrink_statistic: n must be at least 2");
  if (trials == 0) throw InvalidArgument("shrink_statistic: trials must be positive");
  ShrinkReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  const auto horizon = static_cast<std::size_t>(std::ceil(10.0 * std::log2(static_cast<double>(n))));
  std::vector<std::size_t> above_one(horizon + 1, 0);
  double sum = 0;
  double sum_sq = 0;
  // The search only sees ranks, so S = {0..n-1} is a uniformly random
  // distinct-valued multiset up to relabelling.
  std::vector<Value> S(n);
  for (std::size_t i = 0; i < n; ++i) S[i] = static_cast<Value>(i);
  CounterRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng = root.derive(t);
    auto s = static_cast<Value>(rng.uniform(n));
    SearchResult r = randomized_search(S, s, SearchOptions{0.01, 0.0}, rng());
    for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
      if (r.trace[i] < 2) continue;
      double ratio = static_cast<double>(r.trace[i + 1]) / static_cast<double>(r.trace[i]);
      sum += ratio;
      sum_sq += ratio * ratio;
      ++rep.ratio_samples;
    }
    for (std::size_t step = 1; step <= horizon; ++step) {
      std::size_t x = step < r.trace.size() ? r.trace[step] : r.trace.back();
      if (x > 1) ++above_one[step];
    }
  }
  const double k = static_cast<double>(rep.ratio_samples);
  rep.ratio_mean = k > 0 ? sum / k : 0.0;
  double var = k > 1 ? (sum_sq - k * rep.ratio_mean * rep.ratio_mean) / (k - 1) : 0.0;
  rep.ratio_standard_error = k > 0 ? std::sqrt(std::max(var, 0.0) / k) : 0.0;
  rep.ratio_pass = rep.ratio_mean <= 0.75 + 3 * rep.ratio_standard_error;
  for (std::size_t step = 1; step <= horizon; ++step) {
    TailRow row;
    row.t = step;
    row.empirical = static_cast<double>(above_one[step]) / static_cast<double>(trials);
    row.standard_error = std::sqrt(row.empirical * (1 - row.empirical) / static_cast<double>(trials));
    row.bound = std::pow(0.75, static_cast<double>(step)) * static_cast<double>(n) * (1 + 3 * row.standard_error);
    row.pass = row.empirical <= row.bound;
    rep.tail.push_back(row);
  }
  return rep;
}

SuccessReport success_sweep(const SuccessSweep& sweep) {
  if (sweep.target_rank && (*sweep.target_rank == 0 || *sweep.target_rank > sweep.n)) {
    throw InvalidArgument("success_sweep: target rank must lie in [1, n]");
  }
  SuccessReport rep;
  rep.trials = sweep.trials;
  rep.budget = iteration_budget(sweep.n, sweep.delta);
  std::vector<Value> S(sweep.n);
  for (std::size_t i = 0; i < sweep.n; ++i) S[i] = static_cast<Value>(i + 1);
  for (std::size_t t = 0; t < sweep.trials; ++t) {
    const std::uint64_t trial_seed = sweep.seed + t;
    std::size_t rank = sweep.target_rank ? *sweep.target_rank : 1 + CounterRng(trial_seed).derive(0).uniform(sweep.n);
    SearchResult r = randomized_search(S, static_cast<Value>(rank), SearchOptions{sweep.delta, sweep.noise}, trial_seed);
    bool ok = r.found && *r.found == static_cast<Value>(rank);
    if (ok) ++rep.successes;
    rep.max_iterations = std::max(rep.max_iterations, r.iterations);
    r.found = ok ? r.found : std::nullopt;
    rep.runs.push_back(std::move(r));
  }
  return rep;
}

void write_runs_csv(std::ostream& out, const std::vector<SearchResult>& runs) {
  out << "trial,iterations,success,O_calls,R_calls\n";
  for (std::size_t t = 0; t < runs.size(); ++t) {
    const auto& r = runs[t];
    out << t << ',' << r.iterations << ',' << (r.found ? 1 : 0) << ',' << r.compare_calls << ',' << r.sample_calls
        << '\n';
  }
}

namespace {

ViaSearch via_search(const strings::QueryString& x, std::size_t j, double delta, std::uint64_t seed, double noise,
                     bool last) {
  ViaSearch out;
  out.exists = strings::lis_decide(x, j);
  if (!out.exists) return out;
  strings::SymbolString values = x.read_all();
  std::size_t n = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](strings::Symbol s) { return !strings::is_star(s); }));
  CompareOracle compare([&](Value r) {
    return from_relation(last ? strings::classify_min_last(x, j, r) : strings::classify_max_first(x, j, r));
  });
  SampleOracle sample([&](const Bracket& b, CounterRng& rng) -> std::optional<Value> {
    std::vector<Value> inside;
    for (strings::Symbol s : x.read_all()) {
      if (!strings::is_star(s) && b.contains(s)) inside.push_back(s);
    }
    if (inside.empty()) return std::nullopt;
    return inside[rng.uniform(inside.size())];
  });
  CounterRng rng(seed);
  out.run = randomized_search(compare, sample, n, SearchOptions{delta, noise}, rng);
  out.value = out.run.found;
  return out;
}

}  // namespace

ViaSearch min_last_via_search(const strings::QueryString& x, std::size_t j, double delta, std::uint64_t seed,
                              double noise) {
  return via_search(x, j, delta, seed, noise, true);
}

ViaSearch max_first_via_search(const strings::QueryString& x, std::size_t j, double delta, std::uint64_t seed,
                               double noise) {
  return via_search(x, j, delta, seed, noise, false);
}

double AgreementReport::min_last_rate() const {
  return trials ? static_cast<double>(min_last_agree) / static_cast<double>(trials) : 0.0;
}

double AgreementReport::max_first_rate() const {
  return trials ? static_cast<double>(max_first_agree) / static_cast<double>(trials) : 0.0;
}

AgreementReport agreement_sweep(const AgreementSweep& sweep) {
  AgreementReport rep;
  rep.trials = sweep.trials;
  CounterRng root(sweep.seed);
  for (std::size_t t = 0; t < sweep.trials; ++t) {
    CounterRng rng = root.derive(t);
    strings::SymbolString x(sweep.length);
    for (auto& s : x) {
      s = rng.bernoulli(sweep.star_rate) ? strings::kStar : static_cast<strings::Symbol>(rng.uniform(sweep.value_range));
    }
    strings::QueryString qx(x);
    auto last = min_last_via_search(qx, sweep.j, sweep.delta, sweep.seed + t);
    auto first = max_first_via_search(qx, sweep.j, sweep.delta, sweep.seed + t);
    if (last.value == strings::min_last(x, sweep.j)) ++rep.min_last_agree;
    if (first.value == strings::max_first(x, sweep.j)) ++rep.max_first_agree;
  }
  return rep;
}

}  // namespace advkit::randsearch
