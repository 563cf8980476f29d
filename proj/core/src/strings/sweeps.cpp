#include "advkit/strings/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "advkit/rng.hpp"
#include "advkit/errors.hpp"
#include "advkit/strings/kcs.hpp"
#include "advkit/strings/lis.hpp"
#include "advkit/strings/minsub.hpp"
#include "advkit/strings/regular.hpp"

namespace advkit::strings {

namespace {

std::string format(SymbolView s) {
  std::string out;
  for (Symbol v : s) out += is_star(v) ? std::string("*") : std::to_string(v);
  return out;
}

void record(StringSweep& sw, bool keep_all, std::string id, bool lhs, bool rhs, std::uint64_t queries,
            std::string detail = {}) {
  bool ok = lhs == rhs;
  if (!ok) ++sw.failures;
  if (ok && !keep_all) return;
  CheckRow row;
  row.instance_id = std::move(id);
  row.lhs = lhs ? 1.0 : 0.0;
  row.rhs = rhs ? 1.0 : 0.0;
  row.pass = ok;
  row.queries = queries;
  row.detail = std::move(detail);
  sw.report.rows.push_back(std::move(row));
}

// Calls visit on every word of length n over `symbols`.
void for_each_word(std::size_t n, const SymbolString& symbols, const std::function<void(const SymbolString&)>& visit) {
  SymbolString w(n, symbols.front());
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    visit(w);
    std::size_t pos = 0;
    while (pos < n && ++digit[pos] == symbols.size()) {
      digit[pos] = 0;
      w[pos] = symbols.front();
      ++pos;
    }
    if (pos == n) return;
    w[pos] = symbols[digit[pos]];
  }
}

// LIS_{(i,j)}: an increasing chain with exactly i indices in the left half,
// by enumeration of index sets.
bool lis_cross_enumerate(SymbolView x, std::size_t i, std::size_t j) {
  const std::size_t h = left_half_size(x.size());
  std::vector<std::size_t> chain;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) {
    if (chain.size() == i + j) return true;
    const bool want_left = chain.size() < i;
    for (std::size_t p = from; p < x.size(); ++p) {
      if ((p < h) != want_left || is_star(x[p])) continue;
      if (!chain.empty() && !(x[chain.back()] < x[p])) continue;
      chain.push_back(p);
      if (extend(p + 1)) return true;
      chain.pop_back();
    }
    return false;
  };
  return extend(0);
}

struct MinsubInstance {
  SymbolString x;
  SymbolString y;
};

MinsubInstance random_minsub(CounterRng& rng) {
  static constexpr std::size_t kSizes[] = {8, 16, 32};
  const std::size_t n = kSizes[rng.uniform(3)];
  const std::size_t a = 2 + rng.uniform(3);
  const std::size_t l = n / 2;
  MinsubInstance inst;
  inst.x.resize(n);
  for (auto& s : inst.x) s = static_cast<Symbol>(rng.uniform(a));
  switch (rng.uniform(4)) {
    case 0:
      inst.y.resize(l);
      for (auto& s : inst.y) s = static_cast<Symbol>(rng.uniform(a));
      break;
    case 1: {
      std::size_t start = rng.uniform(n - l + 1);
      inst.y.assign(inst.x.begin() + static_cast<std::ptrdiff_t>(start),
                    inst.x.begin() + static_cast<std::ptrdiff_t>(start + l));
      break;
    }
    default: {
      // The minimal length-l substring, optionally nudged at one position.
      SymbolView xv(inst.x);
      SymbolView best = xv.subspan(0, l);
      for (std::size_t s = 1; s + l <= n; ++s) {
        SymbolView c = xv.subspan(s, l);
        if (std::lexicographical_compare(c.begin(), c.end(), best.begin(), best.end())) best = c;
      }
      inst.y.assign(best.begin(), best.end());
      if (rng.bernoulli(0.5)) {
        std::size_t p = rng.uniform(l);
        inst.y[p] = rng.bernoulli(0.5) ? std::min<Symbol>(inst.y[p] + 1, static_cast<Symbol>(a - 1))
                                       : std::max<Symbol>(inst.y[p] - 1, 0);
      }
    }
  }
  return inst;
}

}  // namespace

StringSweep regular_sweep(std::size_t max_n, bool keep_all) {
  StringSweep sw;
  const SymbolString symbols{0, 1, 2};
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_word(n, symbols, [&](const SymbolString& x) {
      ++sw.instances;
      QueryString qx(x);
      bool cross = regular_cross(qx);
      const std::string id = "regular:" + format(x);
      record(sw, keep_all, id + ":cross", cross, regular_cross_brute(x), qx.queries());
      const std::size_t h = left_half_size(n);
      bool rhs = n == 1 ? regular_decide(x)
                        : regular_decide(SymbolView(x).first(h)) || regular_decide(SymbolView(x).subspan(h)) ||
                              regular_cross(x);
      QueryString qd(x);
      record(sw, keep_all, id + ":recurrence", regular_decide(qd), rhs, qd.queries());
    });
  }
  return sw;
}

StringSweep minsub_recurrence_sweep(std::size_t trials, std::uint64_t seed, bool keep_all) {
  StringSweep sw;
  CounterRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng = root.derive(t);
    auto inst = random_minsub(rng);
    ++sw.instances;
    const std::size_t q = inst.x.size() / 4;
    SymbolView x(inst.x);
    SymbolView head = SymbolView(inst.y).first(q);
    bool rhs = minsub_decide(x.first(2 * q), head) && minsub_decide(x.subspan(q, 2 * q), head) &&
               minsub_cross(inst.x, inst.y);
    QueryString qx(inst.x), qy(inst.y);
    bool lhs = minsub_decide(qx, qy);
    record(sw, keep_all, "minsub:" + std::to_string(t), lhs, rhs, qx.queries() + qy.queries(),
           "x=" + format(inst.x) + " y=" + format(inst.y));
  }
  return sw;
}

StringSweep minsub_positions_sweep(std::size_t trials, std::uint64_t seed, bool keep_all) {
  StringSweep sw;
  CounterRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng = root.derive(t);
    auto inst = random_minsub(rng);
    ++sw.instances;
    const std::string id = "positions:" + std::to_string(t);
    const std::string detail = "x=" + format(inst.x) + " y=" + format(inst.y);
    auto pos = minsub_positions(inst.x, inst.y);
    record(sw, keep_all, id + ":cross", minsub_cross(inst.x, inst.y),
           minsub_cross_from_positions(inst.x, inst.y, pos), 0, detail);
    record(sw, keep_all, id + ":decide", minsub_decide(inst.x, inst.y), minsub_recurrence_rhs(inst.x, inst.y), 0,
           detail);
  }
  return sw;
}

StringSweep lis_sweep(std::size_t max_n, std::size_t alphabet, std::size_t max_k, bool keep_all) {
  StringSweep sw;
  SymbolString symbols;
  for (std::size_t a = 0; a < alphabet; ++a) symbols.push_back(static_cast<Symbol>(a));
  symbols.push_back(kStar);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_word(n, symbols, [&](const SymbolString& x) {
      ++sw.instances;
      for (std::size_t k = 1; k <= max_k; ++k) {
        const std::string id = "lis:" + format(x) + ":k" + std::to_string(k);
        QueryString qx(x);
        record(sw, keep_all, id, lis_decide(qx, k), lis_decompose(x, k), qx.queries());
        for (std::size_t i = 1; i < k; ++i) {
          record(sw, keep_all, id + ":cross" + std::to_string(i), lis_cross_enumerate(x, i, k - i),
                 lis_cross(x, i, k - i), 0);
        }
      }
    });
  }
  return sw;
}

StringSweep kcs_sweep(std::size_t trials, std::size_t max_n, std::size_t max_k, std::size_t m, std::uint64_t seed,
                      bool keep_all) {
  if (max_k < 2) throw InvalidArgument("kcs_sweep: max_k must be at least 2");
  StringSweep sw;
  CounterRng root(seed);
  static constexpr std::size_t kAlphabets[] = {2, 4, 8, 16};
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng = root.derive(t);
    const std::size_t n = m + rng.uniform(max_n - m + 1);
    const std::size_t a = kAlphabets[rng.uniform(4)];
    const std::size_t k = 2 + rng.uniform(max_k - 1);
    SymbolString x(n), y(n);
    for (auto& s : x) s = static_cast<Symbol>(rng.uniform(a));
    for (auto& s : y) s = static_cast<Symbol>(rng.uniform(a));
    ++sw.instances;
    auto d = kcs_decompose_check(x, y, k, m, Split::balanced);
    record(sw, keep_all, "kcs:" + std::to_string(t) + ":n" + std::to_string(n) + ":k" + std::to_string(k), d.lhs,
           d.rhs(), 0, "x=" + format(x) + " y=" + format(y));
  }
  return sw;
}

WitnessSweep witness_sweep(std::size_t trials, std::size_t max_n, std::uint64_t seed, bool keep_all) {
  WitnessSweep out;
  CounterRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng = root.derive(t);
    const std::size_t m = 2 + rng.uniform(3);
    const std::size_t n = m + rng.uniform(max_n - m + 1);
    const std::size_t a = 2 + rng.uniform(3);
    const std::size_t k = 1 + rng.uniform(3);
    SymbolString x(n), y(n);
    for (auto& s : x) s = static_cast<Symbol>(rng.uniform(a));
    for (auto& s : y) s = static_cast<Symbol>(rng.uniform(a));
    ++out.sweep.instances;
    const BlockPartition p = BlockPartition::balanced(n, m);
    std::size_t bad = 0;
    std::string first_bad;
    for_each_witness(x, y, k, [&](const Witness& w) {
      ++out.witnesses;
      WitnessGraph g = witness_graph(x, y, w, m, Split::balanced);
      const bool spans = p.block_of(w.front().first) != p.block_of(w.back().first) ||
                         p.block_of(w.front().second) != p.block_of(w.back().second);
      bool ok = g.total_weight() == k && g.non_crossing() && g.leftmost().has_value() && g.leftmost_has_leaf() &&
                (g.edges.size() >= 2) == spans;
      if (!ok) {
        ++bad;
        if (first_bad.empty()) {
          for (const auto& [i, j] : w) first_bad += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
      return true;
    });
    record(out.sweep, keep_all, "witness:" + std::to_string(t), bad == 0, true, 0,
           bad ? "x=" + format(x) + " y=" + format(y) + " witness=" + first_bad : std::string{});
  }
  return out;
}

}  // namespace advkit::strings
