#include "advkit/strings/kcs.hpp"

#include <algorithm>
#include <set>

#include "advkit/errors.hpp"

namespace advkit::strings {

namespace {

SymbolView block(SymbolView s, const BlockPartition& p, std::size_t b) { return s.subspan(p.begin(b), p.size(b)); }

void require_same_length(SymbolView x, SymbolView y) {
  if (x.size() != y.size()) throw InvalidArgument("k-CS: x and y must have the same length");
}

// Masks of compatible cells, indexed by cell.
std::vector<std::uint64_t> compatibility_masks(std::size_t m) {
  std::vector<std::uint64_t> out(m * m, 0);
  for (std::size_t a = 0; a < m * m; ++a) {
    for (std::size_t b = 0; b < m * m; ++b) {
      if (compatible({a / m, a % m}, {b / m, b % m})) out[a] |= std::uint64_t{1} << b;
    }
  }
  return out;
}

std::uint64_t critical_mask(std::uint64_t sig, const std::vector<std::uint64_t>& compat) {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < compat.size(); ++c) {
    if ((sig >> c & 1U) && (sig & compat[c]) == 0) out |= std::uint64_t{1} << c;
  }
  return out;
}

// Two critical cells on one slope, or more than 2m − 1 of them.
bool violates_ceiling(std::uint64_t crit, std::size_t m) {
  if (static_cast<std::size_t>(__builtin_popcountll(crit)) > 2 * m - 1) return true;
  std::vector<bool> slope(2 * m - 1, false);
  for (std::size_t c = 0; c < m * m; ++c) {
    if (!(crit >> c & 1U)) continue;
    std::size_t d = c / m + (m - 1) - c % m;
    if (slope[d]) return true;
    slope[d] = true;
  }
  return false;
}

bool composite_by_enumeration(SymbolView x, SymbolView y, std::size_t k, const BlockPartition& p) {
  bool found = false;
  for_each_witness(x, y, k, [&](const Witness& w) {
    const Cell& a = w.front();
    const Cell& b = w.back();
    found = p.block_of(a.first) != p.block_of(b.first) || p.block_of(a.second) != p.block_of(b.second);
    return !found;
  });
  return found;
}

// Longest common subsequence whose first and last collisions lie in different
// block pairs. g0 = chains inside one block pair, g1 = chains spanning two or
// more; pm* are 2-D prefix maxima. Arrays are offset by one.
bool composite_by_dp(SymbolView x, SymbolView y, std::size_t k, const BlockPartition& p) {
  const std::size_t n = x.size();
  const std::size_t w = n + 1;
  std::vector<std::size_t> g0(w * w, 0), m0(w * w, 0), pm0(w * w, 0), pm1(w * w, 0);
  std::size_t best = 0;
  for (std::size_t a = 1; a <= n; ++a) {
    const std::size_t sx = p.begin(p.block_of(a - 1)) + 1;
    for (std::size_t b = 1; b <= n; ++b) {
      const std::size_t sy = p.begin(p.block_of(b - 1)) + 1;
      std::size_t simple = 0;
      std::size_t spanning = 0;
      if (x[a - 1] == y[b - 1]) {
        simple = 1 + ((a > sx && b > sy) ? m0[(a - 1) * w + (b - 1)] : 0);
        std::size_t prev = std::max({pm1[(a - 1) * w + (b - 1)], pm0[(sx - 1) * w + (b - 1)], pm0[(a - 1) * w + (sy - 1)]});
        if (prev > 0) spanning = prev + 1;
      }
      g0[a * w + b] = simple;
      std::size_t local = simple;
      if (a > sx) local = std::max(local, m0[(a - 1) * w + b]);
      if (b > sy) local = std::max(local, m0[a * w + (b - 1)]);
      m0[a * w + b] = local;
      pm0[a * w + b] = std::max({simple, pm0[(a - 1) * w + b], pm0[a * w + (b - 1)]});
      pm1[a * w + b] = std::max({spanning, pm1[(a - 1) * w + b], pm1[a * w + (b - 1)]});
      best = std::max(best, spanning);
    }
  }
  return best >= k;
}

}  // namespace

std::size_t lcs_length(SymbolView x, SymbolView y) {
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

bool kcs_decide(SymbolView x, SymbolView y, std::size_t k) { return lcs_length(x, y) >= k; }

bool kcs_decide(const QueryString& x, const QueryString& y, std::size_t k) {
  return kcs_decide(x.read_all(), y.read_all(), k);
}

BlockPartition make_partition(std::size_t n, std::size_t m, Split split) {
  return split == Split::even ? BlockPartition::even(n, m) : BlockPartition::balanced(n, m);
}

Signature Signature::zeros(std::size_t m) { return {m, std::vector<std::uint8_t>(m * m, 0)}; }

Signature Signature::from_mask(std::size_t m, std::uint64_t mask) {
  if (m > 8) throw InvalidArgument("Signature::from_mask: m must be at most 8");
  Signature s = zeros(m);
  for (std::size_t c = 0; c < m * m; ++c) s.bits[c] = static_cast<std::uint8_t>(mask >> c & 1U);
  return s;
}

std::uint64_t Signature::mask() const {
  if (m > 8) throw InvalidArgument("Signature::mask: m must be at most 8");
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < m * m; ++c) {
    if (bits[c]) out |= std::uint64_t{1} << c;
  }
  return out;
}

std::string Signature::str() const {
  std::string out;
  for (std::size_t i = 0; i < m; ++i) {
    if (i) out += '/';
    for (std::size_t j = 0; j < m; ++j) out += at(i, j) ? '1' : '0';
  }
  return out;
}

Signature signature(SymbolView x, SymbolView y, std::size_t m, Split split) {
  require_same_length(x, y);
  BlockPartition p = make_partition(x.size(), m, split);
  Signature s = Signature::zeros(m);
  for (std::size_t i = 0; i < m; ++i) {
    SymbolView xb = block(x, p, i);
    std::set<Symbol> values(xb.begin(), xb.end());
    for (std::size_t j = 0; j < m; ++j) {
      SymbolView yb = block(y, p, j);
      s.set(i, j, std::any_of(yb.begin(), yb.end(), [&](Symbol v) { return values.count(v) > 0; }));
    }
  }
  return s;
}

bool compatible(Cell a, Cell b) noexcept {
  return (a.first < b.first && a.second < b.second) || (a.first > b.first && a.second > b.second);
}

std::vector<Cell> critical_set(const Signature& s) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < s.m; ++i) {
    for (std::size_t j = 0; j < s.m; ++j) {
      if (!s.at(i, j)) continue;
      bool critical = true;
      for (std::size_t i2 = 0; i2 < s.m && critical; ++i2) {
        for (std::size_t j2 = 0; j2 < s.m; ++j2) {
          if (s.at(i2, j2) && compatible({i, j}, {i2, j2})) {
            critical = false;
            break;
          }
        }
      }
      if (critical) out.emplace_back(i, j);
    }
  }
  return out;
}

Signature extremal_signature(std::size_t m) {
  if (m == 0) throw InvalidArgument("extremal_signature: m must be positive");
  Signature s = Signature::zeros(m);
  for (std::size_t i = 0; i < m; ++i) {
    s.set(i, m - 1 - i);
    if (i + 2 <= m) s.set(i, m - 2 - i);
  }
  return s;
}

MaxCritical max_critical(std::size_t m, std::size_t samples, std::uint64_t seed) {
  if (m == 0 || m > 8) throw InvalidArgument("max_critical: m must lie in [1, 8]");
  MaxCritical out;
  out.m = m;
  const auto compat = compatibility_masks(m);
  const std::size_t cells = m * m;
  if (m <= 4) {
    out.exhaustive = true;
    out.method = "exhaustive over 2^" + std::to_string(cells) + " signatures";
    for (std::uint64_t sig = 0; sig < (std::uint64_t{1} << cells); ++sig) {
      std::uint64_t crit = critical_mask(sig, compat);
      out.value = std::max(out.value, static_cast<std::size_t>(__builtin_popcountll(crit)));
      if (violates_ceiling(crit, m)) ++out.violations;
    }
    return out;
  }
  out.samples = samples;
  out.method = "extremal construction + " + std::to_string(samples) + " sampled signatures (seed " +
               std::to_string(seed) + ")";
  std::uint64_t extremal = extremal_signature(m).mask();
  std::uint64_t crit = critical_mask(extremal, compat);
  out.value = static_cast<std::size_t>(__builtin_popcountll(crit));
  if (violates_ceiling(crit, m)) ++out.violations;
  CounterRng root(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    CounterRng rng = root.derive(t);
    // Spread densities so sparse signatures (the ones with many critical
    // cells) are sampled as often as dense ones.
    double density = rng.uniform01();
    std::uint64_t sig = 0;
    for (std::size_t c = 0; c < cells; ++c) {
      if (rng.bernoulli(density)) sig |= std::uint64_t{1} << c;
    }
    std::uint64_t c = critical_mask(sig, compat);
    out.value = std::max(out.value, static_cast<std::size_t>(__builtin_popcountll(c)));
    if (violates_ceiling(c, m)) ++out.violations;
  }
  return out;
}

bool composite_decide(SymbolView x, SymbolView y, std::size_t k, std::size_t m, Split split, CompositeMode mode) {
  require_same_length(x, y);
  if (k == 0) throw InvalidArgument("k-CS: k must be at least 1");
  BlockPartition p = make_partition(x.size(), m, split);
  if (k == 1) return false;  // a single collision lies in one block pair
  if (mode == CompositeMode::automatic) {
    mode = x.size() <= kEnumerateUpTo ? CompositeMode::enumerate : CompositeMode::dp;
  }
  return mode == CompositeMode::enumerate ? composite_by_enumeration(x, y, k, p) : composite_by_dp(x, y, k, p);
}

bool critical_block_decide(SymbolView x, SymbolView y, std::size_t k, std::size_t m, Split split) {
  BlockPartition p = make_partition(x.size(), m, split);
  for (const auto& [i, j] : critical_set(signature(x, y, m, split))) {
    if (kcs_decide(block(x, p, i), block(y, p, j), k)) return true;
  }
  return false;
}

KcsDecomposition kcs_decompose_check(SymbolView x, SymbolView y, std::size_t k, std::size_t m, Split split) {
  KcsDecomposition d;
  d.lhs = kcs_decide(x, y, k);
  d.composite = composite_decide(x, y, k, m, split);
  d.critical = critical_block_decide(x, y, k, m, split);
  return d;
}

void validate_witness(SymbolView x, SymbolView y, const Witness& w) {
  for (std::size_t l = 0; l < w.size(); ++l) {
    const auto [i, j] = w[l];
    auto pair_name = [&](std::size_t t) {
      return "(" + std::to_string(w[t].first) + "," + std::to_string(w[t].second) + ")";
    };
    if (i >= x.size() || j >= y.size()) throw InvalidArgument("witness pair " + pair_name(l) + " is out of range");
    if (x[i] != y[j]) throw InvalidArgument("witness pair " + pair_name(l) + " is not a collision");
    if (l > 0 && !(w[l - 1].first < i && w[l - 1].second < j)) {
      throw InvalidArgument("witness pairs " + pair_name(l - 1) + " and " + pair_name(l) +
                            " are not strictly increasing");
    }
  }
}

void for_each_witness(SymbolView x, SymbolView y, std::size_t k, const std::function<bool(const Witness&)>& visit) {
  if (k == 0) return;
  std::vector<Cell> collisions;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (x[i] == y[j]) collisions.emplace_back(i, j);
    }
  }
  // suffix[c] = longest chain starting at collision c, to prune dead branches.
  std::vector<std::size_t> suffix(collisions.size(), 1);
  for (std::size_t c = collisions.size(); c-- > 0;) {
    for (std::size_t d = c + 1; d < collisions.size(); ++d) {
      if (compatible(collisions[d], collisions[c]) && collisions[d].first > collisions[c].first) {
        suffix[c] = std::max(suffix[c], suffix[d] + 1);
      }
    }
  }
  Witness w;
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (stop) return;
    if (w.size() == k) {
      stop = !visit(w);
      return;
    }
    for (std::size_t c = from; c < collisions.size() && !stop; ++c) {
      if (suffix[c] < k - w.size()) continue;
      if (!w.empty() && !(w.back().first < collisions[c].first && w.back().second < collisions[c].second)) continue;
      w.push_back(collisions[c]);
      extend(c + 1);
      w.pop_back();
    }
  };
  extend(0);
}

std::size_t WitnessGraph::total_weight() const {
  std::size_t t = 0;
  for (const auto& [cell, weight] : edges) t += weight;
  return t;
}

std::optional<Cell> WitnessGraph::leftmost() const {
  for (const auto& [cell, weight] : edges) {
    bool below_all = std::all_of(edges.begin(), edges.end(), [&](const auto& e) {
      return cell.first <= e.first.first && cell.second <= e.first.second;
    });
    if (below_all) return cell;
  }
  return std::nullopt;
}

std::size_t WitnessGraph::x_degree(std::size_t i) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first.first == i; }));
}

std::size_t WitnessGraph::y_degree(std::size_t j) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first.second == j; }));
}

bool WitnessGraph::leftmost_has_leaf() const {
  auto l = leftmost();
  return l && (x_degree(l->first) == 1 || y_degree(l->second) == 1);
}

bool WitnessGraph::non_crossing() const {
  for (const auto& [a, wa] : edges) {
    for (const auto& [b, wb] : edges) {
      if (a.first < b.first && a.second > b.second) return false;
    }
  }
  return true;
}

WitnessGraph witness_graph(SymbolView x, SymbolView y, const Witness& w, std::size_t m, Split split) {
  require_same_length(x, y);
  validate_witness(x, y, w);
  BlockPartition p = make_partition(x.size(), m, split);
  WitnessGraph g;
  g.m = m;
  g.witness = w;
  for (const auto& [i, j] : w) ++g.edges[{p.block_of(i), p.block_of(j)}];
  return g;
}

std::optional<std::size_t> minimal_prefix(SymbolView xb, SymbolView yb, std::size_t k1, std::size_t* oracle_calls) {
  if (k1 == 0) throw InvalidArgument("minimal_prefix: k1 must be at least 1");
  std::size_t calls = 0;
  auto has = [&](std::size_t p) {
    ++calls;
    return kcs_decide(xb.first(p), yb, k1);
  };
  std::optional<std::size_t> out;
  if (has(xb.size())) {
    std::size_t lo = 0;  // no k1-CS with xb[0, lo)
    std::size_t hi = xb.size();
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (has(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out = hi;
  }
  if (oracle_calls) *oracle_calls = calls;
  return out;
}

std::optional<std::size_t> minimal_p(SymbolView x, SymbolView y, std::size_t i, std::size_t j, std::size_t k1,
                                     std::size_t m, Split split) {
  require_same_length(x, y);
  BlockPartition p = make_partition(x.size(), m, split);
  if (i >= m || j >= m) throw InvalidArgument("minimal_p: block index out of range");
  return minimal_prefix(block(x, p, i), block(y, p, j), k1);
}

}  // namespace advkit::strings
