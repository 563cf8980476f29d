#include "advkit/strings/lis.hpp"

#include <algorithm>

#include "advkit/errors.hpp"

namespace advkit::strings {

namespace {

// ending[l] = length of the longest increasing non-* subsequence ending at l
// (0 at '*').
std::vector<std::size_t> lengths_ending(SymbolView x) {
  std::vector<std::size_t> out(x.size(), 0);
  std::vector<Symbol> tails;  // tails[t] = least last value of an IS of length t+1
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (is_star(x[l])) continue;
    auto it = std::lower_bound(tails.begin(), tails.end(), x[l]);
    out[l] = static_cast<std::size_t>(it - tails.begin()) + 1;
    if (it == tails.end()) {
      tails.push_back(x[l]);
    } else {
      *it = x[l];
    }
  }
  return out;
}

// starting[l] = length of the longest increasing subsequence starting at l.
std::vector<std::size_t> lengths_starting(SymbolView x) {
  // Reverse and negate: an increasing run starting at l is a decreasing one
  // read backwards.
  SymbolString r(x.rbegin(), x.rend());
  for (auto& s : r) {
    if (!is_star(s)) s = -s;
  }
  auto rev = lengths_ending(r);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

std::size_t longest_increasing(SymbolView x) {
  auto e = lengths_ending(x);
  return e.empty() ? 0 : *std::max_element(e.begin(), e.end());
}

bool lis_decide(SymbolView x, std::size_t k) {
  if (k == 0) throw InvalidArgument("lis: k must be at least 1");
  return longest_increasing(x) >= k;
}

bool lis_decide(const QueryString& x, std::size_t k) { return lis_decide(x.read_all(), k); }

std::optional<Symbol> min_last(SymbolView x, std::size_t j) {
  if (j == 0) throw InvalidArgument("min_last: j must be at least 1");
  auto e = lengths_ending(x);
  std::optional<Symbol> best;
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (e[l] >= j && (!best || x[l] < *best)) best = x[l];
  }
  return best;
}

std::optional<Symbol> max_first(SymbolView x, std::size_t j) {
  if (j == 0) throw InvalidArgument("max_first: j must be at least 1");
  auto s = lengths_starting(x);
  std::optional<Symbol> best;
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (s[l] >= j && (!best || x[l] > *best)) best = x[l];
  }
  return best;
}

bool lis_cross(SymbolView x, std::size_t i, std::size_t j) {
  const std::size_t h = left_half_size(x.size());
  auto last = min_last(x.first(h), i);
  auto first = max_first(x.subspan(h), j);
  return last && first && *last < *first;
}

bool lis_decompose(SymbolView x, std::size_t k) {
  if (k == 0) throw InvalidArgument("lis: k must be at least 1");
  const std::size_t h = left_half_size(x.size());
  if (lis_decide(x.first(h), k) || lis_decide(x.subspan(h), k)) return true;
  for (std::size_t i = 1; i < k; ++i) {
    if (lis_cross(x, i, k - i)) return true;
  }
  return false;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::less: return "less";
    case Relation::equal: return "equal";
    case Relation::greater: return "greater";
  }
  return "?";
}

Relation min_last_table(bool lis_gt_removed, bool lis_ge_removed) {
  if (!lis_gt_removed && lis_ge_removed) {
    throw ImpossibleOracleAnswer("min-last table: LIS present after removing >= u but absent after removing > u");
  }
  if (!lis_gt_removed) return Relation::greater;
  return lis_ge_removed ? Relation::less : Relation::equal;
}

Relation max_first_table(bool lis_lt_removed, bool lis_le_removed) {
  if (!lis_lt_removed && lis_le_removed) {
    throw ImpossibleOracleAnswer("max-first table: LIS present after removing <= u but absent after removing < u");
  }
  if (!lis_lt_removed) return Relation::less;
  return lis_le_removed ? Relation::greater : Relation::equal;
}

Relation classify_min_last(const QueryString& x, std::size_t j, Symbol u) {
  bool gt = lis_decide(removal_transform(x, u, RemovalMode::gt), j);
  bool ge = lis_decide(removal_transform(x, u, RemovalMode::ge), j);
  return min_last_table(gt, ge);
}

Relation classify_max_first(const QueryString& x, std::size_t j, Symbol u) {
  bool lt = lis_decide(removal_transform(x, u, RemovalMode::lt), j);
  bool le = lis_decide(removal_transform(x, u, RemovalMode::le), j);
  return max_first_table(lt, le);
}

}  // namespace advkit::strings
