#include "advkit/strings/minsub.hpp"

#include <algorithm>

#include "advkit/errors.hpp"

namespace advkit::strings {

namespace {

bool at_least(SymbolView s, SymbolView y) {
  return !std::lexicographical_compare(s.begin(), s.end(), y.begin(), y.end());
}

void require_quarters(SymbolView x, SymbolView y) {
  if (x.size() % 4 != 0) throw InvalidArgument("minsub: |x| must be divisible by 4");
  if (2 * y.size() != x.size()) throw InvalidArgument("minsub: |y| must equal |x|/2");
}

// First and last starts of `pattern` fully inside x[lo, lo + len).
std::pair<std::optional<std::size_t>, std::optional<std::size_t>> occurrences(SymbolView x, std::size_t lo,
                                                                              std::size_t len, SymbolView pattern) {
  std::optional<std::size_t> first;
  std::optional<std::size_t> last;
  if (pattern.size() > len) return {first, last};
  for (std::size_t s = lo; s + pattern.size() <= lo + len; ++s) {
    if (std::equal(pattern.begin(), pattern.end(), x.begin() + static_cast<std::ptrdiff_t>(s))) {
      if (!first) first = s;
      last = s;
    }
  }
  return {first, last};
}

}  // namespace

bool minsub_decide(SymbolView x, SymbolView y) {
  if (y.size() > x.size()) throw InvalidArgument("minsub: |y| exceeds |x|");
  for (std::size_t s = 0; s + y.size() <= x.size(); ++s) {
    if (!at_least(x.subspan(s, y.size()), y)) return false;
  }
  return true;
}

bool minsub_cross(SymbolView x, SymbolView y) {
  require_quarters(x, y);
  const std::size_t l = y.size();
  SymbolView head = y.first(x.size() / 4);
  for (std::size_t s = 0; s + l <= x.size(); ++s) {
    SymbolView sub = x.subspan(s, l);
    if (std::equal(head.begin(), head.end(), sub.begin()) && !at_least(sub, y)) return false;
  }
  return true;
}

MinsubPositions minsub_positions(SymbolView x, SymbolView y) {
  require_quarters(x, y);
  const std::size_t q = x.size() / 4;
  SymbolView head = y.first(q);
  auto [u1, v1] = occurrences(x, 0, 2 * q, head);
  auto [u2, v2] = occurrences(x, q, 2 * q, head);
  return {u1, v1, u2, v2};
}

bool minsub_cross_from_positions(SymbolView x, SymbolView y, const MinsubPositions& pos) {
  const std::size_t l = y.size();
  for (const auto& p : {pos.u1, pos.v1, pos.u2, pos.v2}) {
    if (!p || *p + l > x.size()) continue;
    if (!at_least(x.subspan(*p, l), y)) return false;
  }
  return true;
}

bool minsub_recurrence_rhs(SymbolView x, SymbolView y) {
  require_quarters(x, y);
  const std::size_t q = x.size() / 4;
  SymbolView head = y.first(q);
  return minsub_decide(x.first(2 * q), head) && minsub_decide(x.subspan(q, 2 * q), head) &&
         minsub_cross_from_positions(x, y, minsub_positions(x, y));
}

bool minsub_divide(SymbolView x, SymbolView y) {
  if (x.size() < 4 || x.size() % 4 != 0 || 2 * y.size() != x.size()) return minsub_decide(x, y);
  const std::size_t q = x.size() / 4;
  SymbolView head = y.first(q);
  return minsub_divide(x.first(2 * q), head) && minsub_divide(x.subspan(q, 2 * q), head) &&
         minsub_cross_from_positions(x, y, minsub_positions(x, y));
}

bool rotation_decide(SymbolView x, std::size_t i) {
  const std::size_t n = x.size();
  if (i >= n) throw InvalidArgument("rotation: index out of range");
  SymbolString xx(x.begin(), x.end());
  xx.insert(xx.end(), x.begin(), x.end());
  SymbolView rot = SymbolView(xx).subspan(i, n);
  return minsub_decide(xx, rot);
}

bool suffix_decide(SymbolView x, std::size_t i) {
  const std::size_t n = x.size();
  if (i >= n) throw InvalidArgument("suffix: index out of range");
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const Symbol zero = *lo - 1;
  const Symbol one = *hi + 1;
  SymbolString big;
  big.push_back(one);
  big.insert(big.end(), x.begin(), x.end());
  big.insert(big.end(), n - 1, zero);
  SymbolString target(x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  target.insert(target.end(), i, zero);
  return minsub_decide(big, target);
}

bool rotation_brute(SymbolView x, std::size_t i) {
  const std::size_t n = x.size();
  if (i >= n) throw InvalidArgument("rotation: index out of range");
  auto rotation = [&](std::size_t r) {
    SymbolString out(x.begin() + static_cast<std::ptrdiff_t>(r), x.end());
    out.insert(out.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
    return out;
  };
  SymbolString mine = rotation(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (rotation(j) < mine) return false;
  }
  return true;
}

bool suffix_brute(SymbolView x, std::size_t i) {
  const std::size_t n = x.size();
  if (i >= n) throw InvalidArgument("suffix: index out of range");
  SymbolView mine = x.subspan(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    SymbolView other = x.subspan(j);
    if (!std::lexicographical_compare(mine.begin(), mine.end(), other.begin(), other.end())) return false;
  }
  return true;
}

bool minsub_decide(const QueryString& x, const QueryString& y) { return minsub_decide(x.read_all(), y.read_all()); }

}  // namespace advkit::strings
