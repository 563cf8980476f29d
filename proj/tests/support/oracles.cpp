#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <regex>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

Word word(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c == '*' ? kStar : static_cast<Symbol>(c));
  return w;
}

bool common_subsequence_at_least(const Word& x, const Word& y, std::size_t k) {
  if (k == 0) return true;
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t)> pick = [&](std::size_t from) {
    if (idx.size() == k) {
      std::size_t pos = 0;
      for (std::size_t i : idx) {
        while (pos < y.size() && y[pos] != x[i]) ++pos;
        if (pos == y.size()) return false;
        ++pos;
      }
      return true;
    }
    for (std::size_t i = from; i < x.size(); ++i) {
      idx.push_back(i);
      if (pick(i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return pick(0);
}

namespace {

// Calls visit(values) for every increasing non-* subsequence of x.
template <typename Visit>
void each_increasing(const Word& x, Visit visit) {
  const std::size_t n = x.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    Word v;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (x[i] == kStar || (!v.empty() && v.back() >= x[i])) ok = false;
      v.push_back(x[i]);
    }
    if (ok) visit(v);
  }
}

}  // namespace

std::size_t longest_increasing(const Word& x) {
  std::size_t best = 0;
  each_increasing(x, [&](const Word& v) { best = std::max(best, v.size()); });
  return best;
}

std::optional<Symbol> min_last(const Word& x, std::size_t j) {
  std::optional<Symbol> best;
  each_increasing(x, [&](const Word& v) {
    if (v.size() == j && (!best || v.back() < *best)) best = v.back();
  });
  return best;
}

std::optional<Symbol> max_first(const Word& x, std::size_t j) {
  std::optional<Symbol> best;
  each_increasing(x, [&](const Word& v) {
    if (v.size() == j && (!best || v.front() > *best)) best = v.front();
  });
  return best;
}

bool contains_two_zeros_two(const Word& x) {
  std::string s;
  for (Symbol v : x) s += static_cast<char>('0' + v);
  return std::regex_search(s, std::regex("20*2"));
}

bool minimal_substring(const Word& x, const Word& y) {
  for (std::size_t i = 0; i + y.size() <= x.size(); ++i) {
    if (std::lexicographical_compare(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + y.size()),
                                     y.begin(), y.end())) {
      return false;
    }
  }
  return true;
}

bool minimal_rotation(const Word& x, std::size_t i) {
  Word target = x;
  std::rotate(target.begin(), target.begin() + static_cast<long>(i), target.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Word r = x;
    std::rotate(r.begin(), r.begin() + static_cast<long>(j), r.end());
    if (r < target) return false;
  }
  return true;
}

bool minimal_suffix(const Word& x, std::size_t i) {
  Word target(x.begin() + static_cast<long>(i), x.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i && !(target < Word(x.begin() + static_cast<long>(j), x.end()))) return false;
  }
  return true;
}

std::vector<std::vector<bool>> signature(const Word& x, const Word& y, std::size_t m) {
  const std::size_t n = x.size();
  auto block = [&](std::size_t pos) {
    std::size_t b = 0;
    while ((b + 1) * n / m <= pos) ++b;
    return b;
  };
  std::vector<std::vector<bool>> s(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i] == y[j]) s[block(i)][block(j)] = true;
    }
  }
  return s;
}

std::size_t critical_count(const std::vector<std::vector<bool>>& s) {
  const std::size_t m = s.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!s[i][j]) continue;
      bool partner = false;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          bool before = a < i && b < j;
          bool after = a > i && b > j;
          if (s[a][b] && (before || after)) partner = true;
        }
      }
      if (!partner) ++count;
    }
  }
  return count;
}

std::uint64_t split_factor(std::uint64_t p, std::uint64_t q) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  for (std::uint64_t m = 2;; ++m) {
    cpp_int lhs = pow(cpp_int(2 * m - 1), static_cast<unsigned>(q));
    cpp_int rhs = pow(cpp_int(m), static_cast<unsigned>(2 * p));
    if (lhs < rhs) return m;
  }
}

double expected_next(std::size_t x, std::size_t p) {
  double total = 0.0;
  for (std::size_t r = 1; r <= x; ++r) {
    if (r < p) total += static_cast<double>(x - r);
    if (r > p) total += static_cast<double>(r - 1);
  }
  return total / static_cast<double>(x);
}

}  // namespace oracle
