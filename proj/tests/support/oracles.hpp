#pragma once

// Brute-force reference implementations used by the tests. They share only
// the symbol type with the library and are written for clarity, not speed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Symbol = std::int64_t;
using Word = std::vector<Symbol>;

inline constexpr Symbol kStar = INT64_MIN;

/// "abc" -> {'a','b','c'}; '*' maps to kStar.
Word word(const std::string& s);

/// Some k indices of x, taken in order, appear as a subsequence of y.
bool common_subsequence_at_least(const Word& x, const Word& y, std::size_t k);

/// Longest strictly increasing subsequence avoiding '*', by subset enumeration.
std::size_t longest_increasing(const Word& x);
std::optional<Symbol> min_last(const Word& x, std::size_t j);
std::optional<Symbol> max_first(const Word& x, std::size_t j);

/// x matches .*20*2.* (symbols 0, 1, 2).
bool contains_two_zeros_two(const Word& x);

/// Every |y|-length substring of x is ≥ y.
bool minimal_substring(const Word& x, const Word& y);
bool minimal_rotation(const Word& x, std::size_t i);
bool minimal_suffix(const Word& x, std::size_t i);

/// Block pair cells with a collision, blocks at ⌊i·n/m⌋.
std::vector<std::vector<bool>> signature(const Word& x, const Word& y, std::size_t m);
/// Relevant cells with no relevant compatible cell.
std::size_t critical_count(const std::vector<std::vector<bool>>& s);

/// Smallest m ≥ 2 with (2m − 1)^q < m^(2p), i.e. log_m √(2m−1) < p/q.
std::uint64_t split_factor(std::uint64_t p, std::uint64_t q);

/// E[next candidate count] for x distinct values and target rank p (1-based),
/// by listing every sample.
double expected_next(std::size_t x, std::size_t p);

}  // namespace oracle
