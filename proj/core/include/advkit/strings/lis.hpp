#pragma once

// k-IS*: a strictly increasing subsequence of length k avoiding '*'.

#include <optional>

#include "advkit/strings/query_string.hpp"

namespace advkit::strings {

/// Length of the longest strictly increasing non-* subsequence.
std::size_t longest_increasing(SymbolView x);

bool lis_decide(SymbolView x, std::size_t k);
/// Reads every position once; removal filters apply.
bool lis_decide(const QueryString& x, std::size_t k);

/// Minimum value at the last index of some j-IS*; absent when there is none.
std::optional<Symbol> min_last(SymbolView x, std::size_t j);
/// Maximum value at the first index of some j-IS*.
std::optional<Symbol> max_first(SymbolView x, std::size_t j);

/// An (i + j)-IS* with i elements in x[0, ⌈n/2⌉) and j after:
/// min_last(left, i) < max_first(right, j).
bool lis_cross(SymbolView x, std::size_t i, std::size_t j);

/// Right side of LIS_k(x) = LIS_k(left) ∨ LIS_k(right) ∨ ⋁_{i<k} LIS_{(i,k−i)}(x).
bool lis_decompose(SymbolView x, std::size_t k);

/// Where min-last (or max-first) sits relative to a probe value u.
enum class Relation { less, equal, greater };
const char* relation_name(Relation r);

/// Two LIS calls on gt- and ge-removed views. (0,1) throws ImpossibleOracleAnswer.
Relation classify_min_last(const QueryString& x, std::size_t j, Symbol u);
/// Two LIS calls on lt- and le-removed views.
Relation classify_max_first(const QueryString& x, std::size_t j, Symbol u);

/// The table rows themselves, for a pair of LIS answers.
Relation min_last_table(bool lis_gt_removed, bool lis_ge_removed);
Relation max_first_table(bool lis_lt_removed, bool lis_le_removed);

}  // namespace advkit::strings
