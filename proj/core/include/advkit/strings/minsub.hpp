#pragma once

// Minimal length-l substring and the rotation / suffix problems reduced to it.
// Strings compare lexicographically by symbol value. Positions are 0-based.

#include <optional>

#include "advkit/strings/query_string.hpp"

namespace advkit::strings {

/// Every length-|y| substring of x is lexicographically ≥ y. Requires |y| ≤ |x|.
bool minsub_decide(SymbolView x, SymbolView y);

/// g_n: every length-n/2 substring of x starting with y[0, n/4) is ≥ y.
/// Requires 4 | n and |y| = n/2.
bool minsub_cross(SymbolView x, SymbolView y);

/// First/last starts of y[0, n/4) inside x[0, n/2) (u1, v1) and inside
/// x[n/4, 3n/4) (u2, v2), as positions in x. Absent when there is no occurrence.
struct MinsubPositions {
  std::optional<std::size_t> u1;
  std::optional<std::size_t> v1;
  std::optional<std::size_t> u2;
  std::optional<std::size_t> v2;
};
MinsubPositions minsub_positions(SymbolView x, SymbolView y);

/// Two-step cross term: the ≤ 4 candidate substrings at the positions above
/// compared against y.
bool minsub_cross_from_positions(SymbolView x, SymbolView y, const MinsubPositions& pos);

/// f_n(x, y) = f_{n/2}(x[0,n/2), y[0,n/4)) ∧ f_{n/2}(x[n/4,3n/4), y[0,n/4)) ∧ g_n(x, y)
/// with g_n from the positions. Falls back to brute force when 4 ∤ n.
bool minsub_divide(SymbolView x, SymbolView y);

/// Right side of the recurrence with brute-force halves and g_n from the positions.
bool minsub_recurrence_rhs(SymbolView x, SymbolView y);

/// x[i..n)x[0..i) ≤ every rotation, via f_{2n}(xx, rotation i).
bool rotation_decide(SymbolView x, std::size_t i);
/// x[i..n) < x[j..n) for all j ≠ i, via f_{2n}(1x0^{n−1}, x[i..n)0^{i}) where
/// 0 / 1 lie below / above every symbol of x.
bool suffix_decide(SymbolView x, std::size_t i);

/// Direct enumeration of all rotations / suffixes.
bool rotation_brute(SymbolView x, std::size_t i);
bool suffix_brute(SymbolView x, std::size_t i);

/// Counted versions: each reads its inputs once.
bool minsub_decide(const QueryString& x, const QueryString& y);

}  // namespace advkit::strings
