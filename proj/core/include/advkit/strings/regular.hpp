#pragma once

// Membership of x ∈ {0,1,2}^n in Σ*20*2Σ*: does x contain a substring 20*2?

#include "advkit/strings/query_string.hpp"

namespace advkit::strings {

/// Linear scan. Throws InvalidArgument on symbols outside {0,1,2}.
bool regular_decide(SymbolView x);
/// Reads every position once.
bool regular_decide(const QueryString& x);

/// Cross term g_n: a 20*2 with its first 2 in the left half x[0, ⌈n/2⌉) and
/// the second in the right half. Takes the last 2 of the left half and the
/// first 2 of the right half and checks the gap is all zeros.
bool regular_cross(SymbolView x);
/// Reads outward from the split point only.
bool regular_cross(const QueryString& x);

/// g_n by definition: some pair i < ⌈n/2⌉ ≤ j with x_i = x_j = 2 and zeros between.
bool regular_cross_brute(SymbolView x);

/// Same value via the recursion f(x) = f(left) ∨ f(right) ∨ g(x).
bool regular_divide(SymbolView x);

}  // namespace advkit::strings
