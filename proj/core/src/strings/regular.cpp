#include "advkit/strings/regular.hpp"

#include <algorithm>
#include <optional>

#include "advkit/errors.hpp"

namespace advkit::strings {

namespace {

void check_symbol(Symbol s) {
  if (s < 0 || s > 2) throw InvalidArgument("regular: symbol " + std::to_string(s) + " is outside {0,1,2}");
}

// Scans x[i] for i moving away from the split; returns the first 2 and
// whether only zeros were seen before it.
template <typename Read>
std::optional<std::size_t> nearest_two(Read read, std::size_t count, bool& zeros_only) {
  zeros_only = true;
  for (std::size_t t = 0; t < count; ++t) {
    Symbol s = read(t);
    check_symbol(s);
    if (s == 2) return t;
    if (s != 0) zeros_only = false;
  }
  return std::nullopt;
}

template <typename Read>
bool cross_impl(Read read, std::size_t n) {
  const std::size_t h = left_half_size(n);
  bool left_zeros = false;
  bool right_zeros = false;
  auto left = nearest_two([&](std::size_t t) { return read(h - 1 - t); }, h, left_zeros);
  if (!left || !left_zeros) return false;
  auto right = nearest_two([&](std::size_t t) { return read(h + t); }, n - h, right_zeros);
  return right.has_value() && right_zeros;
}

}  // namespace

bool regular_decide(SymbolView x) {
  bool open = false;  // a 2 followed only by zeros so far
  for (Symbol s : x) {
    check_symbol(s);
    if (s == 2) {
      if (open) return true;
      open = true;
    } else if (s == 1) {
      open = false;
    }
  }
  return false;
}

bool regular_decide(const QueryString& x) { return regular_decide(x.read_all()); }

bool regular_cross(SymbolView x) {
  return cross_impl([&](std::size_t i) { return x[i]; }, x.size());
}

bool regular_cross(const QueryString& x) {
  return cross_impl([&](std::size_t i) { return x[i]; }, x.size());
}

bool regular_cross_brute(SymbolView x) {
  const std::size_t h = left_half_size(x.size());
  for (Symbol s : x) check_symbol(s);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = h; j < x.size(); ++j) {
      if (x[i] != 2 || x[j] != 2) continue;
      if (std::all_of(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.begin() + static_cast<std::ptrdiff_t>(j),
                      [](Symbol s) { return s == 0; })) {
        return true;
      }
    }
  }
  return false;
}

bool regular_divide(SymbolView x) {
  if (x.size() <= 1) return regular_decide(x);
  const std::size_t h = left_half_size(x.size());
  return regular_divide(x.first(h)) || regular_divide(x.subspan(h)) || regular_cross(x);
}

}  // namespace advkit::strings
