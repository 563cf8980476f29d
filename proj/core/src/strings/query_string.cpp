#include "advkit/strings/query_string.hpp"

#include <algorithm>

#include "advkit/errors.hpp"

namespace advkit::strings {

bool RemovalFilter::removes(Symbol s) const noexcept {
  if (is_star(s)) return false;
  switch (mode) {
    case RemovalMode::gt: return s > threshold;
    case RemovalMode::ge: return s >= threshold;
    case RemovalMode::lt: return s < threshold;
    case RemovalMode::le: return s <= threshold;
  }
  return false;
}

QueryString::QueryString() : QueryString(SymbolString{}) {}

QueryString::QueryString(SymbolString symbols)
    : data_(std::make_shared<const SymbolString>(std::move(symbols))), counter_(std::make_shared<std::uint64_t>(0)) {}

Symbol QueryString::operator[](std::size_t i) const {
  if (i >= data_->size()) throw InvalidArgument("QueryString: index out of range");
  ++*counter_;
  Symbol s = (*data_)[i];
  for (const auto& f : filters_) {
    if (f.removes(s)) return kStar;
  }
  return s;
}

SymbolString QueryString::read_all() const {
  SymbolString out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i];
  return out;
}

QueryString QueryString::with_filter(RemovalFilter filter) const {
  QueryString out = *this;
  if (std::find(filters_.begin(), filters_.end(), filter) == filters_.end()) out.filters_.push_back(filter);
  return out;
}

QueryString removal_transform(const QueryString& x, Symbol u, RemovalMode mode) {
  return x.with_filter({mode, u});
}

RemovalMode parse_removal_mode(const std::string& name) {
  if (name == "gt") return RemovalMode::gt;
  if (name == "ge") return RemovalMode::ge;
  if (name == "lt") return RemovalMode::lt;
  if (name == "le") return RemovalMode::le;
  throw InvalidArgument("unknown removal mode '" + name + "' (expected gt, ge, lt, le)");
}

BlockPartition BlockPartition::even(std::size_t n, std::size_t m) {
  if (m == 0) throw InvalidArgument("BlockPartition: m must be positive");
  if (n % m != 0) {
    throw InvalidArgument("BlockPartition: m = " + std::to_string(m) + " does not divide n = " + std::to_string(n));
  }
  return {n, m};
}

BlockPartition BlockPartition::balanced(std::size_t n, std::size_t m) {
  if (m == 0) throw InvalidArgument("BlockPartition: m must be positive");
  return {n, m};
}

std::size_t BlockPartition::block_of(std::size_t pos) const noexcept {
  if (n == 0) return 0;
  // Largest b with ⌊b·n/m⌋ ≤ pos.
  std::size_t b = ((pos + 1) * m - 1) / n;
  while (b > 0 && begin(b) > pos) --b;
  while (b + 1 < m && begin(b + 1) <= pos) ++b;
  return b;
}

std::size_t left_half_size(std::size_t n) noexcept { return (n + 1) / 2; }

}  // namespace advkit::strings
