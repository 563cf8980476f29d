#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace advkit::strings {

/// Symbols are ordered integers; '*' is a sentinel outside every alphabet.
using Symbol = std::int64_t;
using SymbolString = std::vector<Symbol>;
using SymbolView = std::span<const Symbol>;

inline constexpr Symbol kStar = std::numeric_limits<Symbol>::min();

inline bool is_star(Symbol s) noexcept { return s == kStar; }

/// "Turn into * when queried" for symbols above / at least / below / at most u.
enum class RemovalMode { gt, ge, lt, le };

struct RemovalFilter {
  RemovalMode mode;
  Symbol threshold;

  bool removes(Symbol s) const noexcept;
  bool operator==(const RemovalFilter&) const = default;
};

/// Read-counting view of a string. Copies and filtered views share the
/// underlying symbols and the query counter.
class QueryString {
 public:
  QueryString();
  explicit QueryString(SymbolString symbols);

  std::size_t size() const noexcept { return data_->size(); }

  /// Counted read with every removal filter applied.
  Symbol operator[](std::size_t i) const;
  /// Reads every position once.
  SymbolString read_all() const;

  /// Adding a filter already present is a no-op.
  QueryString with_filter(RemovalFilter filter) const;

  std::uint64_t queries() const noexcept { return *counter_; }
  void reset_queries() noexcept { *counter_ = 0; }

  /// Uncounted access for tests and reporting.
  const SymbolString& underlying() const noexcept { return *data_; }
  const std::vector<RemovalFilter>& filters() const noexcept { return filters_; }

 private:
  std::shared_ptr<const SymbolString> data_;
  std::shared_ptr<std::uint64_t> counter_;
  std::vector<RemovalFilter> filters_;
};

QueryString removal_transform(const QueryString& x, Symbol u, RemovalMode mode);

RemovalMode parse_removal_mode(const std::string& name);

/// Splits [0, n) into m contiguous blocks. Block sizes are ⌈n/m⌉ or ⌊n/m⌋
/// (boundaries ⌊i·n/m⌋).
struct BlockPartition {
  std::size_t n = 0;
  std::size_t m = 1;

  /// Throws InvalidArgument when m does not divide n.
  static BlockPartition even(std::size_t n, std::size_t m);
  static BlockPartition balanced(std::size_t n, std::size_t m);

  std::size_t begin(std::size_t block) const noexcept { return block * n / m; }
  std::size_t end(std::size_t block) const noexcept { return (block + 1) * n / m; }
  std::size_t size(std::size_t block) const noexcept { return end(block) - begin(block); }
  /// Block containing position pos.
  std::size_t block_of(std::size_t pos) const noexcept;
};

/// x[0, ⌈n/2⌉) and x[⌈n/2⌉, n).
std::size_t left_half_size(std::size_t n) noexcept;

}  // namespace advkit::strings
