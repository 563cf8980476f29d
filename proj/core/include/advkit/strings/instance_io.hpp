#pragma once

// String instance files:
//
//   string: 2 * 1 3          single string
//   x: a b                   paired instance
//   y: b a
//
// Tokens are whitespace-separated; '*' is the sentinel. A single token of
// several characters not starting with '-' is split into characters ("abab"
// is a b a b, "2012" is 2 0 1 2). When every token is an integer the integer values are
// the symbols; otherwise symbols are ranks in byte-wise token order, shared
// by x and y. Lines starting with '#' are comments.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advkit/strings/query_string.hpp"

namespace advkit::strings {

struct StringInstance {
  std::optional<SymbolString> string;
  std::optional<SymbolString> x;
  std::optional<SymbolString> y;
  /// Symbol value → token, for printing.
  std::vector<std::pair<Symbol, std::string>> names;

  std::string token(Symbol s) const;
  std::string format(SymbolView s) const;
};

/// Throws ParseError with the line number.
StringInstance load_instance(std::string_view text);
StringInstance load_instance_file(const std::filesystem::path& path);

/// Symbols of the given token lists, mapped jointly as in the file format.
std::vector<SymbolString> encode_tokens(const std::vector<std::vector<std::string>>& lists,
                                        std::vector<std::pair<Symbol, std::string>>* names = nullptr);

/// Splits one instance line body into tokens (with the character rule).
std::vector<std::string> tokenize(std::string_view body);

std::string serialize_instance(const StringInstance& inst);

}  // namespace advkit::strings
