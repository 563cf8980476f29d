#pragma once

// Query costs of the quantum primitives the string algorithms call. They are
// used only as symbolic classes in the input length n (every other size is
// at most n).

#include <string>
#include <string_view>
#include <vector>

#include "advkit/recur.hpp"

namespace advkit::strings {

enum class Primitive { search, minimum, string_match, string_compare, bipartite_distinctness };

struct CostEntry {
  Primitive primitive;
  std::string name;
  /// The cost as stated for the primitive's own sizes.
  std::string formula;
  BoundClass cost;
};

/// Throws InvalidArgument for an unknown name.
Primitive parse_primitive(std::string_view name);
std::string primitive_name(Primitive p);

CostEntry cost_entry(Primitive p);
BoundClass cost_model(Primitive p);
std::vector<CostEntry> cost_table();

}  // namespace advkit::strings
