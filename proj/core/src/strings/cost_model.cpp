#include "advkit/strings/cost_model.hpp"

#include <array>

#include "advkit/errors.hpp"

namespace advkit::strings {

namespace {

constexpr std::array<Primitive, 5> kAll = {Primitive::search, Primitive::minimum, Primitive::string_match,
                                           Primitive::string_compare, Primitive::bipartite_distinctness};

}  // namespace

std::string primitive_name(Primitive p) {
  switch (p) {
    case Primitive::search: return "search";
    case Primitive::minimum: return "minimum";
    case Primitive::string_match: return "string_match";
    case Primitive::string_compare: return "string_compare";
    case Primitive::bipartite_distinctness: return "bipartite_distinctness";
  }
  return "?";
}

Primitive parse_primitive(std::string_view name) {
  for (Primitive p : kAll) {
    if (primitive_name(p) == name) return p;
  }
  throw InvalidArgument("unknown cost-model entry '" + std::string(name) + "'");
}

CostEntry cost_entry(Primitive p) {
  const Rational half(1, 2);
  switch (p) {
    case Primitive::search: return {p, primitive_name(p), "O(sqrt(n))", BoundClass::poly_log(half)};
    case Primitive::minimum: return {p, primitive_name(p), "O(sqrt(n))", BoundClass::poly_log(half)};
    case Primitive::string_match:
      return {p, primitive_name(p), "O~(sqrt(m) + sqrt(n)), m <= n", BoundClass::poly_log(half, 0, true)};
    case Primitive::string_compare: return {p, primitive_name(p), "O(sqrt(n))", BoundClass::poly_log(half)};
    case Primitive::bipartite_distinctness:
      return {p, primitive_name(p), "O(n^(2/3)), m <= n", BoundClass::poly_log(Rational(2, 3))};
  }
  throw InvalidArgument("unknown cost-model entry");
}

BoundClass cost_model(Primitive p) { return cost_entry(p).cost; }

std::vector<CostEntry> cost_table() {
  std::vector<CostEntry> out;
  for (Primitive p : kAll) out.push_back(cost_entry(p));
  return out;
}

}  // namespace advkit::strings
