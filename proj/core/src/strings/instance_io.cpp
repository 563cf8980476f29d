#include "advkit/strings/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "advkit/errors.hpp"

namespace advkit::strings {

namespace {

bool parse_int(std::string_view t, Symbol& out) {
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view body) {
  std::vector<std::string> out;
  std::istringstream in{std::string(body)};
  for (std::string t; in >> t;) out.push_back(t);
  if (out.size() == 1 && out[0].size() > 1 && out[0][0] != '-') {
    std::string word = out[0];
    out.clear();
    for (char c : word) out.emplace_back(1, c);
  }
  return out;
}

std::vector<SymbolString> encode_tokens(const std::vector<std::vector<std::string>>& lists,
                                        std::vector<std::pair<Symbol, std::string>>* names) {
  bool integers = true;
  std::map<std::string, Symbol> rank;
  for (const auto& list : lists) {
    for (const auto& t : list) {
      if (t == "*") continue;
      Symbol v = 0;
      if (!parse_int(t, v)) integers = false;
      rank.emplace(t, 0);
    }
  }
  Symbol next = 0;
  for (auto& [t, r] : rank) r = next++;
  std::vector<SymbolString> out;
  std::map<Symbol, std::string> seen;
  for (const auto& list : lists) {
    SymbolString s;
    for (const auto& t : list) {
      Symbol v = kStar;
      if (t != "*") {
        if (integers) {
          parse_int(t, v);
        } else {
          v = rank.at(t);
        }
      }
      seen.emplace(v, t);
      s.push_back(v);
    }
    out.push_back(std::move(s));
  }
  if (names) names->assign(seen.begin(), seen.end());
  return out;
}

std::string StringInstance::token(Symbol s) const {
  for (const auto& [v, t] : names) {
    if (v == s) return t;
  }
  return is_star(s) ? "*" : std::to_string(s);
}

std::string StringInstance::format(SymbolView s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += token(s[i]);
  }
  return out;
}

StringInstance load_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<std::string, std::vector<std::string>> fields;
  std::map<std::string, std::size_t> field_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = line;
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    if (v.empty() || v.front() == '#') continue;
    auto colon = v.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'string:', 'x:' or 'y:'");
    std::string key(v.substr(0, colon));
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (key != "string" && key != "x" && key != "y") throw ParseError(line_no, "unknown field '" + key + "'");
    if (fields.count(key)) throw ParseError(line_no, "duplicate field '" + key + "'");
    fields[key] = tokenize(v.substr(colon + 1));
    field_line[key] = line_no;
  }
  if (fields.empty()) throw ParseError(line_no, "no string found");
  if (fields.count("string") && (fields.count("x") || fields.count("y"))) {
    throw ParseError(field_line["string"], "'string:' cannot be combined with 'x:'/'y:'");
  }
  std::vector<std::string> keys;
  std::vector<std::vector<std::string>> lists;
  for (auto& [k, toks] : fields) {
    keys.push_back(k);
    lists.push_back(toks);
  }
  StringInstance inst;
  auto encoded = encode_tokens(lists, &inst.names);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == "string") inst.string = encoded[i];
    if (keys[i] == "x") inst.x = encoded[i];
    if (keys[i] == "y") inst.y = encoded[i];
  }
  return inst;
}

StringInstance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open instance file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize_instance(const StringInstance& inst) {
  std::string out;
  if (inst.string) out += "string: " + inst.format(*inst.string) + "\n";
  if (inst.x) out += "x: " + inst.format(*inst.x) + "\n";
  if (inst.y) out += "y: " + inst.format(*inst.y) + "\n";
  return out;
}

}  // namespace advkit::strings
