#include "advkit/funcore.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "advkit/errors.hpp"

namespace advkit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw InvalidArgument("alphabet symbols must be non-empty");
    if (!seen.insert(s).second) throw InvalidArgument("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

std::optional<std::size_t> Alphabet::index_of(std::string_view token) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == token) return i;
  }
  return std::nullopt;
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

// ---------------------------------------------------------- FiniteFunction

FiniteFunction::FiniteFunction(Alphabet alphabet, std::size_t arity, std::vector<Word> domain,
                               std::vector<std::string> codomain, std::vector<std::size_t> table)
    : alphabet_(std::move(alphabet)),
      arity_(arity),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(std::move(table)) {
  if (arity_ == 0) throw InvalidArgument("arity must be positive");
  if (alphabet_.size() == 0) throw InvalidArgument("alphabet must be non-empty");
  if (table_.size() != domain_.size()) throw InvalidArgument("table must be total on the domain");
  {
    std::set<std::string> seen;
    for (const auto& c : codomain_) {
      if (!seen.insert(c).second) throw InvalidArgument("duplicate codomain value '" + c + "'");
    }
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    const Word& w = domain_[i];
    if (w.size() != arity_) throw InvalidArgument("domain word length differs from arity");
    for (std::size_t s : w) {
      if (s >= alphabet_.size()) throw InvalidArgument("domain word uses a symbol outside the alphabet");
    }
    if (table_[i] >= codomain_.size()) throw InvalidArgument("table value outside the codomain");
    if (!index_.emplace(w, i).second) throw InvalidArgument("duplicate domain element " + label(i));
  }
}

bool FiniteFunction::is_boolean() const noexcept {
  if (codomain_.size() != 2) return false;
  return (codomain_[0] == "0" && codomain_[1] == "1") || (codomain_[0] == "1" && codomain_[1] == "0");
}

bool FiniteFunction::boolean_value(std::size_t i) const {
  if (!is_boolean()) throw InvalidArgument("function is not Boolean");
  return output(i) == "1";
}

std::optional<std::size_t> FiniteFunction::find(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteFunction::label(std::size_t i) const {
  const Word& w = domain_.at(i);
  std::string out;
  const bool compact = alphabet_.single_char();
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!compact && j > 0) out += ' ';
    out += alphabet_.symbol(w[j]);
  }
  return out;
}

std::vector<std::string> FiniteFunction::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(label(i));
  return out;
}

FiniteFunction FiniteFunction::restricted(std::span<const std::size_t> keep) const {
  std::vector<Word> dom;
  std::vector<std::size_t> tab;
  for (std::size_t i : keep) {
    dom.push_back(domain_.at(i));
    tab.push_back(table_.at(i));
  }
  return FiniteFunction(alphabet_, arity_, std::move(dom), codomain_, std::move(tab));
}

void enforce_sdp_cap(const FiniteFunction& f) {
  if (f.size() * f.arity() > kSdpCap) {
    throw CapExceeded("|D|*n = " + std::to_string(f.size() * f.arity()) + " exceeds the cap of " +
                      std::to_string(kSdpCap));
  }
}

// ------------------------------------------------------------- text format

FiniteFunction load_function(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> arity;
  std::optional<std::vector<std::string>> codomain;
  bool domain_all = false;
  std::size_t domain_all_line = 0;

  struct Row {
    Word word;
    std::size_t value;
    std::size_t line;
  };
  std::vector<Row> rows;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::string_view arrow = "->";
    auto arrow_pos = line.find(arrow);
    if (arrow_pos == std::string_view::npos) {
      arrow = "\xE2\x86\x92";  // U+2192
      arrow_pos = line.find(arrow);
    }

    if (arrow_pos == std::string_view::npos) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value' or a table row");
      const std::string key{trim(line.substr(0, colon))};
      const auto value = trim(line.substr(colon + 1));
      if (!rows.empty()) throw ParseError(line_no, "header '" + key + "' after table rows");
      if (key == "alphabet") {
        try {
          alphabet = Alphabet(split_ws(value));
        } catch (const InvalidArgument& e) {
          throw ParseError(line_no, e.what());
        }
        if (alphabet->size() == 0) throw ParseError(line_no, "empty alphabet");
      } else if (key == "arity") {
        try {
          std::size_t pos = 0;
          const std::string v{value};
          const long long n = std::stoll(v, &pos);
          if (pos != v.size() || n <= 0) throw std::invalid_argument("arity");
          arity = static_cast<std::size_t>(n);
        } catch (const std::exception&) {
          throw ParseError(line_no, "arity must be a positive integer");
        }
      } else if (key == "codomain") {
        auto tokens = split_ws(value);
        std::set<std::string> seen(tokens.begin(), tokens.end());
        if (tokens.empty() || seen.size() != tokens.size()) {
          throw ParseError(line_no, "codomain must list distinct values");
        }
        codomain = std::move(tokens);
      } else if (key == "domain") {
        if (value != "all") throw ParseError(line_no, "only 'domain: all' is supported");
        domain_all = true;
        domain_all_line = line_no;
      } else {
        throw ParseError(line_no, "unknown header '" + key + "'");
      }
      continue;
    }

    if (!alphabet || !arity || !codomain) {
      throw ParseError(line_no, "table row before alphabet, arity and codomain headers");
    }
    auto lhs = split_ws(line.substr(0, arrow_pos));
    auto rhs = split_ws(line.substr(arrow_pos + arrow.size()));
    if (rhs.size() != 1) throw ParseError(line_no, "expected exactly one output value");
    if (lhs.size() == 1 && *arity > 1 && alphabet->single_char() && lhs[0].size() == *arity) {
      std::vector<std::string> chars;
      for (char c : lhs[0]) chars.emplace_back(1, c);
      lhs = std::move(chars);
    }
    if (lhs.size() != *arity) {
      throw ParseError(line_no, "word has " + std::to_string(lhs.size()) + " symbols, arity is " +
                                    std::to_string(*arity));
    }
    Word w;
    for (const auto& tok : lhs) {
      auto idx = alphabet->index_of(tok);
      if (!idx) throw ParseError(line_no, "symbol '" + tok + "' is not in the alphabet");
      w.push_back(*idx);
    }
    auto vit = std::find(codomain->begin(), codomain->end(), rhs[0]);
    if (vit == codomain->end()) throw ParseError(line_no, "value '" + rhs[0] + "' is not in the codomain");
    for (const Row& r : rows) {
      if (r.word == w) {
        throw ParseError(line_no, "duplicate domain element (first listed on line " +
                                      std::to_string(r.line) + ")");
      }
    }
    rows.push_back({std::move(w), static_cast<std::size_t>(vit - codomain->begin()), line_no});
  }

  if (!alphabet || !arity || !codomain) throw ParseError(line_no, "missing alphabet, arity or codomain header");

  std::vector<Word> domain;
  std::vector<std::size_t> table;
  if (domain_all) {
    domain = functions::all_words(*alphabet, *arity);
    table.assign(domain.size(), 0);
    std::vector<bool> filled(domain.size(), false);
    std::map<Word, std::size_t> pos;
    for (std::size_t i = 0; i < domain.size(); ++i) pos.emplace(domain[i], i);
    for (const Row& r : rows) {
      const std::size_t i = pos.at(r.word);
      table[i] = r.value;
      filled[i] = true;
    }
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (!filled[i]) throw ParseError(domain_all_line, "'domain: all' but some words have no row");
    }
  } else {
    for (Row& r : rows) {
      domain.push_back(std::move(r.word));
      table.push_back(r.value);
    }
    if (domain.empty()) throw ParseError(line_no, "empty domain");
  }
  return FiniteFunction(std::move(*alphabet), *arity, std::move(domain), std::move(*codomain),
                        std::move(table));
}

FiniteFunction load_function_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open function file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_function(buf.str());
}

std::string serialize_function(const FiniteFunction& f) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += v[i];
    }
    return s;
  };
  out << "alphabet: " << join(f.alphabet().symbols()) << '\n';
  out << "arity: " << f.arity() << '\n';
  out << "codomain: " << join(f.codomain()) << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Word& w = f.word(i);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) out << ' ';
      out << f.alphabet().symbol(w[j]);
    }
    out << " -> " << f.output(i) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- matrices

std::pair<GramMatrix, DifferenceMasks> gram_and_masks(const FiniteFunction& f) {
  const auto d = static_cast<Eigen::Index>(f.size());
  GramMatrix gram{Eigen::MatrixXd::Zero(d, d)};
  DifferenceMasks masks;
  masks.masks.assign(f.arity(), Eigen::MatrixXd::Zero(d, d));
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index y = 0; y < d; ++y) {
      const auto xi = static_cast<std::size_t>(x);
      const auto yi = static_cast<std::size_t>(y);
      gram.entries(x, y) = f.output_index(xi) == f.output_index(yi) ? 1.0 : 0.0;
      const Word& wx = f.word(xi);
      const Word& wy = f.word(yi);
      for (std::size_t j = 0; j < f.arity(); ++j) {
        masks.masks[j](x, y) = wx[j] != wy[j] ? 1.0 : 0.0;
      }
    }
  }
  return {std::move(gram), std::move(masks)};
}

// ------------------------------------------------------------- combinators

namespace {

const std::vector<std::string> kBoolCodomain{"0", "1"};

void require_boolean(const FiniteFunction& f, const char* who) {
  if (!f.is_boolean()) throw InvalidArgument(std::string(who) + ": function codomain must be {0,1}");
}

FiniteFunction combine_product(const FiniteFunction& f1, const FiniteFunction& f2, bool is_or) {
  require_boolean(f1, is_or ? "build_or" : "build_and");
  require_boolean(f2, is_or ? "build_or" : "build_and");
  if (!(f1.alphabet() == f2.alphabet())) throw InvalidArgument("combined functions must share an alphabet");
  std::vector<Word> dom;
  std::vector<std::size_t> tab;
  dom.reserve(f1.size() * f2.size());
  for (std::size_t x = 0; x < f1.size(); ++x) {
    for (std::size_t y = 0; y < f2.size(); ++y) {
      Word w = f1.word(x);
      w.insert(w.end(), f2.word(y).begin(), f2.word(y).end());
      dom.push_back(std::move(w));
      const bool a = f1.boolean_value(x);
      const bool b = f2.boolean_value(y);
      tab.push_back((is_or ? (a || b) : (a && b)) ? 1 : 0);
    }
  }
  return FiniteFunction(f1.alphabet(), f1.arity() + f2.arity(), std::move(dom), kBoolCodomain,
                        std::move(tab));
}

}  // namespace

FiniteFunction build_or(const FiniteFunction& f1, const FiniteFunction& f2) {
  return combine_product(f1, f2, true);
}

FiniteFunction build_and(const FiniteFunction& f1, const FiniteFunction& f2) {
  return combine_product(f1, f2, false);
}

FiniteFunction build_switch(const FiniteFunction& f,
                            const std::map<std::string, FiniteFunction>& g_family) {
  std::vector<std::size_t> tab(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const std::string& s = f.output(x);
    auto it = g_family.find(s);
    if (it == g_family.end()) throw InvalidArgument("build_switch: no g_s for attained value '" + s + "'");
    const FiniteFunction& g = it->second;
    require_boolean(g, "build_switch");
    if (!(g.alphabet() == f.alphabet()) || g.arity() != f.arity()) {
      throw InvalidArgument("build_switch: g_" + s + " is not on the domain of f");
    }
    auto gx = g.find(f.word(x));
    if (!gx) throw InvalidArgument("build_switch: g_" + s + " is undefined on " + f.label(x));
    tab[x] = g.boolean_value(*gx) ? 1 : 0;
  }
  return FiniteFunction(f.alphabet(), f.arity(), f.domain(), kBoolCodomain, std::move(tab));
}

FiniteFunction negate(const FiniteFunction& f) {
  require_boolean(f, "negate");
  std::vector<std::size_t> tab(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) tab[x] = f.boolean_value(x) ? 0 : 1;
  return FiniteFunction(f.alphabet(), f.arity(), f.domain(), kBoolCodomain, std::move(tab));
}

FiniteFunction pointwise_and(const FiniteFunction& f1, const FiniteFunction& f2) {
  require_boolean(f1, "pointwise_and");
  require_boolean(f2, "pointwise_and");
  if (f1.domain() != f2.domain() || !(f1.alphabet() == f2.alphabet())) {
    throw InvalidArgument("pointwise_and: functions must share a domain");
  }
  std::vector<std::size_t> tab(f1.size());
  for (std::size_t x = 0; x < f1.size(); ++x) {
    tab[x] = (f1.boolean_value(x) && f2.boolean_value(x)) ? 1 : 0;
  }
  return FiniteFunction(f1.alphabet(), f1.arity(), f1.domain(), kBoolCodomain, std::move(tab));
}

// ---------------------------------------------------------------- library

namespace functions {

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t arity) {
  std::vector<Word> out;
  const std::size_t k = alphabet.size();
  Word w(arity, 0);
  while (true) {
    out.push_back(w);
    std::size_t j = arity;
    while (j > 0) {
      --j;
      if (++w[j] < k) break;
      w[j] = 0;
      if (j == 0) return out;
    }
    if (arity == 0) return out;
  }
}

FiniteFunction from_truth_table(std::size_t arity, const std::vector<int>& bits) {
  auto dom = all_words(Alphabet::binary(), arity);
  if (bits.size() != dom.size()) throw InvalidArgument("truth table size must be 2^arity");
  std::vector<std::size_t> tab;
  for (int b : bits) tab.push_back(b ? 1 : 0);
  return FiniteFunction(Alphabet::binary(), arity, std::move(dom), kBoolCodomain, std::move(tab));
}

namespace {
template <class Pred>
FiniteFunction boolean_from_predicate(std::size_t n, Pred pred) {
  auto dom = all_words(Alphabet::binary(), n);
  std::vector<int> bits;
  for (const Word& w : dom) bits.push_back(pred(w) ? 1 : 0);
  return from_truth_table(n, bits);
}
}  // namespace

FiniteFunction or_n(std::size_t n) {
  return boolean_from_predicate(n, [](const Word& w) {
    return std::any_of(w.begin(), w.end(), [](std::size_t s) { return s == 1; });
  });
}

FiniteFunction and_n(std::size_t n) {
  return boolean_from_predicate(n, [](const Word& w) {
    return std::all_of(w.begin(), w.end(), [](std::size_t s) { return s == 1; });
  });
}

FiniteFunction xor_n(std::size_t n) {
  return boolean_from_predicate(n, [](const Word& w) {
    return std::count(w.begin(), w.end(), std::size_t{1}) % 2 == 1;
  });
}

FiniteFunction identity_bit() { return from_truth_table(1, {0, 1}); }

FiniteFunction constant(std::size_t arity, int bit) {
  return boolean_from_predicate(arity, [bit](const Word&) { return bit != 0; });
}

FiniteFunction coordinate(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InvalidArgument("coordinate index out of range");
  return boolean_from_predicate(arity, [index](const Word& w) { return w[index] == 1; });
}

FiniteFunction random_boolean(std::size_t arity, CounterRng& rng) {
  return random_valued(arity, 2, rng);
}

FiniteFunction random_valued(std::size_t arity, std::size_t values, CounterRng& rng) {
  if (values == 0) throw InvalidArgument("random_valued needs at least one value");
  auto dom = all_words(Alphabet::binary(), arity);
  std::vector<std::string> cod;
  for (std::size_t v = 0; v < values; ++v) cod.push_back(std::to_string(v));
  if (values == 1) cod = {"0", "1"};  // keep a Boolean codomain for the constant case
  std::vector<std::size_t> tab;
  for (std::size_t i = 0; i < dom.size(); ++i) tab.push_back(values == 1 ? 0 : rng.uniform(values));
  return FiniteFunction(Alphabet::binary(), arity, std::move(dom), std::move(cod), std::move(tab));
}

}  // namespace functions

}  // namespace advkit
