#pragma once

// Explicit finite functions f: D ⊆ Σⁿ → E and the 0/1 matrices derived from
// them (Gram matrix of equal outputs, per-coordinate difference masks).

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "advkit/rng.hpp"

namespace advkit {

/// A word of Σⁿ as symbol indices into its Alphabet.
using Word = std::vector<std::size_t>;

/// Ordered list of distinct tokens; list position is the total order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  static Alphabet binary();

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view token) const;
  bool less(std::size_t a, std::size_t b) const noexcept { return a < b; }
  /// Every token is a single character, so words can be written unseparated.
  bool single_char() const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

class FiniteFunction {
 public:
  /// Validates every invariant: words have length `arity` over the alphabet,
  /// domain entries are distinct, the table is total and indexes the codomain.
  FiniteFunction(Alphabet alphabet, std::size_t arity, std::vector<Word> domain,
                 std::vector<std::string> codomain, std::vector<std::size_t> table);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return domain_.size(); }
  const std::vector<Word>& domain() const noexcept { return domain_; }
  const Word& word(std::size_t i) const { return domain_.at(i); }
  const std::vector<std::string>& codomain() const noexcept { return codomain_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t output_index(std::size_t i) const { return table_.at(i); }
  const std::string& output(std::size_t i) const { return codomain_.at(table_.at(i)); }

  /// Codomain is exactly the tokens {"0", "1"}.
  bool is_boolean() const noexcept;
  bool boolean_value(std::size_t i) const;

  std::optional<std::size_t> find(const Word& w) const;
  std::string label(std::size_t i) const;
  std::vector<std::string> labels() const;

  FiniteFunction restricted(std::span<const std::size_t> keep) const;

 private:
  Alphabet alphabet_;
  std::size_t arity_;
  std::vector<Word> domain_;
  std::vector<std::string> codomain_;
  std::vector<std::size_t> table_;
  std::map<Word, std::size_t> index_;
};

/// F[x,y] = 1 iff f(x) = f(y).
struct GramMatrix {
  Eigen::MatrixXd entries;
};

/// masks[j][x,y] = 1 iff x_j ≠ y_j.
struct DifferenceMasks {
  std::vector<Eigen::MatrixXd> masks;
};

/// Objects handed to the SDP module must satisfy |D|·n ≤ kSdpCap.
inline constexpr std::size_t kSdpCap = 2048;
void enforce_sdp_cap(const FiniteFunction& f);

/// Parses the text function format:
///
///     alphabet: 0 1
///     arity: 2
///     codomain: 0 1
///     domain: all          (optional)
///     0 0 -> 0
///     0 1 -> 1
///
/// Words may be written unseparated when every alphabet token is one
/// character. Blank lines and lines starting with '#' are ignored.
FiniteFunction load_function(std::string_view text);
FiniteFunction load_function_file(const std::filesystem::path& path);
std::string serialize_function(const FiniteFunction& f);

std::pair<GramMatrix, DifferenceMasks> gram_and_masks(const FiniteFunction& f);

/// g(x,y) = f1(x) ∨ f2(y) on the product domain D1 × D2 (x-major order).
FiniteFunction build_or(const FiniteFunction& f1, const FiniteFunction& f2);
/// g(x,y) = f1(x) ∧ f2(y).
FiniteFunction build_and(const FiniteFunction& f1, const FiniteFunction& f2);
/// h(x) = g_{f(x)}(x); g_family is keyed by codomain token of f.
FiniteFunction build_switch(const FiniteFunction& f,
                            const std::map<std::string, FiniteFunction>& g_family);
FiniteFunction negate(const FiniteFunction& f);
/// h(x) = f1(x) ∧ f2(x) over a shared domain.
FiniteFunction pointwise_and(const FiniteFunction& f1, const FiniteFunction& f2);

namespace functions {

/// All of {0,1}ⁿ in lexicographic order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t arity);

FiniteFunction from_truth_table(std::size_t arity, const std::vector<int>& bits);
FiniteFunction or_n(std::size_t n);
FiniteFunction and_n(std::size_t n);
FiniteFunction xor_n(std::size_t n);
FiniteFunction identity_bit();
FiniteFunction constant(std::size_t arity, int bit);
/// f(x) = x_{index}.
FiniteFunction coordinate(std::size_t arity, std::size_t index);
FiniteFunction random_boolean(std::size_t arity, CounterRng& rng);
/// Uniform table over {0, ..., values−1} on {0,1}^arity.
FiniteFunction random_valued(std::size_t arity, std::size_t values, CounterRng& rng);

}  // namespace functions

}  // namespace advkit
