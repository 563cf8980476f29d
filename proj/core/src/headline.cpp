#include "advkit/recur.hpp"
#include "advkit/strings/cost_model.hpp"

namespace advkit {

namespace {

using strings::Primitive;
using strings::cost_model;

HeadlineRow make_row(std::string problem, std::optional<int> k, BoundClass derived, BoundClass stated,
                     std::string derivation) {
  HeadlineRow row{std::move(problem), k, derived, stated, std::move(derivation), false};
  row.match = same_class(derived, stated) && derived.tilde == stated.tilde;
  return row;
}

}  // namespace

std::vector<HeadlineRow> headline_bounds(int max_k) {
  const ExactReal two = ExactReal::from_rational(Rational(2));
  const std::vector<ExactReal> halves{two, two};
  std::vector<HeadlineRow> rows;

  // Two halves plus a cross check found by searching for the nearest 2 on each side.
  rows.push_back(make_row("regular", std::nullopt, strategy1_bound(halves, cost_model(Primitive::search)),
                          BoundClass::poly_log(Rational(1, 2), Rational(1, 2)),
                          "a(n)^2 <= 2 a(n/2)^2 + Q(search)^2"));

  // Overlapping halves plus string matching and ≤ 4 comparisons against y.
  BoundClass minsub_aux = dominant(cost_model(Primitive::string_match), cost_model(Primitive::string_compare));
  BoundClass minsub = strategy1_bound(halves, minsub_aux);
  const BoundClass soft_root = BoundClass::poly_log(Rational(1, 2), Rational(0), true);
  rows.push_back(make_row("minimal-substring", std::nullopt, minsub, soft_root,
                          "a(n)^2 <= 2 a(n/2)^2 + (Q(string_match) + Q(string_compare))^2"));
  rows.push_back(make_row("minimal-rotation", std::nullopt, minsub, soft_root,
                          "one minimal-substring instance on 2n symbols: (xx, rotation i)"));
  rows.push_back(make_row("minimal-suffix", std::nullopt, minsub, soft_root,
                          "one minimal-substring instance on 2n symbols: (1x0^(n-1), x[i..n]0^(i-1))"));

  const BoundClass search = cost_model(Primitive::search);
  BoundClass lis = search;
  for (int k = 1; k <= max_k; ++k) {
    std::string how = "a_1 = Q(search)";
    if (k > 1) {
      // min-last/max-first by randomized search: (a_{k-1} + sqrt n) log n.
      BoundClass aux = dominant(lis, search).times_log(Rational(1));
      lis = strategy1_bound(halves, aux);
      how = "a_k(n)^2 <= 2 a_k(n/2)^2 + (a_{k-1}(n) log n)^2";
    }
    rows.push_back(make_row("k-IS", k, lis, BoundClass::poly_log(Rational(1, 2), Rational(3 * (k - 1), 2)), how));
  }

  const std::uint64_t m = min_splitting_factor(Exponent::from_rational(Rational(2, 3)));
  const ExactReal coeff = critical_coefficient(m);
  const ExactReal shrink = ExactReal::from_rational(Rational(static_cast<long long>(m)));
  const BoundClass distinct = cost_model(Primitive::bipartite_distinctness);
  BoundClass kcs = distinct;
  for (int k = 1; k <= max_k; ++k) {
    std::string how = "a_1 = Q(bipartite_distinctness)";
    if (k > 1) {
      // Signature: m^2 distinctness calls; composite part: a_{k-1} log n.
      BoundClass aux = dominant(kcs.times_log(Rational(1)), distinct);
      kcs = strategy2_bound(coeff, shrink, aux);
      how = "a_k(n) <= sqrt(2m-1) a_k(n/m) + a_{k-1}(n) log n, m = " + std::to_string(m);
    }
    rows.push_back(make_row("k-CS", k, kcs, BoundClass::poly_log(Rational(2, 3), Rational(k - 1)), how));
  }
  return rows;
}

}  // namespace advkit
