#include "advkit/compose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "advkit/csv.hpp"
#include "advkit/errors.hpp"

namespace advkit {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;

MatrixXd direct_sum(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out = MatrixXd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

std::vector<MatrixXd> hadamard_all(const std::vector<MatrixXd>& z, const MatrixXd& b) {
  std::vector<MatrixXd> out;
  out.reserve(z.size());
  for (const auto& zj : z) out.push_back(zj.cwiseProduct(b));
  return out;
}

double gamma2_value(const MatrixXd& a, const std::vector<MatrixXd>& z, const SolveOptions& o) {
  return gamma2_filtered(a, z, o).value;
}

std::string matrix_text(const MatrixXd& m) {
  std::ostringstream out;
  out << '[';
  for (Index r = 0; r < m.rows(); ++r) {
    if (r) out << "; ";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_number(m(r, c));
    }
  }
  out << ']';
  return out.str();
}

std::string table_text(const FiniteFunction& f) {
  std::string out;
  for (std::size_t x = 0; x < f.size(); ++x) out += f.output(x);
  return out;
}

}  // namespace

VectorSolution rescale_single_family(const VectorSolution& s, const FiniteFunction& f) {
  VectorSolution out = s;
  const auto [a0, a1] = class_weights(s, f);
  bool has0 = false;
  bool has1 = false;
  for (std::size_t x = 0; x < f.size(); ++x) (f.boolean_value(x) ? has1 : has0) = true;
  if (!has0 || !has1 || a1 <= 0.0) {
    // No pair constraints exist, so the zero solution is optimal.
    out.gram.setZero();
    out.value = 0.0;
    return out;
  }
  Eigen::VectorXd scale(s.gram.rows());
  const double r = std::sqrt(a1);
  for (std::size_t x = 0; x < s.rows; ++x) {
    for (std::size_t j = 0; j < s.arity; ++j) scale(s.u(x, j)) = f.boolean_value(x) ? 1.0 / r : r;
  }
  out.gram = scale.asDiagonal() * s.gram * scale.asDiagonal();
  out.value = std::sqrt(std::max(0.0, a0 * a1));
  return out;
}

ComposedSolution compose_or_vectors(const FiniteFunction& f1, const FiniteFunction& f2, const VectorSolution& sol1,
                                    const VectorSolution& sol2, double tol) {
  validate_single_family(sol1, f1, tol);
  validate_single_family(sol2, f2, tol);
  const VectorSolution r1 = rescale_single_family(sol1, f1);
  const VectorSolution r2 = rescale_single_family(sol2, f2);
  const FiniteFunction g = build_or(f1, f2);
  const std::size_t a1 = f1.arity();
  const std::size_t a2 = f2.arity();
  const std::size_t d2 = f2.size();

  ComposedSolution out;
  VectorSolution& s = out.solution;
  s.rows = g.size();
  s.cols = 0;
  s.arity = a1 + a2;
  s.families = 1;
  const auto dim = static_cast<Index>(s.rows * s.arity);
  s.gram = MatrixXd::Zero(dim, dim);

  // Row class of (x, x'): the first summand carries u¹ unless (f1, f2) = (0, 1);
  // the second carries u² only when f1(x) = 0.
  auto first = [&](std::size_t x, std::size_t xp) { return f1.boolean_value(x) || !f2.boolean_value(xp); };
  auto second = [&](std::size_t x) { return !f1.boolean_value(x); };

  for (std::size_t p = 0; p < s.rows; ++p) {
    const std::size_t x = p / d2;
    const std::size_t xp = p % d2;
    for (std::size_t q = 0; q < s.rows; ++q) {
      const std::size_t y = q / d2;
      const std::size_t yp = q % d2;
      if (first(x, xp) && first(y, yp)) {
        for (std::size_t k = 0; k < a1; ++k) {
          for (std::size_t l = 0; l < a1; ++l) s.gram(s.u(p, k), s.u(q, l)) = r1.gram(r1.u(x, k), r1.u(y, l));
        }
      }
      if (second(x) && second(y)) {
        for (std::size_t k = 0; k < a2; ++k) {
          for (std::size_t l = 0; l < a2; ++l) {
            s.gram(s.u(p, a1 + k), s.u(q, a1 + l)) = r2.gram(r2.u(xp, k), r2.u(yp, l));
          }
        }
      }
    }
  }
  const auto [w0, w1] = class_weights(s, g);
  out.a0 = w0;
  out.a1 = w1;
  out.value = std::sqrt(std::max(0.0, w0 * w1));
  s.value = out.value;
  return out;
}

ComposedSolution compose_and_vectors(const FiniteFunction& f1, const FiniteFunction& f2, const VectorSolution& sol1,
                                     const VectorSolution& sol2, double tol) {
  ComposedSolution out = compose_or_vectors(negate(f1), negate(f2), sol1, sol2, tol);
  std::swap(out.a0, out.a1);
  return out;
}

CheckReport verify_or_and_bound(const FiniteFunction& f1, const FiniteFunction& f2, const SolveOptions& options,
                                const std::string& id, OrAndValues* values) {
  const double tol = options.tol;
  OrAndValues v;
  v.adv1 = adv_value(f1, options).upper;
  v.adv2 = adv_value(f2, options).upper;
  const FiniteFunction g_or = build_or(f1, f2);
  const FiniteFunction g_and = build_and(f1, f2);
  v.adv_or = adv_value(g_or, options).upper;
  v.adv_and = adv_value(g_and, options).upper;
  const double bound = v.adv1 * v.adv1 + v.adv2 * v.adv2;

  std::ostringstream detail;
  detail << "f1=" << table_text(f1) << " f2=" << table_text(f2) << " adv1=" << format_number(v.adv1)
         << " adv2=" << format_number(v.adv2) << " adv_or=" << format_number(v.adv_or)
         << " adv_and=" << format_number(v.adv_and);

  CheckReport rep;
  rep.add(id + ":or-bound", v.adv_or * v.adv_or, bound + tol, detail.str());
  rep.add(id + ":and-equals-or", std::abs(v.adv_and - v.adv_or), 10.0 * tol, detail.str());

  const Gamma2Result s1 = adv_opt(f1, options);
  const Gamma2Result s2 = adv_opt(f2, options);
  const ComposedSolution c = compose_or_vectors(f1, f2, s1.solution, s2.solution, tol);
  v.composed = c.value;
  bool feasible = true;
  std::string why;
  try {
    validate_single_family(c.solution, g_or, 10.0 * tol);
  } catch (const InvalidCertificate& e) {
    feasible = false;
    why = e.what();
  }
  rep.add_exact(id + ":lambda-feasible", feasible, why.empty() ? detail.str() : why);
  rep.add(id + ":lambda-bound", c.value * c.value, bound + tol, detail.str());
  if (values) *values = v;
  return rep;
}

CheckReport verify_shared_and(const FiniteFunction& f1, const FiniteFunction& f2, const SolveOptions& options,
                              const std::string& id) {
  const double a1 = adv_value(f1, options).upper;
  const double a2 = adv_value(f2, options).upper;
  const double h = adv_value(pointwise_and(f1, f2), options).upper;
  CheckReport rep;
  rep.add(id + ":shared-and", h, std::sqrt(a1 * a1 + a2 * a2) + options.tol,
          "f1=" + table_text(f1) + " f2=" + table_text(f2));
  return rep;
}

SwitchDecomposition switch_block_decompose(const FiniteFunction& f,
                                           const std::map<std::string, FiniteFunction>& g_family) {
  const FiniteFunction h = build_switch(f, g_family);
  SwitchDecomposition dec;
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < f.codomain().size(); ++s) {
    std::vector<std::size_t> part;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f.output_index(x) == s) part.push_back(x);
    }
    if (part.empty()) continue;
    const std::string& value = f.codomain()[s];
    const FiniteFunction& g = g_family.at(value);
    auto [gg, gm] = gram_and_masks(g);
    const auto b = static_cast<Index>(part.size());
    MatrixXd block(b, b);
    std::vector<MatrixXd> masks(f.arity(), MatrixXd(b, b));
    for (Index i = 0; i < b; ++i) {
      for (Index k = 0; k < b; ++k) {
        const auto gi = static_cast<Index>(*g.find(f.word(part[static_cast<std::size_t>(i)])));
        const auto gk = static_cast<Index>(*g.find(f.word(part[static_cast<std::size_t>(k)])));
        block(i, k) = gg.entries(gi, gk);
        for (std::size_t j = 0; j < f.arity(); ++j) {
          masks[j](i, k) = f.word(part[static_cast<std::size_t>(i)])[j] != f.word(part[static_cast<std::size_t>(k)])[j]
                               ? 1.0
                               : 0.0;
        }
      }
    }
    order.insert(order.end(), part.begin(), part.end());
    dec.values.push_back(value);
    dec.parts.push_back(std::move(part));
    dec.g_blocks.push_back(std::move(block));
    dec.mask_blocks.push_back(std::move(masks));
  }

  // h'(x) = (f(x), h(x)); its Gram entry is 1 iff both coordinates agree.
  auto [fg, fm] = gram_and_masks(f);
  auto [hg, hm] = gram_and_masks(h);
  const auto d = static_cast<Index>(f.size());
  MatrixXd h_prime = fg.entries.cwiseProduct(hg.entries);

  MatrixXd sum_g = MatrixXd::Zero(d, d);
  MatrixXd sum_j = MatrixXd::Zero(d, d);
  std::vector<MatrixXd> sum_masks(f.arity(), MatrixXd::Zero(d, d));
  Index offset = 0;
  for (std::size_t s = 0; s < dec.parts.size(); ++s) {
    const auto b = static_cast<Index>(dec.parts[s].size());
    sum_g.block(offset, offset, b, b) = dec.g_blocks[s];
    sum_j.block(offset, offset, b, b).setOnes();
    for (std::size_t j = 0; j < f.arity(); ++j) sum_masks[j].block(offset, offset, b, b) = dec.mask_blocks[s][j];
    offset += b;
  }
  for (Index i = 0; i < d; ++i) {
    for (Index k = 0; k < d; ++k) {
      const auto pi = static_cast<Index>(order[static_cast<std::size_t>(i)]);
      const auto pk = static_cast<Index>(order[static_cast<std::size_t>(k)]);
      if (h_prime(pi, pk) != sum_g(i, k)) ++dec.mismatches;
      if (fg.entries(pi, pk) != sum_j(i, k)) ++dec.mismatches;
      for (std::size_t j = 0; j < f.arity(); ++j) {
        if (fm.masks[j](pi, pk) * fg.entries(pi, pk) != sum_masks[j](i, k)) ++dec.mismatches;
      }
    }
  }
  return dec;
}

CheckReport verify_switch_bound(const FiniteFunction& f, const std::map<std::string, FiniteFunction>& g_family,
                                const SolveOptions& options, const std::string& id) {
  const FiniteFunction h = build_switch(f, g_family);
  const double adv_h = adv_value(h, options).upper;
  const double gamma_f = adv_value(f, options).upper;
  double max_g = 0.0;
  std::ostringstream detail;
  detail << "f=" << table_text(f);
  for (const auto& value : f.codomain()) {
    auto it = g_family.find(value);
    if (it == g_family.end()) continue;
    const double a = adv_value(it->second, options).upper;
    max_g = std::max(max_g, a);
    detail << " g_" << value << '=' << table_text(it->second);
  }
  detail << " adv_h=" << format_number(adv_h) << " gamma2_f=" << format_number(gamma_f)
         << " max_adv_g=" << format_number(max_g);
  CheckReport rep;
  rep.add(id + ":switch-bound", adv_h, gamma_f + max_g + options.tol, detail.str());
  const SwitchDecomposition dec = switch_block_decompose(f, g_family);
  rep.add_exact(id + ":block-identities", dec.identities_hold(),
                std::to_string(dec.mismatches) + " mismatched entries");
  return rep;
}

CheckReport sweep_or_and(const OrAndSweep& sweep, const SolveOptions& options) {
  if (sweep.n1 == 0 || sweep.n2 == 0) throw InvalidArgument("arities must be positive");
  CheckReport rep;
  const CounterRng root(sweep.seed);
  for (std::size_t t = 0; t < sweep.trials; ++t) {
    CounterRng rng = root.derive(t);
    const std::size_t a = sweep.vary_arity ? 1 + rng.uniform(sweep.n1) : sweep.n1;
    const std::size_t b = sweep.vary_arity ? 1 + rng.uniform(sweep.n2) : sweep.n2;
    auto draw = [&](std::size_t arity) {
      while (true) {
        FiniteFunction f = functions::random_boolean(arity, rng);
        const auto& t = f.table();
        const bool constant = std::all_of(t.begin(), t.end(), [&](std::size_t v) { return v == t.front(); });
        if (!sweep.nonconstant || !constant) return f;
      }
    };
    const FiniteFunction f1 = draw(a);
    const FiniteFunction f2 = draw(b);
    rep.append(verify_or_and_bound(f1, f2, options, std::to_string(t)));
  }
  return rep;
}

CheckReport sweep_switch(const SwitchSweep& sweep, const SolveOptions& options) {
  if (sweep.max_values == 0) throw InvalidArgument("need at least one switch value");
  CheckReport rep;
  const CounterRng root(sweep.seed);
  for (std::size_t t = 0; t < sweep.trials; ++t) {
    CounterRng rng = root.derive(t);
    const std::size_t values = 1 + rng.uniform(sweep.max_values);
    const FiniteFunction f = functions::random_valued(sweep.arity, values, rng);
    std::map<std::string, FiniteFunction> family;
    for (const auto& s : f.codomain()) family.emplace(s, functions::random_boolean(sweep.arity, rng));
    rep.append(verify_switch_bound(f, family, options, std::to_string(t)));
  }
  return rep;
}

FactInstance random_fact_instance(const FactSweep& sweep, CounterRng& rng) {
  const Index r = sweep.rows;
  const Index c = sweep.cols;
  auto filters = [&]() {
    std::vector<MatrixXd> z(sweep.filters, MatrixXd::Zero(r, c));
    for (Index x = 0; x < r; ++x) {
      for (Index y = 0; y < c; ++y) {
        bool any = false;
        for (auto& zj : z) {
          if (rng.bernoulli(0.7)) {
            zj(x, y) = 0.5 + rng.uniform01();
            any = true;
          }
        }
        if (!any) z[rng.uniform(z.size())](x, y) = 1.0;
      }
    }
    return z;
  };
  FactInstance inst;
  inst.a = MatrixXd(r, c);
  inst.b = MatrixXd(r, c);
  for (Index x = 0; x < r; ++x) {
    for (Index y = 0; y < c; ++y) {
      inst.a(x, y) = 2.0 * rng.uniform01() - 1.0;
      // B has no zero entries, so every filter Z_j ∘ B keeps the program feasible.
      inst.b(x, y) = (rng.bernoulli(0.5) ? 1.0 : -1.0) * (0.5 + rng.uniform01());
    }
  }
  inst.z = filters();
  inst.y = filters();
  return inst;
}

CheckReport gamma2_fact_checks(const FactSweep& sweep, const SolveOptions& options) {
  if (sweep.rows <= 0 || sweep.cols <= 0 || sweep.filters == 0) throw InvalidArgument("empty fact instance");
  const double tol = options.tol;
  CheckReport rep;
  const CounterRng root(sweep.seed);
  for (std::size_t t = 0; t < sweep.trials; ++t) {
    CounterRng rng = root.derive(t);
    const FactInstance in = random_fact_instance(sweep, rng);
    const std::string id = std::to_string(t);
    const std::string detail = "A=" + matrix_text(in.a) + " B=" + matrix_text(in.b);

    const double ga = gamma2_value(in.a, in.z, options);
    const double gb = gamma2_value(in.b, in.z, options);
    rep.add(id + ":triangle", gamma2_value(in.a + in.b, in.z, options), ga + gb + tol, detail);

    const std::vector<MatrixXd> zb = hadamard_all(in.z, in.b);
    const double g_ab = gamma2_value(in.a.cwiseProduct(in.b), zb, options);
    const double g_a_zb = gamma2_value(in.a, zb, options);
    const double g_b = gamma2_value(in.b, {MatrixXd::Ones(in.b.rows(), in.b.cols())}, options);
    rep.add(id + ":hadamard-left", g_ab, ga + tol, detail);
    rep.add(id + ":hadamard-right", ga, g_a_zb * g_b + 2.0 * tol, detail);

    const double g_by = gamma2_value(in.b, in.y, options);
    std::vector<MatrixXd> sum_filters;
    for (std::size_t j = 0; j < in.z.size(); ++j) sum_filters.push_back(direct_sum(in.z[j], in.y[j]));
    const double g_sum = gamma2_value(direct_sum(in.a, in.b), sum_filters, options);
    rep.add(id + ":direct-sum", std::abs(g_sum - std::max(ga, g_by)), tol, detail);
  }
  return rep;
}

}  // namespace advkit
