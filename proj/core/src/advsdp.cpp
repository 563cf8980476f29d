#include "advkit/advsdp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "advkit/csv.hpp"
#include "advkit/errors.hpp"
#include "advkit/sdp_solver.hpp"

namespace advkit {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr std::size_t kMaxReportedEntries = 20;

/// The generic solver works to a tighter internal tolerance so that the
/// recomputed objective and residuals meet `tol` with room to spare.
sdp::Options solver_options(const SolveOptions& o) {
  if (!(o.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  return sdp::Options{o.tol * 1e-2, o.max_iterations};
}

double min_eigenvalue(const MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void check_psd(const MatrixXd& gram, double tol) {
  const double lmin = min_eigenvalue(gram);
  const double floor = -tol * std::max(1.0, gram.trace());
  if (lmin < floor) {
    std::ostringstream msg;
    msg << "Gram matrix is not positive semidefinite: minimum eigenvalue " << format_number(lmin);
    throw InvalidCertificate({}, msg.str());
  }
}

}  // namespace

double VectorSolution::row_weight(std::size_t x) const {
  double s = 0.0;
  for (std::size_t j = 0; j < arity; ++j) s += gram(u(x, j), u(x, j));
  return s;
}

double VectorSolution::col_weight(std::size_t y) const {
  double s = 0.0;
  for (std::size_t j = 0; j < arity; ++j) s += gram(v(y, j), v(y, j));
  return s;
}

double spectral_norm(const MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  const Index r = m.rows();
  const Index c = m.cols();
  MatrixXd dil = MatrixXd::Zero(r + c, r + c);
  dil.topRightCorner(r, c) = m;
  dil.bottomLeftCorner(c, r) = m.transpose();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(dil, Eigen::EigenvaluesOnly);
  return std::max(0.0, es.eigenvalues().cwiseAbs().maxCoeff());
}

MatrixXd output_difference(const FiniteFunction& f) {
  auto [gram, masks] = gram_and_masks(f);
  return MatrixXd::Ones(gram.entries.rows(), gram.entries.cols()) - gram.entries;
}

Gamma2Result gamma2_filtered(const MatrixXd& a, const std::vector<MatrixXd>& z, const SolveOptions& options) {
  if (z.empty()) throw InvalidArgument("gamma2: need at least one filter matrix");
  for (const auto& zj : z) {
    if (zj.rows() != a.rows() || zj.cols() != a.cols()) {
      throw InvalidArgument("gamma2: filter shape differs from target shape");
    }
  }
  const auto r = static_cast<std::size_t>(a.rows());
  const auto c = static_cast<std::size_t>(a.cols());
  const std::size_t n = z.size();
  if ((r + c) * n > 2 * kSdpCap) {
    throw CapExceeded("gamma2: Gram dimension " + std::to_string((r + c) * n) + " exceeds " +
                      std::to_string(2 * kSdpCap));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < c; ++y) {
      bool any = false;
      for (const auto& zj : z) any = any || zj(static_cast<Index>(x), static_cast<Index>(y)) != 0.0;
      if (any) {
        pairs.emplace_back(x, y);
      } else if (a(static_cast<Index>(x), static_cast<Index>(y)) != 0.0) {
        throw InfeasibleProgram(x, y, "gamma2: target entry (" + std::to_string(x) + ", " +
                                          std::to_string(y) + ") is nonzero but every filter masks it off");
      }
    }
  }

  Gamma2Result res;
  res.solution.rows = r;
  res.solution.cols = c;
  res.solution.arity = n;
  res.solution.families = 2;
  const auto dim = static_cast<Index>((r + c) * n);
  res.row_dual = VectorXd::Zero(static_cast<Index>(r));
  res.col_dual = VectorXd::Zero(static_cast<Index>(c));
  res.pair_dual = MatrixXd::Zero(a.rows(), a.cols());
  if (a.isZero(0.0)) {
    res.solution.gram = MatrixXd::Zero(dim, dim);
    return res;
  }

  // Block 0: joint Gram matrix. Block 1: t, then one slack per row and column.
  sdp::Problem p;
  p.blocks = {{sdp::BlockKind::Dense, dim}, {sdp::BlockKind::Diagonal, static_cast<Index>(1 + r + c)}};
  p.objective = {{1, 0, 0, 1.0}};
  const VectorSolution& idx = res.solution;
  for (std::size_t x = 0; x < r; ++x) {
    std::vector<sdp::Entry> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back({0, idx.u(x, j), idx.u(x, j), 1.0});
    row.push_back({1, static_cast<Index>(1 + x), static_cast<Index>(1 + x), 1.0});
    row.push_back({1, 0, 0, -1.0});
    p.constraints.push_back(std::move(row));
    p.rhs.push_back(0.0);
  }
  for (std::size_t y = 0; y < c; ++y) {
    std::vector<sdp::Entry> col;
    for (std::size_t j = 0; j < n; ++j) col.push_back({0, idx.v(y, j), idx.v(y, j), 1.0});
    col.push_back({1, static_cast<Index>(1 + r + y), static_cast<Index>(1 + r + y), 1.0});
    col.push_back({1, 0, 0, -1.0});
    p.constraints.push_back(std::move(col));
    p.rhs.push_back(0.0);
  }
  for (const auto& [x, y] : pairs) {
    std::vector<sdp::Entry> con;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = z[j](static_cast<Index>(x), static_cast<Index>(y));
      if (w != 0.0) con.push_back({0, idx.u(x, j), idx.v(y, j), 0.5 * w});
    }
    p.constraints.push_back(std::move(con));
    p.rhs.push_back(a(static_cast<Index>(x), static_cast<Index>(y)));
  }

  sdp::Result sol = sdp::solve(p, solver_options(options));
  res.solution.gram = std::move(sol.x.blocks[0]);
  res.iterations = sol.iterations;
  double value = 0.0;
  for (std::size_t x = 0; x < r; ++x) value = std::max(value, res.solution.row_weight(x));
  for (std::size_t y = 0; y < c; ++y) value = std::max(value, res.solution.col_weight(y));
  res.value = value;
  res.solution.value = value;
  for (std::size_t x = 0; x < r; ++x) res.row_dual(static_cast<Index>(x)) = std::max(0.0, -sol.y(static_cast<Index>(x)));
  for (std::size_t y = 0; y < c; ++y) {
    res.col_dual(static_cast<Index>(y)) = std::max(0.0, -sol.y(static_cast<Index>(r + y)));
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    res.pair_dual(static_cast<Index>(pairs[k].first), static_cast<Index>(pairs[k].second)) =
        sol.y(static_cast<Index>(r + c + k));
  }
  return res;
}

Gamma2Result adv_opt(const FiniteFunction& f, const SolveOptions& options) {
  if (!f.is_boolean()) throw InvalidArgument("single-family program needs a Boolean function");
  enforce_sdp_cap(f);
  const std::size_t d = f.size();
  const std::size_t n = f.arity();
  Gamma2Result res;
  res.solution.rows = d;
  res.solution.cols = 0;
  res.solution.arity = n;
  res.solution.families = 1;
  const auto dim = static_cast<Index>(d * n);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = x + 1; y < d; ++y) {
      if (f.output_index(x) != f.output_index(y)) pairs.emplace_back(x, y);
    }
  }
  res.row_dual = VectorXd::Zero(static_cast<Index>(d));
  res.pair_dual = MatrixXd::Zero(static_cast<Index>(d), static_cast<Index>(d));
  if (pairs.empty()) {
    res.solution.gram = MatrixXd::Zero(dim, dim);
    return res;
  }

  sdp::Problem p;
  p.blocks = {{sdp::BlockKind::Dense, dim}, {sdp::BlockKind::Diagonal, static_cast<Index>(1 + d)}};
  p.objective = {{1, 0, 0, 1.0}};
  const VectorSolution& idx = res.solution;
  for (std::size_t x = 0; x < d; ++x) {
    std::vector<sdp::Entry> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back({0, idx.u(x, j), idx.u(x, j), 1.0});
    row.push_back({1, static_cast<Index>(1 + x), static_cast<Index>(1 + x), 1.0});
    const bool one = f.boolean_value(x);
    if (!one) row.push_back({1, 0, 0, -1.0});
    p.constraints.push_back(std::move(row));
    p.rhs.push_back(one ? 1.0 : 0.0);
  }
  for (const auto& [x, y] : pairs) {
    std::vector<sdp::Entry> con;
    for (std::size_t j = 0; j < n; ++j) {
      if (f.word(x)[j] != f.word(y)[j]) con.push_back({0, idx.u(x, j), idx.u(y, j), 0.5});
    }
    p.constraints.push_back(std::move(con));
    p.rhs.push_back(1.0);
  }

  sdp::Result sol = sdp::solve(p, solver_options(options));
  res.solution.gram = std::move(sol.x.blocks[0]);
  res.iterations = sol.iterations;
  const auto [a0, a1] = class_weights(res.solution, f);
  res.value = std::sqrt(std::max(0.0, a0 * a1));
  res.solution.value = res.value;
  for (std::size_t x = 0; x < d; ++x) res.row_dual(static_cast<Index>(x)) = -sol.y(static_cast<Index>(x));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto w = sol.y(static_cast<Index>(d + k));
    res.pair_dual(static_cast<Index>(pairs[k].first), static_cast<Index>(pairs[k].second)) = w;
    res.pair_dual(static_cast<Index>(pairs[k].second), static_cast<Index>(pairs[k].first)) = w;
  }
  return res;
}

std::pair<double, double> class_weights(const VectorSolution& s, const FiniteFunction& f) {
  double a0 = 0.0;
  double a1 = 0.0;
  for (std::size_t x = 0; x < s.rows; ++x) {
    const double w = s.row_weight(x);
    if (f.boolean_value(x)) {
      a1 = std::max(a1, w);
    } else {
      a0 = std::max(a0, w);
    }
  }
  return {a0, a1};
}

AdversaryMatrix extract_adversary_matrix(const FiniteFunction& f, const Gamma2Result& dual) {
  const auto d = static_cast<Index>(f.size());
  if (dual.pair_dual.rows() != d || dual.pair_dual.cols() != d || dual.row_dual.size() != d ||
      dual.col_dual.size() != d) {
    throw InvalidArgument("dual solution shape does not match the function");
  }
  const MatrixXd diff = output_difference(f);
  const double scale = std::max(dual.row_dual.maxCoeff(), dual.col_dual.maxCoeff());
  MatrixXd g = MatrixXd::Zero(d, d);
  if (scale <= 0.0) return {g};
  for (Index x = 0; x < d; ++x) {
    for (Index y = 0; y < d; ++y) {
      const double ab = dual.row_dual(x) * dual.col_dual(y);
      if (diff(x, y) == 0.0 || ab <= 1e-12 * scale * scale) continue;
      g(x, y) = dual.pair_dual(x, y) / (2.0 * std::sqrt(ab));
    }
  }
  return {0.5 * (g + g.transpose())};
}

double adv_lower_certify(const FiniteFunction& f, const AdversaryMatrix& gamma, double tol) {
  const auto d = static_cast<Index>(f.size());
  const MatrixXd& g = gamma.gamma;
  if (g.rows() != d || g.cols() != d) throw InvalidArgument("adversary matrix shape does not match the domain");
  if (!g.allFinite()) throw InvalidCertificate({}, "adversary matrix has non-finite entries");
  auto [gram, masks] = gram_and_masks(f);

  std::vector<MatrixEntry> bad;
  for (Index x = 0; x < d && bad.size() < kMaxReportedEntries; ++x) {
    for (Index y = 0; y < d && bad.size() < kMaxReportedEntries; ++y) {
      if (std::abs(g(x, y) - g(y, x)) > tol) {
        bad.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y), g(x, y)});
      }
    }
  }
  if (!bad.empty()) throw InvalidCertificate(std::move(bad), "adversary matrix is not symmetric");
  for (Index x = 0; x < d && bad.size() < kMaxReportedEntries; ++x) {
    for (Index y = 0; y < d && bad.size() < kMaxReportedEntries; ++y) {
      if (gram.entries(x, y) != 0.0 && std::abs(g(x, y)) > tol) {
        bad.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y), g(x, y)});
      }
    }
  }
  if (!bad.empty()) {
    throw InvalidCertificate(std::move(bad), "adversary matrix is nonzero on a pair with equal outputs");
  }

  const double top = spectral_norm(g);
  if (top == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& m : masks.masks) worst = std::max(worst, spectral_norm(g.cwiseProduct(m)));
  if (worst == 0.0) {
    throw InvalidCertificate({}, "adversary matrix is nonzero but every masked norm vanishes");
  }
  return top / worst;
}

AdvBracket adv_value(const FiniteFunction& f, const SolveOptions& options, bool cross_check) {
  enforce_sdp_cap(f);
  auto [gram, masks] = gram_and_masks(f);
  const MatrixXd diff = MatrixXd::Ones(gram.entries.rows(), gram.entries.cols()) - gram.entries;
  Gamma2Result g = gamma2_filtered(diff, masks.masks, options);

  AdvBracket out;
  out.upper = g.value;
  const double e = static_cast<double>(f.codomain().size());
  out.lower = e > 1.0 ? g.value / (2.0 * (1.0 - 1.0 / e)) : g.value;
  out.notes = "gamma2(J-F|Delta) over a " + std::to_string(g.solution.gram.rows()) + "-dimensional Gram matrix";
  if (g.value > 0.0) {
    try {
      out.certified_lower = adv_lower_certify(f, extract_adversary_matrix(f, g), 1e-9);
    } catch (const InvalidCertificate&) {
      out.notes += "; dual certificate unusable";
    }
  } else {
    out.certified_lower = 0.0;
  }
  if (cross_check && f.is_boolean()) {
    const Gamma2Result single = adv_opt(f, options);
    out.single_family = single.value;
    out.solver_defect = std::abs(single.value - g.value) > 10.0 * options.tol * std::max(1.0, g.value);
    out.notes += "; single-family value " + format_number(single.value);
    if (out.solver_defect) out.notes += " (disagrees beyond 10*tol)";
  }
  return out;
}

void validate_gamma2_solution(const VectorSolution& s, const MatrixXd& a, const std::vector<MatrixXd>& z,
                              double tol) {
  if (s.families != 2 || s.rows != static_cast<std::size_t>(a.rows()) ||
      s.cols != static_cast<std::size_t>(a.cols()) || s.arity != z.size()) {
    throw InvalidArgument("solution shape does not match the program");
  }
  const auto dim = static_cast<Index>((s.rows + s.cols) * s.arity);
  if (s.gram.rows() != dim || s.gram.cols() != dim) throw InvalidArgument("Gram matrix has the wrong dimension");
  check_psd(s.gram, tol);
  std::vector<MatrixEntry> bad;
  for (std::size_t x = 0; x < s.rows; ++x) {
    for (std::size_t y = 0; y < s.cols; ++y) {
      const Index xi = static_cast<Index>(x);
      const Index yi = static_cast<Index>(y);
      double lhs = 0.0;
      for (std::size_t j = 0; j < s.arity; ++j) lhs += z[j](xi, yi) * s.gram(s.u(x, j), s.v(y, j));
      const double resid = std::abs(lhs - a(xi, yi));
      if (resid > tol * (1.0 + std::abs(a(xi, yi))) && bad.size() < kMaxReportedEntries) {
        bad.push_back({x, y, resid});
      }
    }
  }
  if (!bad.empty()) throw InvalidCertificate(std::move(bad), "constraint residual above tolerance");
  double value = 0.0;
  for (std::size_t x = 0; x < s.rows; ++x) value = std::max(value, s.row_weight(x));
  for (std::size_t y = 0; y < s.cols; ++y) value = std::max(value, s.col_weight(y));
  if (std::abs(value - s.value) > tol * (1.0 + value)) {
    throw InvalidCertificate({}, "reported value " + format_number(s.value) + " differs from recomputed " +
                                     format_number(value));
  }
}

void validate_single_family(const VectorSolution& s, const FiniteFunction& f, double tol) {
  if (!f.is_boolean()) throw InvalidArgument("single-family solutions need a Boolean function");
  if (s.families != 1 || s.rows != f.size() || s.arity != f.arity()) {
    throw InvalidArgument("solution shape does not match the function");
  }
  const auto dim = static_cast<Index>(s.rows * s.arity);
  if (s.gram.rows() != dim || s.gram.cols() != dim) throw InvalidArgument("Gram matrix has the wrong dimension");
  check_psd(s.gram, tol);
  std::vector<MatrixEntry> bad;
  for (std::size_t x = 0; x < s.rows; ++x) {
    for (std::size_t y = x + 1; y < s.rows; ++y) {
      if (f.output_index(x) == f.output_index(y)) continue;
      double lhs = 0.0;
      for (std::size_t j = 0; j < s.arity; ++j) {
        if (f.word(x)[j] != f.word(y)[j]) lhs += s.gram(s.u(x, j), s.u(y, j));
      }
      const double resid = std::abs(lhs - 1.0);
      if (resid > 2.0 * tol && bad.size() < kMaxReportedEntries) bad.push_back({x, y, resid});
    }
  }
  if (!bad.empty()) throw InvalidCertificate(std::move(bad), "pair constraint residual above tolerance");
  const auto [a0, a1] = class_weights(s, f);
  const double value = std::sqrt(std::max(0.0, a0 * a1));
  if (std::abs(value - s.value) > tol * (1.0 + value)) {
    throw InvalidCertificate({}, "reported value " + format_number(s.value) + " differs from recomputed " +
                                     format_number(value));
  }
}

AdversaryMatrix or_certificate(const FiniteFunction& or_fn) {
  const std::size_t n = or_fn.arity();
  const auto d = static_cast<Index>(or_fn.size());
  MatrixXd g = MatrixXd::Zero(d, d);
  const auto zero = or_fn.find(Word(n, 0));
  if (!zero) throw InvalidArgument("OR certificate needs the all-zero input in the domain");
  for (std::size_t i = 0; i < n; ++i) {
    Word e(n, 0);
    e[i] = 1;
    const auto idx = or_fn.find(e);
    if (!idx) continue;
    g(static_cast<Index>(*zero), static_cast<Index>(*idx)) = 1.0;
    g(static_cast<Index>(*idx), static_cast<Index>(*zero)) = 1.0;
  }
  return {g};
}

}  // namespace advkit
