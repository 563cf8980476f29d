#include "advkit/sdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "advkit/errors.hpp"

namespace advkit::sdp {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Constraint entries expanded to both orientations and grouped by block, in
/// flat arrays for the Schur complement loop.
struct Expanded {
  struct Segment {
    std::size_t block;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<std::vector<Segment>> segments;  // per constraint
  std::vector<Index> rows;
  std::vector<Index> cols;
  std::vector<double> vals;
};

Expanded expand(const Problem& p) {
  Expanded ex;
  ex.segments.resize(p.constraints.size());
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    std::vector<Entry> sorted = p.constraints[i];
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Entry& a, const Entry& b) { return a.block < b.block; });
    std::size_t k = 0;
    while (k < sorted.size()) {
      const std::size_t block = sorted[k].block;
      const std::size_t begin = ex.vals.size();
      for (; k < sorted.size() && sorted[k].block == block; ++k) {
        const Entry& e = sorted[k];
        ex.rows.push_back(e.row);
        ex.cols.push_back(e.col);
        ex.vals.push_back(e.value);
        if (e.row != e.col) {
          ex.rows.push_back(e.col);
          ex.cols.push_back(e.row);
          ex.vals.push_back(e.value);
        }
      }
      ex.segments[i].push_back({block, begin, ex.vals.size()});
    }
  }
  return ex;
}

void validate(const Problem& p) {
  if (p.rhs.size() != p.constraints.size()) throw InvalidArgument("sdp: rhs size differs from constraint count");
  auto check = [&](const Entry& e) {
    if (e.block >= p.blocks.size()) throw InvalidArgument("sdp: entry block out of range");
    const BlockSpec& b = p.blocks[e.block];
    if (e.row < 0 || e.col < 0 || e.row >= b.size || e.col >= b.size) {
      throw InvalidArgument("sdp: entry index out of range");
    }
    if (b.kind == BlockKind::Diagonal && e.row != e.col) {
      throw InvalidArgument("sdp: off-diagonal entry in a diagonal block");
    }
  };
  for (const auto& e : p.objective) check(e);
  for (const auto& c : p.constraints) {
    for (const auto& e : c) check(e);
  }
}

BlockVar zeros_like(const std::vector<BlockSpec>& blocks) {
  BlockVar v;
  for (const auto& b : blocks) {
    v.blocks.push_back(b.kind == BlockKind::Dense ? MatrixXd::Zero(b.size, b.size)
                                                  : MatrixXd::Zero(b.size, 1));
  }
  return v;
}

BlockVar scaled_identity(const std::vector<BlockSpec>& blocks, double s) {
  BlockVar v;
  for (const auto& b : blocks) {
    v.blocks.push_back(b.kind == BlockKind::Dense ? MatrixXd(s * MatrixXd::Identity(b.size, b.size))
                                                  : MatrixXd::Constant(b.size, 1, s));
  }
  return v;
}

void add_entries(BlockVar& v, const std::vector<BlockSpec>& blocks, const std::vector<Entry>& entries,
                 double scale) {
  for (const auto& e : entries) {
    if (blocks[e.block].kind == BlockKind::Diagonal) {
      v.blocks[e.block](e.row, 0) += scale * e.value;
    } else {
      v.blocks[e.block](e.row, e.col) += scale * e.value;
      if (e.row != e.col) v.blocks[e.block](e.col, e.row) += scale * e.value;
    }
  }
}

double inner(const BlockVar& a, const BlockVar& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.blocks.size(); ++k) s += a.blocks[k].cwiseProduct(b.blocks[k]).sum();
  return s;
}

double frob(const BlockVar& a) {
  double s = 0.0;
  for (const auto& m : a.blocks) s += m.squaredNorm();
  return std::sqrt(s);
}

/// tr(A_i K) for possibly non-symmetric K (dense blocks) / diagonal K.
double apply_general(const Expanded& ex, std::size_t i, const std::vector<BlockSpec>& blocks,
                     const BlockVar& k) {
  double s = 0.0;
  for (const auto& seg : ex.segments[i]) {
    const MatrixXd& m = k.blocks[seg.block];
    if (blocks[seg.block].kind == BlockKind::Diagonal) {
      for (std::size_t e = seg.begin; e < seg.end; ++e) s += ex.vals[e] * m(ex.rows[e], 0);
    } else {
      for (std::size_t e = seg.begin; e < seg.end; ++e) s += ex.vals[e] * m(ex.cols[e], ex.rows[e]);
    }
  }
  return s;
}

VectorXd apply_all(const Expanded& ex, const std::vector<BlockSpec>& blocks, const BlockVar& k) {
  VectorXd out(static_cast<Index>(ex.segments.size()));
  for (std::size_t i = 0; i < ex.segments.size(); ++i) out(static_cast<Index>(i)) = apply_general(ex, i, blocks, k);
  return out;
}

BlockVar adjoint(const Problem& p, const std::vector<BlockSpec>& blocks, const VectorXd& y) {
  BlockVar v = zeros_like(blocks);
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    add_entries(v, blocks, p.constraints[i], y(static_cast<Index>(i)));
  }
  return v;
}

/// M_ij = tr(A_i X A_j Z⁻¹).
MatrixXd schur(const Expanded& ex, const std::vector<BlockSpec>& blocks, const BlockVar& x,
               const BlockVar& zinv) {
  const auto m = static_cast<Index>(ex.segments.size());
  MatrixXd out = MatrixXd::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (const auto& si : ex.segments[static_cast<std::size_t>(i)]) {
      const bool diag = blocks[si.block].kind == BlockKind::Diagonal;
      const MatrixXd& xb = x.blocks[si.block];
      const MatrixXd& zb = zinv.blocks[si.block];
      const double* xd = xb.data();
      const double* zd = zb.data();
      const Index ld = xb.rows();
      for (Index j = i; j < m; ++j) {
        for (const auto& sj : ex.segments[static_cast<std::size_t>(j)]) {
          if (sj.block != si.block) continue;
          double s = 0.0;
          if (diag) {
            for (std::size_t e = si.begin; e < si.end; ++e) {
              for (std::size_t f = sj.begin; f < sj.end; ++f) {
                if (ex.rows[e] == ex.rows[f]) s += ex.vals[e] * ex.vals[f] * xd[ex.rows[e]] * zd[ex.rows[e]];
              }
            }
          } else {
            for (std::size_t e = si.begin; e < si.end; ++e) {
              const Index r = ex.rows[e];
              const Index c = ex.cols[e];
              const double a = ex.vals[e];
              double t = 0.0;
              for (std::size_t f = sj.begin; f < sj.end; ++f) {
                // X[c, p] * Zinv[q, r]
                t += ex.vals[f] * xd[c + ex.rows[f] * ld] * zd[ex.cols[f] + r * ld];
              }
              s += a * t;
            }
          }
          out(i, j) += s;
        }
      }
    }
  }
  out.triangularView<Eigen::StrictlyLower>() = out.transpose().triangularView<Eigen::StrictlyLower>();
  return out;
}

bool inverse(const std::vector<BlockSpec>& blocks, const BlockVar& z, BlockVar& out) {
  out.blocks.resize(z.blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].kind == BlockKind::Diagonal) {
      if ((z.blocks[k].array() <= 0.0).any()) return false;
      out.blocks[k] = z.blocks[k].cwiseInverse();
    } else {
      Eigen::LLT<MatrixXd> llt(z.blocks[k]);
      if (llt.info() != Eigen::Success) return false;
      out.blocks[k] = llt.solve(MatrixXd::Identity(blocks[k].size, blocks[k].size));
      out.blocks[k] = 0.5 * (out.blocks[k] + out.blocks[k].transpose()).eval();
    }
  }
  return true;
}

/// Largest α with V + α·D ⪰ 0 (∞ when D ⪰ 0), assuming V ≻ 0.
double max_step(const std::vector<BlockSpec>& blocks, const BlockVar& v, const BlockVar& d) {
  double alpha = kInf;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].kind == BlockKind::Diagonal) {
      for (Index r = 0; r < blocks[k].size; ++r) {
        const double dv = d.blocks[k](r, 0);
        if (dv < 0.0) alpha = std::min(alpha, -v.blocks[k](r, 0) / dv);
      }
    } else {
      Eigen::LLT<MatrixXd> llt(v.blocks[k]);
      if (llt.info() != Eigen::Success) return 0.0;
      MatrixXd s = llt.matrixL().solve(d.blocks[k]);
      s = llt.matrixL().solve(s.transpose()).transpose();
      s = 0.5 * (s + s.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(s, Eigen::EigenvaluesOnly);
      const double lmin = es.eigenvalues().minCoeff();
      if (lmin < 0.0) alpha = std::min(alpha, -1.0 / lmin);
    }
  }
  return alpha;
}

struct Direction {
  BlockVar dx;
  BlockVar dz;
  VectorXd dy;
};

/// HKM direction for target σμ; `corr` (may be empty) is the Mehrotra
/// second-order term dXa·dZa·Z⁻¹.
Direction direction(const Problem& p, const Expanded& ex, const std::vector<BlockSpec>& blocks,
                    const Eigen::LDLT<MatrixXd>& factor, const VectorXd& b, const BlockVar& x,
                    const BlockVar& zinv, const BlockVar& rd, double sigma_mu, const BlockVar* corr) {
  // K = σμ Z⁻¹ − X − X·Rd·Z⁻¹ − corr  (before the Aᵀdy part)
  BlockVar k;
  k.blocks.resize(blocks.size());
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    if (blocks[q].kind == BlockKind::Diagonal) {
      k.blocks[q] = sigma_mu * zinv.blocks[q] - x.blocks[q] -
                    x.blocks[q].cwiseProduct(rd.blocks[q]).cwiseProduct(zinv.blocks[q]);
    } else {
      k.blocks[q] = sigma_mu * zinv.blocks[q] - x.blocks[q] - x.blocks[q] * rd.blocks[q] * zinv.blocks[q];
    }
    if (corr) k.blocks[q] -= corr->blocks[q];
  }
  // M dy = rp − A(K) with rp = b − A(X)  ⇔  M dy = b − A(X) − A(K)
  VectorXd ax = apply_all(ex, blocks, x);
  VectorXd rhs = b - ax - apply_all(ex, blocks, k);
  Direction d;
  d.dy = factor.solve(rhs);
  BlockVar aty = adjoint(p, blocks, d.dy);
  d.dz.blocks.resize(blocks.size());
  d.dx.blocks.resize(blocks.size());
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    d.dz.blocks[q] = rd.blocks[q] - aty.blocks[q];
    if (blocks[q].kind == BlockKind::Diagonal) {
      d.dx.blocks[q] = k.blocks[q] + x.blocks[q].cwiseProduct(aty.blocks[q]).cwiseProduct(zinv.blocks[q]);
    } else {
      MatrixXd t = k.blocks[q] + x.blocks[q] * aty.blocks[q] * zinv.blocks[q];
      d.dx.blocks[q] = 0.5 * (t + t.transpose());
    }
  }
  return d;
}

}  // namespace

double apply(const std::vector<Entry>& a, const BlockVar& x) {
  double s = 0.0;
  for (const auto& e : a) {
    const MatrixXd& m = x.blocks.at(e.block);
    if (m.cols() == 1) {
      s += e.value * m(e.row, 0);
    } else {
      s += e.value * m(e.row, e.col);
      if (e.row != e.col) s += e.value * m(e.col, e.row);
    }
  }
  return s;
}

Result solve(const Problem& problem, const Options& options) {
  validate(problem);
  const auto& blocks = problem.blocks;
  const Expanded ex = expand(problem);
  const auto m = static_cast<Index>(problem.constraints.size());
  VectorXd b(m);
  for (Index i = 0; i < m; ++i) b(i) = problem.rhs[static_cast<std::size_t>(i)];

  BlockVar c = zeros_like(blocks);
  add_entries(c, blocks, problem.objective, 1.0);

  double total_dim = 0.0;
  for (const auto& bl : blocks) total_dim += static_cast<double>(bl.size);

  const double norm_b = b.norm();
  const double norm_c = frob(c);
  double max_a = 0.0;
  for (const auto& con : problem.constraints) {
    BlockVar t = zeros_like(blocks);
    add_entries(t, blocks, con, 1.0);
    max_a = std::max(max_a, frob(t));
  }
  const double start = std::max({10.0, std::sqrt(total_dim), norm_b, norm_c, max_a});

  Result res;
  BlockVar x = scaled_identity(blocks, start);
  BlockVar z = scaled_identity(blocks, start);
  VectorXd y = VectorXd::Zero(m);

  const double eps = options.tolerance;
  int stalled = 0;
  double best_mu = kInf;
  int no_progress = 0;

  for (std::size_t it = 0;; ++it) {
    const BlockVar aty = adjoint(problem, blocks, y);
    BlockVar rd;
    rd.blocks.resize(blocks.size());
    for (std::size_t q = 0; q < blocks.size(); ++q) rd.blocks[q] = c.blocks[q] - z.blocks[q] - aty.blocks[q];
    const VectorXd rp = b - apply_all(ex, blocks, x);

    const double pobj = inner(c, x);
    const double dobj = b.dot(y);
    const double mu = inner(x, z) / total_dim;
    res.primal_objective = pobj;
    res.dual_objective = dobj;
    res.relative_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    res.primal_infeasibility = rp.norm() / (1.0 + norm_b);
    res.dual_infeasibility = frob(rd) / (1.0 + norm_c);
    res.iterations = it;

    const double complementarity = inner(x, z) / (1.0 + std::abs(pobj) + std::abs(dobj));
    if (res.relative_gap <= eps && complementarity <= eps && res.primal_infeasibility <= eps &&
        res.dual_infeasibility <= eps) {
      res.x = std::move(x);
      res.z = std::move(z);
      res.y = std::move(y);
      return res;
    }
    if (it >= options.max_iterations) {
      throw SolverBudgetExceeded(std::min(dobj, pobj), std::max(dobj, pobj), it,
                                 "SDP iteration budget of " + std::to_string(options.max_iterations) +
                                     " exhausted (relative gap " + std::to_string(res.relative_gap) + ")");
    }
    if (mu < 0.999 * best_mu) {
      best_mu = mu;
      no_progress = 0;
    } else if (++no_progress > 30) {
      throw SolverBudgetExceeded(std::min(dobj, pobj), std::max(dobj, pobj), it,
                                 "SDP made no progress for 30 iterations (relative gap " +
                                     std::to_string(res.relative_gap) + ")");
    }

    BlockVar zinv;
    if (!inverse(blocks, z, zinv)) {
      throw SolverBudgetExceeded(std::min(dobj, pobj), std::max(dobj, pobj), it,
                                 "SDP dual iterate lost definiteness");
    }
    MatrixXd schur_m = schur(ex, blocks, x, zinv);
    Eigen::LDLT<MatrixXd> factor(schur_m);
    if (factor.info() != Eigen::Success) {
      throw SolverBudgetExceeded(std::min(dobj, pobj), std::max(dobj, pobj), it,
                                 "SDP Schur complement factorization failed");
    }

    // Predictor.
    Direction pred = direction(problem, ex, blocks, factor, b, x, zinv, rd, 0.0, nullptr);
    const double ap_pred = std::min(1.0, max_step(blocks, x, pred.dx));
    const double ad_pred = std::min(1.0, max_step(blocks, z, pred.dz));
    BlockVar xa = x;
    BlockVar za = z;
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      xa.blocks[q] += ap_pred * pred.dx.blocks[q];
      za.blocks[q] += ad_pred * pred.dz.blocks[q];
    }
    const double mu_aff = inner(xa, za) / total_dim;
    double sigma = std::pow(std::max(0.0, mu_aff) / mu, 3.0);
    sigma = std::clamp(sigma, 0.0, 1.0);

    // Corrector.
    BlockVar corr;
    corr.blocks.resize(blocks.size());
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      if (blocks[q].kind == BlockKind::Diagonal) {
        corr.blocks[q] = pred.dx.blocks[q].cwiseProduct(pred.dz.blocks[q]).cwiseProduct(zinv.blocks[q]);
      } else {
        corr.blocks[q] = pred.dx.blocks[q] * pred.dz.blocks[q] * zinv.blocks[q];
      }
    }
    Direction d = direction(problem, ex, blocks, factor, b, x, zinv, rd, sigma * mu, &corr);

    const double gamma = 0.9 + 0.09 * std::min(ap_pred, ad_pred);
    const double ap = std::min(1.0, gamma * max_step(blocks, x, d.dx));
    const double ad = std::min(1.0, gamma * max_step(blocks, z, d.dz));
    if (ap < 1e-10 && ad < 1e-10) {
      if (++stalled >= 3) {
        throw SolverBudgetExceeded(std::min(dobj, pobj), std::max(dobj, pobj), it,
                                   "SDP step length collapsed (relative gap " +
                                       std::to_string(res.relative_gap) + ")");
      }
    } else {
      stalled = 0;
    }
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      x.blocks[q] += ap * d.dx.blocks[q];
      z.blocks[q] += ad * d.dz.blocks[q];
    }
    y += ad * d.dy;
  }
}

}  // namespace advkit::sdp
