#include "advkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "advkit/csv.hpp"
#include "advkit/errors.hpp"
#include "advkit/randsearch/search.hpp"
#include "advkit/recur.hpp"
#include "advkit/strings/kcs.hpp"
#include "advkit/strings/sweeps.hpp"

namespace advkit {

namespace {

constexpr double kAcceptSlack = 1e-3;

struct Outcome {
  double computed = 0.0;
  double expected = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string detail;
};

// Failures counted against zero; margin is the tightest row margin.
Outcome from_report(const CheckReport& rep, const std::string& what) {
  Outcome o;
  o.computed = static_cast<double>(rep.failures());
  o.expected = 0.0;
  o.margin = std::numeric_limits<double>::infinity();
  for (const auto& r : rep.rows) o.margin = std::min(o.margin, r.margin());
  if (rep.rows.empty()) o.margin = 0.0;
  o.pass = rep.all_pass();
  std::ostringstream d;
  d << rep.rows.size() << ' ' << what << " rows, " << rep.failures() << " violations";
  for (const auto& r : rep.rows) {
    if (!r.pass) {
      d << "; first: " << r.instance_id;
      break;
    }
  }
  o.detail = d.str();
  return o;
}

Outcome criterion_or_exactness(const ReportOptions& opt) {
  SolveOptions so{opt.tol, kDefaultIterationBudget};
  double worst_rel = 0.0;
  double worst_cert = 0.0;
  std::ostringstream d;
  for (std::size_t n = 2; n <= 5; ++n) {
    const FiniteFunction f = functions::or_n(n);
    const double root = std::sqrt(static_cast<double>(n));
    AdvBracket b = adv_value(f, so);
    double rel = std::max(std::abs(b.lower - root), std::abs(b.upper - root)) / root;
    double cert = std::abs(adv_lower_certify(f, or_certificate(f)) - root);
    worst_rel = std::max(worst_rel, rel);
    worst_cert = std::max(worst_cert, cert);
    d << "OR_" << n << "=" << format_number(b.upper) << ' ';
  }
  d << "certificate error " << format_number(worst_cert);
  return {worst_rel, kAcceptSlack, kAcceptSlack - worst_rel, worst_rel <= kAcceptSlack && worst_cert <= 1e-9,
          d.str()};
}

Outcome criterion_or_and(const ReportOptions& opt) {
  OrAndSweep sweep;
  sweep.vary_arity = true;
  sweep.seed = opt.seed;
  return from_report(sweep_or_and(sweep, SolveOptions{opt.tol, kDefaultIterationBudget}), "OR/AND");
}

Outcome criterion_switch(const ReportOptions& opt) {
  SwitchSweep sweep;
  sweep.seed = opt.seed;
  return from_report(sweep_switch(sweep, SolveOptions{opt.tol, kDefaultIterationBudget}), "SWITCH");
}

Outcome criterion_gamma2_facts(const ReportOptions& opt) {
  FactSweep sweep;
  sweep.seed = opt.seed;
  return from_report(gamma2_fact_checks(sweep, SolveOptions{opt.tol, kDefaultIterationBudget}), "gamma2 fact");
}

Outcome criterion_recurrences(const ReportOptions&) {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::ostringstream d;
  auto expect = [&](const std::string& what, const BoundClass& got, const BoundClass& want, int case_id) {
    ++checks;
    if (!same_class(got, want) || got.tilde != want.tilde || (case_id && got.case_id != case_id)) {
      ++mismatches;
      d << what << " gave " << got.str() << "; ";
    }
  };
  auto spec = [](const char* a, const char* b, const char* c, long long p, bool squared) {
    RecurrenceSpec s;
    s.a = parse_real(a);
    s.b = parse_real(b);
    s.c = parse_exponent(c);
    s.p = p;
    s.squared = squared;
    return s;
  };
  expect("4,2,1,0", master_solve(spec("4", "2", "1", 0, false)), BoundClass::poly_log(2), 1);
  expect("2,2,1,0", master_solve(spec("2", "2", "1", 0, false)), BoundClass::poly_log(1, 1), 2);
  expect("1,2,1,0", master_solve(spec("1", "2", "1", 0, false)), BoundClass::poly_log(1), 3);
  expect("2,2,1,0 squared", master_solve(spec("2", "2", "1", 0, true)),
         BoundClass::poly_log(Rational(1, 2), Rational(1, 2)), 2);
  for (long long k = 1; k <= 4; ++k) {
    expect("sqrt13,7,2/3," + std::to_string(k - 1), master_solve(spec("sqrt(13)", "7", "2/3", k - 1, false)),
           BoundClass::poly_log(Rational(2, 3), k - 1), 3);
  }
  std::size_t rows = 0;
  for (const auto& row : headline_bounds()) {
    ++checks;
    ++rows;
    if (!row.match) {
      ++mismatches;
      d << row.problem << " derived " << row.derived.str() << "; ";
    }
  }
  ++checks;
  std::uint64_t m = min_splitting_factor(Exponent::from_rational(Rational(2, 3)));
  if (m != 7) ++mismatches;
  d << checks << " checks, " << rows << " headline rows, m=" << m;
  return {static_cast<double>(mismatches), 0.0, 0.0 - static_cast<double>(mismatches), mismatches == 0, d.str()};
}

Outcome criterion_decompositions(const ReportOptions& opt) {
  auto reg = strings::regular_sweep(10);
  auto minsub = strings::minsub_recurrence_sweep(10000, opt.seed);
  auto lis = strings::lis_sweep(8, 3, 3);
  auto kcs = strings::kcs_sweep(10000, 28, 3, 7, opt.seed);
  std::size_t failures = reg.failures + minsub.failures + lis.failures + kcs.failures;
  std::ostringstream d;
  d << "regular " << reg.instances << " strings/" << reg.failures << " bad; minsub " << minsub.instances << '/'
    << minsub.failures << "; k-IS " << lis.instances << '/' << lis.failures << "; k-CS " << kcs.instances << '/'
    << kcs.failures;
  return {static_cast<double>(failures), 0.0, 0.0 - static_cast<double>(failures), failures == 0, d.str()};
}

Outcome criterion_critical(const ReportOptions& opt) {
  std::size_t bad = 0;
  std::ostringstream d;
  for (std::size_t m = 2; m <= 4; ++m) {
    auto mc = strings::max_critical(m);
    if (mc.value != 2 * m - 1 || mc.violations) ++bad;
    d << "m=" << m << ":" << mc.value << ' ';
  }
  std::size_t extremal = strings::critical_set(strings::extremal_signature(5)).size();
  if (extremal != 9) ++bad;
  d << "m=5 construction:" << extremal;
  std::size_t violations = 0;
  for (std::size_t m = 5; m <= 7; ++m) violations += strings::max_critical(m, 100000, opt.seed + m).violations;
  bad += violations;
  d << "; sampled ceiling violations " << violations;
  return {static_cast<double>(bad), 0.0, 0.0 - static_cast<double>(bad), bad == 0, d.str()};
}

Outcome criterion_witness(const ReportOptions& opt) {
  auto w = strings::witness_sweep(1000, 12, opt.seed);
  std::ostringstream d;
  d << w.sweep.instances << " instances, " << w.witnesses << " witnesses, " << w.sweep.failures << " bad";
  auto f = static_cast<double>(w.sweep.failures);
  return {f, 0.0, 0.0 - f, w.sweep.pass(), d.str()};
}

Outcome criterion_randsearch(const ReportOptions& opt) {
  randsearch::SuccessSweep sweep;
  sweep.target_rank = 700;
  sweep.seed = opt.seed;
  auto succ = randsearch::success_sweep(sweep);
  bool ok = succ.success_rate() >= 1 - sweep.delta && succ.max_iterations <= succ.budget;
  auto shrink_small = randsearch::shrink_statistic(100, 100000, opt.seed);
  auto shrink_large = randsearch::shrink_statistic(1000, 10000, opt.seed);
  ok = ok && shrink_small.pass() && shrink_large.pass();
  std::ostringstream d;
  d << "success " << format_number(succ.success_rate()) << ", max iterations " << succ.max_iterations << "/"
    << succ.budget << ", shrink ratio " << format_number(shrink_small.ratio_mean) << " (se "
    << format_number(shrink_small.ratio_standard_error) << ")";
  for (std::size_t j = 1; j <= 3; ++j) {
    randsearch::AgreementSweep as;
    as.j = j;
    as.seed = opt.seed;
    auto ag = randsearch::agreement_sweep(as);
    ok = ok && ag.min_last_rate() >= 1 - as.delta && ag.max_first_rate() >= 1 - as.delta;
    d << ", j=" << j << " agreement " << format_number(ag.min_last_rate()) << "/" << format_number(ag.max_first_rate());
  }
  double rate = succ.success_rate();
  return {rate, 1 - sweep.delta, rate - (1 - sweep.delta), ok, d.str()};
}

Outcome criterion_positions(const ReportOptions& opt) {
  auto sw = strings::minsub_positions_sweep(10000, opt.seed);
  std::ostringstream d;
  d << sw.instances << " instances, " << sw.failures << " disagreements";
  auto f = static_cast<double>(sw.failures);
  return {f, 0.0, 0.0 - f, sw.pass(), d.str()};
}

struct Criterion {
  const char* name;
  const char* anchor;
  std::function<Outcome(const ReportOptions&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"adversary-exactness", "Adv(OR_n) = sqrt(n), n = 2..5; explicit OR certificate", criterion_or_exactness},
      {"or-and-composition", "Adv(g_or)^2 <= Adv(f1)^2 + Adv(f2)^2 and Adv(g_and) = Adv(g_or)", criterion_or_and},
      {"switch-composition", "Adv(h) <= gamma2(J-F|Delta) + max_s Adv(g_s); block identities", criterion_switch},
      {"gamma2-algebra", "gamma2 triangle, Hadamard and direct-sum facts", criterion_gamma2_facts},
      {"recurrences", "Master Theorem cases; headline classes; splitting factor m = 7", criterion_recurrences},
      {"decompositions", "regular, minimal-substring, k-IS and k-CS case-switch identities",
       criterion_decompositions},
      {"critical-subproblems", "at most 2m-1 critical subproblems; 9 for the m = 5 construction",
       criterion_critical},
      {"witness-graph", "witness graph weight k, unique leftmost edge with a degree-1 endpoint", criterion_witness},
      {"randomized-search", "success >= 1 - delta within ceil(10 log2(n/delta)) iterations; shrink <= 3/4",
       criterion_randsearch},
      {"minsub-positions", "four candidate positions decide the minimal-substring cross term", criterion_positions},
  };
  return all;
}

}  // namespace

const char* status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::pass: return "pass";
    case CriterionStatus::fail: return "fail";
    case CriterionStatus::budget: return "budget";
    case CriterionStatus::error: return "error";
  }
  return "?";
}

CriterionRow run_criterion(int id, const ReportOptions& options) {
  if (id < 1 || id > kCriterionCount) throw InvalidArgument("unknown criterion " + std::to_string(id));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionRow row;
  row.id = id;
  row.name = c.name;
  row.anchor = c.anchor;
  try {
    Outcome o = c.run(options);
    row.computed = o.computed;
    row.expected = o.expected;
    row.margin = o.margin;
    row.status = o.pass ? CriterionStatus::pass : CriterionStatus::fail;
    row.detail = o.detail;
  } catch (const SolverBudgetExceeded& e) {
    row.status = CriterionStatus::budget;
    row.detail = e.what();
  } catch (const Error& e) {
    row.status = CriterionStatus::error;
    row.detail = e.what();
  }
  return row;
}

std::vector<CriterionRow> reproduction_report(const ReportOptions& options) {
  std::vector<int> ids = options.criteria;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  std::vector<CriterionRow> rows;
  for (int id : ids) rows.push_back(run_criterion(id, options));
  return rows;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_report_csv(std::ostream& out, const std::vector<CriterionRow>& rows) {
  out << "criterion,name,anchor,computed,expected,margin,status,detail\n";
  for (const auto& r : rows) {
    out << r.id << ',' << r.name << ',' << quoted(r.anchor) << ',' << format_number(r.computed) << ','
        << format_number(r.expected) << ',' << format_number(r.margin) << ',' << status_name(r.status) << ','
        << quoted(r.detail) << '\n';
  }
}

void write_report_text(std::ostream& out, const std::vector<CriterionRow>& rows) {
  std::size_t name_w = 4;
  for (const auto& r : rows) name_w = std::max(name_w, r.name.size());
  out << std::left << std::setw(3) << "id" << ' ' << std::setw(static_cast<int>(name_w)) << "name" << ' '
      << std::setw(7) << "status" << ' ' << std::setw(14) << "computed" << ' ' << std::setw(14) << "expected"
      << ' ' << std::setw(14) << "margin" << " detail\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(3) << r.id << ' ' << std::setw(static_cast<int>(name_w)) << r.name << ' '
        << std::setw(7) << status_name(r.status) << ' ' << std::setw(14) << format_number(r.computed) << ' '
        << std::setw(14) << format_number(r.expected) << ' ' << std::setw(14) << format_number(r.margin) << ' '
        << r.detail << '\n';
  }
}

}  // namespace advkit
