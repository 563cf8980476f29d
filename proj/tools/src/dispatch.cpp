#include "advkit/cli/dispatch.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "advkit/advsdp.hpp"
#include "advkit/compose.hpp"
#include "advkit/csv.hpp"
#include "advkit/errors.hpp"
#include "advkit/randsearch/search.hpp"
#include "advkit/recur.hpp"
#include "advkit/report.hpp"
#include "advkit/strings/instance_io.hpp"
#include "advkit/strings/kcs.hpp"
#include "advkit/strings/lis.hpp"
#include "advkit/strings/minsub.hpp"
#include "advkit/strings/regular.hpp"
#include "advkit/strings/sweeps.hpp"
#include "output.hpp"

namespace advkit::cli {

namespace {

namespace fs = std::filesystem;
using strings::Symbol;
using strings::SymbolString;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every option value, grouped by subcommand.
struct Args {
  std::string format = "csv";
  std::string out;

  std::string fn;
  std::string dump_solution;
  bool cross_check = false;
  std::string a_csv;
  std::vector<std::string> z_csv;
  std::string gamma_csv;
  double certify_tol = 1e-9;

  std::string f1;
  std::string f2;
  std::size_t n1 = 2;
  std::size_t n2 = 2;
  bool vary_arity = false;
  bool allow_constant = false;
  std::size_t orand_trials = 100;
  std::size_t switch_arity = 2;
  std::size_t switch_values = 3;
  std::size_t switch_trials = 50;
  long long fact_rows = 4;
  long long fact_cols = 4;
  std::size_t fact_filters = 2;
  std::size_t fact_trials = 50;

  std::string rec_a = "1";
  std::string rec_b = "2";
  std::string rec_c = "0";
  std::string rec_p = "0";
  bool squared = false;
  std::string target;
  int max_k = 4;

  std::string in;
  std::string string;
  std::string x;
  std::string y;
  std::size_t k = 1;
  std::size_t m = 2;
  std::size_t i = 0;
  std::string split = "even";
  bool show_queries = false;
  std::string sweep;
  std::size_t sweep_trials = 10000;
  std::size_t sweep_max_n = 0;
  std::size_t sweep_max_k = 3;
  std::size_t sweep_m = 7;
  bool all_rows = false;
  std::size_t samples = 100000;

  std::size_t n = 1000;
  std::optional<std::size_t> target_rank;
  double delta = 0.01;
  double noise = 0.0;
  std::size_t run_trials = 1;
  std::size_t shrink_n = 100;
  std::size_t shrink_trials = 100000;
  std::size_t j = 1;
  bool max_first = false;
  std::size_t agree_trials = 1000;
  std::size_t agree_length = 64;

  std::vector<int> criteria;
};

struct Context {
  RunConfig config;
  Args args;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

SolveOptions solve_options(const RunConfig& c) { return SolveOptions{c.tol, kDefaultIterationBudget}; }

fs::path existing_file(Context& ctx, const std::string& path, const char* option) {
  if (path.empty()) throw UsageError(std::string(option) + " is required");
  if (!fs::is_regular_file(path)) throw UsageError("no such file: " + path);
  ctx.config.inputs.emplace_back(path);
  return path;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- adv / gamma2 / certify ----------------------------------------------

int run_adv(Context& ctx) {
  FiniteFunction f = load_function_file(existing_file(ctx, ctx.args.fn, "--fn"));
  AdvBracket b = adv_value(f, solve_options(ctx.config), ctx.args.cross_check);
  std::vector<Field> fields{{"value", b.upper}, {"lower", b.lower}, {"upper", b.upper}};
  if (b.certified_lower) fields.push_back({"certified_lower", *b.certified_lower});
  if (b.single_family) fields.push_back({"single_family", *b.single_family});
  if (b.solver_defect) fields.push_back({"solver_defect", true});
  emit_fields(*ctx.out, ctx.config.format, fields);
  if (!ctx.args.dump_solution.empty()) {
    auto [gram, masks] = gram_and_masks(f);
    Gamma2Result r = gamma2_filtered(output_difference(f), masks.masks, solve_options(ctx.config));
    std::vector<std::string> labels;
    for (int family = 0; family < 2; ++family) {
      for (std::size_t x = 0; x < f.size(); ++x) {
        for (std::size_t j = 0; j < f.arity(); ++j) {
          labels.push_back(std::string(family ? "v" : "u") + "[" + f.label(x) + "," + std::to_string(j) + "]");
        }
      }
    }
    std::ofstream dump(ctx.args.dump_solution);
    if (!dump) throw UsageError("cannot write " + ctx.args.dump_solution);
    write_matrix_csv(dump, labels, labels, r.solution.gram);
  }
  return b.solver_defect ? kCounterexample : kSuccess;
}

int run_gamma2(Context& ctx) {
  LabeledMatrix a = read_matrix_csv_file(existing_file(ctx, ctx.args.a_csv, "--a"));
  std::vector<Eigen::MatrixXd> z;
  for (const auto& path : ctx.args.z_csv) z.push_back(read_matrix_csv_file(existing_file(ctx, path, "--z")).values);
  if (z.empty()) throw UsageError("--z needs at least one filter matrix");
  Gamma2Result r = gamma2_filtered(a.values, z, solve_options(ctx.config));
  emit_fields(*ctx.out, ctx.config.format,
              {{"value", r.value}, {"iterations", static_cast<std::int64_t>(r.iterations)}});
  return kSuccess;
}

int run_certify(Context& ctx) {
  FiniteFunction f = load_function_file(existing_file(ctx, ctx.args.fn, "--fn"));
  LabeledMatrix g = read_matrix_csv_file(existing_file(ctx, ctx.args.gamma_csv, "--gamma"));
  if (g.values.rows() != static_cast<Eigen::Index>(f.size()) || g.values.cols() != g.values.rows()) {
    throw UsageError("--gamma must be a |D| x |D| matrix");
  }
  double lower = adv_lower_certify(f, AdversaryMatrix{g.values}, ctx.args.certify_tol);
  emit_fields(*ctx.out, ctx.config.format, {{"lower", lower}});
  return kSuccess;
}

// ---- compose --------------------------------------------------------------

int emit_check(Context& ctx, const CheckReport& report) {
  emit_table(*ctx.out, ctx.config.format, check_table(report));
  return report.all_pass() ? kSuccess : kCounterexample;
}

int run_orand(Context& ctx) {
  const Args& a = ctx.args;
  if (!a.f1.empty() || !a.f2.empty()) {
    FiniteFunction f1 = load_function_file(existing_file(ctx, a.f1, "--f1"));
    FiniteFunction f2 = load_function_file(existing_file(ctx, a.f2, "--f2"));
    return emit_check(ctx, verify_or_and_bound(f1, f2, solve_options(ctx.config)));
  }
  OrAndSweep sweep;
  sweep.n1 = a.n1;
  sweep.n2 = a.n2;
  sweep.vary_arity = a.vary_arity;
  sweep.nonconstant = !a.allow_constant;
  sweep.trials = a.orand_trials;
  sweep.seed = ctx.config.seed;
  return emit_check(ctx, sweep_or_and(sweep, solve_options(ctx.config)));
}

int run_switch(Context& ctx) {
  SwitchSweep sweep;
  sweep.arity = ctx.args.switch_arity;
  sweep.max_values = ctx.args.switch_values;
  sweep.trials = ctx.args.switch_trials;
  sweep.seed = ctx.config.seed;
  return emit_check(ctx, sweep_switch(sweep, solve_options(ctx.config)));
}

int run_facts(Context& ctx) {
  FactSweep sweep;
  sweep.rows = ctx.args.fact_rows;
  sweep.cols = ctx.args.fact_cols;
  sweep.filters = ctx.args.fact_filters;
  sweep.trials = ctx.args.fact_trials;
  sweep.seed = ctx.config.seed;
  return emit_check(ctx, gamma2_fact_checks(sweep, solve_options(ctx.config)));
}

// ---- recur ----------------------------------------------------------------

std::vector<Field> class_fields(const BoundClass& b) {
  std::vector<Field> f{{"bound", b.str()}};
  if (b.case_id) f.push_back({"case", static_cast<std::int64_t>(b.case_id)});
  if (b.near_boundary) f.push_back({"near_boundary", true});
  return f;
}

int run_master(Context& ctx) {
  RecurrenceSpec spec;
  spec.a = parse_real(ctx.args.rec_a);
  spec.b = parse_real(ctx.args.rec_b);
  spec.c = parse_exponent(ctx.args.rec_c);
  spec.p = parse_rational(ctx.args.rec_p);
  spec.squared = ctx.args.squared;
  emit_fields(*ctx.out, ctx.config.format, class_fields(master_solve(spec)));
  return kSuccess;
}

int run_split_factor(Context& ctx) {
  if (ctx.args.target.empty()) throw UsageError("--target is required");
  std::uint64_t m = min_splitting_factor(parse_exponent(ctx.args.target));
  emit_fields(*ctx.out, ctx.config.format, {{"m", static_cast<std::int64_t>(m)}});
  return kSuccess;
}

int run_headline(Context& ctx) {
  Table t{{"problem", "k", "derived", "stated", "match", "derivation"}, {}};
  bool ok = true;
  for (const auto& row : headline_bounds(ctx.args.max_k)) {
    ok = ok && row.match;
    t.rows.push_back({row.problem, row.k ? std::to_string(*row.k) : std::string(), row.derived.str(),
                      row.stated.str(), row.match, row.derivation});
  }
  emit_table(*ctx.out, ctx.config.format, t);
  return ok ? kSuccess : kCounterexample;
}

// ---- strings --------------------------------------------------------------

// A file path when one exists; otherwise literal tokens. Values that look
// like paths but do not exist are usage errors.
std::vector<std::string> literal_or_file(Context& ctx, const std::string& value) {
  if (fs::is_regular_file(value)) {
    ctx.config.inputs.emplace_back(value);
    std::istringstream lines(read_text(value));
    std::string line;
    std::string body;
    while (std::getline(lines, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (auto colon = line.find(':'); colon != std::string::npos) line.erase(0, colon + 1);
      body += line + ' ';
    }
    return strings::tokenize(body);
  }
  if (value.find('/') != std::string::npos || value.find(".txt") != std::string::npos) {
    throw UsageError("no such file: " + value);
  }
  return strings::tokenize(value);
}

strings::StringInstance read_strings(Context& ctx, bool paired) {
  const Args& a = ctx.args;
  if (!a.in.empty()) {
    strings::StringInstance inst = strings::load_instance_file(existing_file(ctx, a.in, "--in"));
    if (paired && (!inst.x || !inst.y)) throw UsageError(a.in + ": needs x: and y: lines");
    if (!paired && !inst.string) {
      if (!inst.x) throw UsageError(a.in + ": needs a string: line");
      inst.string = inst.x;
    }
    return inst;
  }
  strings::StringInstance inst;
  if (paired) {
    if (a.x.empty() || a.y.empty()) throw UsageError("--x and --y (or --in) are required");
    auto enc = strings::encode_tokens({literal_or_file(ctx, a.x), literal_or_file(ctx, a.y)}, &inst.names);
    inst.x = enc[0];
    inst.y = enc[1];
  } else {
    if (a.string.empty()) throw UsageError("--string (or --in) is required");
    inst.string = strings::encode_tokens({literal_or_file(ctx, a.string)}, &inst.names)[0];
  }
  return inst;
}

strings::Split parse_split(const std::string& s) {
  return s == "balanced" ? strings::Split::balanced : strings::Split::even;
}

int emit_result(Context& ctx, bool result, std::uint64_t queries) {
  std::vector<Field> f{{"result", result}};
  if (ctx.args.show_queries) f.push_back({"queries", static_cast<std::int64_t>(queries)});
  emit_fields(*ctx.out, ctx.config.format, f);
  return kSuccess;
}

int run_string_problem(Context& ctx, const std::string& problem) {
  const Args& a = ctx.args;
  const bool paired = problem == "minsub" || problem == "kcs";
  strings::StringInstance inst = read_strings(ctx, paired);
  if (paired) {
    strings::QueryString x(*inst.x);
    strings::QueryString y(*inst.y);
    bool r = problem == "minsub" ? strings::minsub_decide(x, y) : strings::kcs_decide(x, y, a.k);
    return emit_result(ctx, r, x.queries() + y.queries());
  }
  const SymbolString& s = *inst.string;
  if (problem == "regular") {
    strings::QueryString q(s);
    bool r = strings::regular_decide(q);
    return emit_result(ctx, r, q.queries());
  }
  if (problem == "kis") {
    strings::QueryString q(s);
    bool r = strings::lis_decide(q, a.k);
    return emit_result(ctx, r, q.queries());
  }
  if (a.i >= s.size()) throw UsageError("--i must be below the string length");
  bool r = problem == "rotation" ? strings::rotation_decide(s, a.i) : strings::suffix_decide(s, a.i);
  return emit_result(ctx, r, 2 * s.size());
}

int run_string_sweep(Context& ctx) {
  const Args& a = ctx.args;
  const std::uint64_t seed = ctx.config.seed;
  auto max_n = [&](std::size_t fallback) { return a.sweep_max_n ? a.sweep_max_n : fallback; };
  strings::StringSweep sw;
  if (a.sweep == "regular") {
    sw = strings::regular_sweep(max_n(10), a.all_rows);
  } else if (a.sweep == "minsub") {
    sw = strings::minsub_recurrence_sweep(a.sweep_trials, seed, a.all_rows);
  } else if (a.sweep == "positions") {
    sw = strings::minsub_positions_sweep(a.sweep_trials, seed, a.all_rows);
  } else if (a.sweep == "kis") {
    sw = strings::lis_sweep(max_n(8), 3, a.sweep_max_k, a.all_rows);
  } else if (a.sweep == "kcs") {
    sw = strings::kcs_sweep(a.sweep_trials, max_n(28), a.sweep_max_k, a.sweep_m, seed, a.all_rows);
  } else {
    sw = strings::witness_sweep(a.sweep_trials, max_n(12), seed, a.all_rows).sweep;
  }
  emit_table(*ctx.out, ctx.config.format, query_table(sw.report));
  *ctx.err << sw.instances << " instances, " << sw.failures << " failures\n";
  return sw.pass() ? kSuccess : kCounterexample;
}

int run_signature(Context& ctx) {
  strings::StringInstance inst = read_strings(ctx, true);
  auto sig = strings::signature(*inst.x, *inst.y, ctx.args.m, parse_split(ctx.args.split));
  std::string crit;
  for (const auto& [i, j] : strings::critical_set(sig)) {
    crit += (crit.empty() ? "" : ";") + std::string("(") + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  emit_fields(*ctx.out, ctx.config.format, {{"signature", sig.str()}, {"critical", crit}});
  return kSuccess;
}

int run_max_critical(Context& ctx) {
  auto mc = strings::max_critical(ctx.args.m, ctx.args.samples, ctx.config.seed);
  emit_fields(*ctx.out, ctx.config.format,
              {{"m", static_cast<std::int64_t>(mc.m)},
               {"value", static_cast<std::int64_t>(mc.value)},
               {"exhaustive", mc.exhaustive},
               {"violations", static_cast<std::int64_t>(mc.violations)},
               {"method", mc.method}});
  return mc.violations ? kCounterexample : kSuccess;
}

// ---- randsearch -----------------------------------------------------------

int run_search(Context& ctx) {
  const Args& a = ctx.args;
  randsearch::SuccessSweep sweep;
  sweep.n = a.n;
  sweep.target_rank = a.target_rank;
  sweep.delta = a.delta;
  sweep.trials = a.run_trials;
  sweep.seed = ctx.config.seed;
  sweep.noise = a.noise;
  auto rep = randsearch::success_sweep(sweep);
  Table t{{"trial", "iterations", "success", "O_calls", "R_calls"}, {}};
  for (std::size_t i = 0; i < rep.runs.size(); ++i) {
    const auto& r = rep.runs[i];
    t.rows.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(r.iterations), r.found.has_value(),
                      static_cast<std::int64_t>(r.compare_calls), static_cast<std::int64_t>(r.sample_calls)});
  }
  emit_table(*ctx.out, ctx.config.format, t);
  *ctx.err << "success " << format_number(rep.success_rate()) << ", max iterations " << rep.max_iterations << "/"
           << rep.budget << '\n';
  return rep.success_rate() >= 1 - a.delta ? kSuccess : kCounterexample;
}

int run_shrink(Context& ctx) {
  auto rep = randsearch::shrink_statistic(ctx.args.shrink_n, ctx.args.shrink_trials, ctx.config.seed);
  Table t{{"statistic", "t", "empirical", "standard_error", "bound", "pass"}, {}};
  t.rows.push_back({std::string("ratio"), std::int64_t{0}, rep.ratio_mean, rep.ratio_standard_error,
                    0.75 + 3 * rep.ratio_standard_error, rep.ratio_pass});
  for (const auto& row : rep.tail) {
    t.rows.push_back({std::string("tail"), static_cast<std::int64_t>(row.t), row.empirical, row.standard_error,
                      row.bound, row.pass});
  }
  emit_table(*ctx.out, ctx.config.format, t);
  return rep.pass() ? kSuccess : kCounterexample;
}

int run_minlast(Context& ctx) {
  const Args& a = ctx.args;
  strings::StringInstance inst = read_strings(ctx, false);
  strings::QueryString q(*inst.string);
  auto via = a.max_first ? randsearch::max_first_via_search(q, a.j, a.delta, ctx.config.seed, a.noise)
                         : randsearch::min_last_via_search(q, a.j, a.delta, ctx.config.seed, a.noise);
  auto exact = a.max_first ? strings::max_first(*inst.string, a.j) : strings::min_last(*inst.string, a.j);
  auto show = [&](const std::optional<Symbol>& v) { return v ? inst.token(*v) : std::string("none"); };
  emit_fields(*ctx.out, ctx.config.format,
              {{"value", show(via.value)},
               {"exact", show(exact)},
               {"agree", via.value == exact},
               {"iterations", static_cast<std::int64_t>(via.run.iterations)},
               {"O_calls", static_cast<std::int64_t>(via.run.compare_calls)},
               {"R_calls", static_cast<std::int64_t>(via.run.sample_calls)}});
  return kSuccess;
}

int run_agreement(Context& ctx) {
  randsearch::AgreementSweep sweep;
  sweep.length = ctx.args.agree_length;
  sweep.j = ctx.args.j;
  sweep.delta = ctx.args.delta;
  sweep.trials = ctx.args.agree_trials;
  sweep.seed = ctx.config.seed;
  auto rep = randsearch::agreement_sweep(sweep);
  emit_fields(*ctx.out, ctx.config.format,
              {{"trials", static_cast<std::int64_t>(rep.trials)},
               {"min_last_rate", rep.min_last_rate()},
               {"max_first_rate", rep.max_first_rate()}});
  bool ok = rep.min_last_rate() >= 1 - sweep.delta && rep.max_first_rate() >= 1 - sweep.delta;
  return ok ? kSuccess : kCounterexample;
}

// ---- report ---------------------------------------------------------------

int run_report(Context& ctx) {
  ReportOptions opt;
  opt.tol = ctx.config.tol;
  opt.seed = ctx.config.seed;
  opt.criteria = ctx.args.criteria;
  auto rows = reproduction_report(opt);
  Table t{{"criterion", "name", "anchor", "computed", "expected", "margin", "status", "detail"}, {}};
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass();
    t.rows.push_back({static_cast<std::int64_t>(r.id), r.name, r.anchor, r.computed, r.expected, r.margin,
                      std::string(status_name(r.status)), r.detail});
  }
  emit_table(*ctx.out, ctx.config.format, t);
  return ok ? kSuccess : kCounterexample;
}

// ---- wiring ---------------------------------------------------------------

using Handler = std::function<int(Context&)>;

const CLI::App* deepest(const CLI::App* app) {
  for (const CLI::App* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  return Format::csv;
}

void add_string_inputs(CLI::App* sub, Args& a, bool paired) {
  sub->add_option("--in", a.in, "instance file (string:, x:, y: lines)");
  if (paired) {
    sub->add_option("--x", a.x, "x as a file or literal tokens");
    sub->add_option("--y", a.y, "y as a file or literal tokens");
  } else {
    sub->add_option("--string", a.string, "the string as a file or literal tokens");
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  Args& a = ctx.args;
  RunConfig& cfg = ctx.config;

  CLI::App app{"Adversary bounds, divide-and-conquer recurrences and string problems", "advkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", cfg.tol, "solver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--format", a.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", a.out, "write output to this file");

  std::map<const CLI::App*, Handler> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    handlers[sub] = std::move(h);
    return sub;
  };

  auto* adv = leaf(&app, "adv", "adversary bracket of a function file", run_adv);
  adv->add_option("--fn", a.fn, "function file")->required();
  adv->add_option("--dump-solution", a.dump_solution, "write the solution Gram matrix as CSV");
  adv->add_flag("--cross-check", a.cross_check, "also solve the single-family program (Boolean f)");

  auto* g2 = leaf(&app, "gamma2", "filtered gamma2 norm of a CSV matrix", run_gamma2);
  g2->add_option("--a", a.a_csv, "target matrix CSV")->required();
  g2->add_option("--z", a.z_csv, "filter matrix CSVs")->required()->expected(1, -1);

  auto* cert = leaf(&app, "certify", "lower bound from an adversary matrix", run_certify);
  cert->add_option("--fn", a.fn, "function file")->required();
  cert->add_option("--gamma", a.gamma_csv, "adversary matrix CSV")->required();
  cert->add_option("--cert-tol", a.certify_tol, "tolerance for symmetry and Gamma o F = 0");

  auto* compose = app.add_subcommand("compose", "composition checks");
  compose->require_subcommand(1);
  auto* orand = leaf(compose, "verify-orand", "OR/AND composition bound", run_orand);
  orand->add_option("--f1", a.f1, "first function file (single pair mode)");
  orand->add_option("--f2", a.f2, "second function file (single pair mode)");
  orand->add_option("--n1", a.n1, "arity of f1");
  orand->add_option("--n2", a.n2, "arity of f2");
  orand->add_option("--trials", a.orand_trials, "random pairs");
  orand->add_flag("--vary-arity", a.vary_arity, "draw each arity from [1, n_i]");
  orand->add_flag("--allow-constant", a.allow_constant, "keep constant truth tables");
  auto* sw = leaf(compose, "verify-switch", "SWITCH proof-chain bound", run_switch);
  sw->add_option("--arity", a.switch_arity, "input length");
  sw->add_option("--values", a.switch_values, "largest codomain size of f");
  sw->add_option("--trials", a.switch_trials, "random instances");
  auto* facts = leaf(compose, "gamma2-facts", "triangle, Hadamard and direct-sum facts", run_facts);
  facts->add_option("--rows", a.fact_rows, "matrix rows");
  facts->add_option("--cols", a.fact_cols, "matrix columns");
  facts->add_option("--filters", a.fact_filters, "filter matrices");
  facts->add_option("--trials", a.fact_trials, "random instances");

  auto* recur = app.add_subcommand("recur", "recurrence solving");
  recur->require_subcommand(1);
  auto* master = leaf(recur, "master", "A(n) = a A(n/b) + O(n^c log^p n)", run_master);
  master->add_option("--a", a.rec_a, "branch count, e.g. 2 or sqrt(13)")->required();
  master->add_option("--b", a.rec_b, "shrink factor")->required();
  master->add_option("--c", a.rec_c, "aux exponent, e.g. 2/3")->required();
  master->add_option("--p", a.rec_p, "aux log power");
  master->add_flag("--squared", a.squared, "A is the square of the quantity of interest");
  auto* split = leaf(recur, "split-factor", "smallest m with log_m sqrt(2m-1) < target", run_split_factor);
  split->add_option("--target", a.target, "target exponent in (0, 1)")->required();
  auto* headline = leaf(recur, "headline", "derived vs stated bound classes", run_headline);
  headline->add_option("--max-k", a.max_k, "largest k for k-IS and k-CS rows");

  auto* str = app.add_subcommand("strings", "string problems");
  str->require_subcommand(1);
  for (const char* p : {"regular", "minsub", "rotation", "suffix", "kis", "kcs"}) {
    std::string problem = p;
    auto* sub = leaf(str, problem, "decide " + problem, [problem](Context& c) { return run_string_problem(c, problem); });
    add_string_inputs(sub, a, problem == "minsub" || problem == "kcs");
    if (problem == "kis" || problem == "kcs") sub->add_option("--k", a.k, "subsequence length");
    if (problem == "rotation" || problem == "suffix") sub->add_option("--i", a.i, "0-based index");
    sub->add_flag("--queries", a.show_queries, "also print the number of symbol reads");
  }
  auto* sweep = leaf(str, "sweep", "decomposition sweeps (CSV: instance_id,lhs,rhs,pass,queries)", run_string_sweep);
  sweep->add_option("name", a.sweep, "regular, minsub, positions, kis, kcs or witness")
      ->required()
      ->check(CLI::IsMember({"regular", "minsub", "positions", "kis", "kcs", "witness"}));
  sweep->add_option("--trials", a.sweep_trials, "random instances");
  sweep->add_option("--max-n", a.sweep_max_n, "largest string length");
  sweep->add_option("--max-k", a.sweep_max_k, "largest k");
  sweep->add_option("--m", a.sweep_m, "splitting factor (kcs)");
  sweep->add_flag("--all", a.all_rows, "emit passing rows too");
  auto* sig = leaf(str, "signature", "block signature and critical cells", run_signature);
  add_string_inputs(sig, a, true);
  sig->add_option("--m", a.m, "splitting factor")->required();
  sig->add_option("--split", a.split, "even or balanced")->check(CLI::IsMember({"even", "balanced"}));
  auto* mc = leaf(str, "max-critical", "largest critical set over signatures", run_max_critical);
  mc->add_option("--m", a.m, "splitting factor")->required()->check(CLI::Range(1, 8));
  mc->add_option("--samples", a.samples, "sampled signatures for m >= 5");

  auto* rs = app.add_subcommand("randsearch", "randomized search");
  rs->require_subcommand(1);
  auto* run = leaf(rs, "run", "seeded runs on S = {1..n}", run_search);
  run->add_option("--n", a.n, "multiset size");
  run->add_option("--target-rank", a.target_rank, "1-based rank of s (random per trial when absent)");
  run->add_option("--delta", a.delta, "failure probability");
  run->add_option("--trials", a.run_trials, "runs");
  run->add_option("--noise", a.noise, "probability of a wrong comparison answer");
  auto* shrink = leaf(rs, "shrink", "candidate-set shrink statistics", run_shrink);
  shrink->add_option("--n", a.shrink_n, "multiset size");
  shrink->add_option("--trials", a.shrink_trials, "runs");
  auto* minlast = leaf(rs, "minlast", "min-last (or max-first) by randomized search", run_minlast);
  add_string_inputs(minlast, a, false);
  minlast->add_option("--j", a.j, "subsequence length")->required();
  minlast->add_option("--delta", a.delta, "failure probability");
  minlast->add_option("--noise", a.noise, "probability of a wrong comparison answer");
  minlast->add_flag("--max-first", a.max_first, "search for max-first instead");
  auto* agree = leaf(rs, "agreement", "search vs exact min-last/max-first on random strings", run_agreement);
  agree->add_option("--j", a.j, "subsequence length");
  agree->add_option("--delta", a.delta, "failure probability");
  agree->add_option("--trials", a.agree_trials, "random strings");
  agree->add_option("--length", a.agree_length, "string length");

  auto* report = leaf(&app, "report", "run the acceptance criteria", run_report);
  report->add_option("--criteria", a.criteria, "criterion ids, e.g. 1,5,7")->delimiter(',');

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest(&app)->help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return kUsageError;
  }

  const CLI::App* chosen = deepest(&app);
  auto h = handlers.find(chosen);
  if (h == handlers.end()) {
    err << "error: missing subcommand\n\n" << chosen->help();
    return kUsageError;
  }
  for (const CLI::App* s = chosen; s && s != &app; s = s->get_parent()) {
    cfg.command.insert(cfg.command.begin(), s->get_name());
  }
  cfg.format = parse_format(a.format);

  std::ofstream file;
  ctx.out = &out;
  ctx.err = &err;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) {
      err << "error: cannot write " << a.out << '\n';
      return kUsageError;
    }
    cfg.output = a.out;
    ctx.out = &file;
  }

  auto usage = [&](const std::string& what) {
    err << "error: " << what << "\n\n" << chosen->help();
    return kUsageError;
  };
  try {
    return h->second(ctx);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const ParseError& e) {
    return usage(e.what());
  } catch (const InvalidArgument& e) {
    return usage(e.what());
  } catch (const InvalidCertificate& e) {
    err << "invalid certificate: " << e.what() << '\n';
    return kCounterexample;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kCounterexample;
  } catch (const ImpossibleOracleAnswer& e) {
    err << "inconsistent oracle: " << e.what() << '\n';
    return kCounterexample;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kCounterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace advkit::cli
