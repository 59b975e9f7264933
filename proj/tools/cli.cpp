#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fhr/analysis/csv.hpp"
#include "fhr/analysis/lebesgue.hpp"
#include "fhr/analysis/noise.hpp"
#include "fhr/analysis/reference.hpp"
#include "fhr/analysis/sweeps.hpp"
#include "fhr/error.hpp"
#include "fhr/format.hpp"
#include "fhr/interpolant.hpp"
#include "fhr/record.hpp"

namespace fhr::cli {
namespace {

using analysis::GridSpec;
using analysis::SweepOptions;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<double> interval{-5.0, 5.0};
  std::size_t n = 10;
  std::size_t d = 3;
  std::size_t e = 0;
  std::string fn = "runge";
  std::optional<std::size_t> grid;
  std::uint64_t seed = 1;
  double sigma = 0.0;
  std::string out;
  unsigned threads = 0;
  bool no_lebesgue = false;

  // eval
  std::vector<double> at;
  std::string record;
  // lebesgue
  bool profile = false;
  // scan
  std::size_t dmin = 0, dmax = 30, emin = 0, emax = 30;
  // converge
  std::vector<std::string> configs{"fh:3", "ext:14,4", "cheb", "spline"};
  std::size_t nmin = 4, nmax = 160, nstep = 1;
};

Error invalid(const std::string& message) { return Error(ErrorKind::invalid_interval, message); }

void check_interval(const RunConfig& c) {
  if (c.interval.size() != 2 || !(c.interval[0] < c.interval[1])) {
    throw invalid("interval must satisfy a < b");
  }
}

void check_sigma(const RunConfig& c) {
  if (!(c.sigma >= 0.0)) throw invalid("sigma must satisfy sigma ≥ 0");
}

std::optional<analysis::NoiseSpec> noise_of(const RunConfig& c) {
  if (c.sigma == 0.0) return std::nullopt;
  return analysis::NoiseSpec{c.sigma, c.seed};
}

SweepOptions sweep_options(const RunConfig& c) {
  SweepOptions options;
  if (c.grid) options.error_grid.count = *c.grid;
  options.noise = noise_of(c);
  options.lebesgue = !c.no_lebesgue;
  options.threads = c.threads;
  return options;
}

void check_grid(const RunConfig& c) {
  if (c.grid && *c.grid < 2) throw invalid("grid must have at least 2 points");
}

// Output is assembled in memory and written once, so a failed run leaves no
// partial file behind.
void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty() || c.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + c.out + "'");
  file << text;
  if (!file.flush()) throw IoError("failed writing output file '" + c.out + "'");
}

std::string cmd_eval(const RunConfig& c) {
  check_interval(c);
  check_sigma(c);
  if (c.n == 0) throw invalid("n must be at least 1");
  const ExtParams params{c.d, c.e};
  params.validate(c.n);
  const analysis::FunctionRegistry registry;
  const auto f = registry.resolve(c.fn, c.interval[0], c.interval[1]);

  NodeSet nodes = NodeSet::equispaced(c.interval[0], c.interval[1], c.n);
  Samples samples = sample(nodes, f.evaluate);
  if (const auto noise = noise_of(c)) samples = analysis::add_noise(samples, *noise);
  const Interpolant interp(std::move(nodes), std::move(samples), params);

  std::vector<double> xs = c.at;
  if (xs.empty()) {
    GridSpec spec;
    spec.count = c.grid.value_or(101);
    if (spec.count < 2) throw invalid("grid must have at least 2 points");
    xs = analysis::make_grid(spec, c.interval[0], c.interval[1]);
  }
  for (double x : xs) {
    if (!std::isfinite(x)) throw Error(ErrorKind::non_finite_input, "evaluation point is not finite");
  }

  if (!c.record.empty()) {
    std::ofstream file(c.record, std::ios::binary);
    if (!file) throw IoError("cannot open record file '" + c.record + "'");
    write_record(file, interp);
    if (!file.flush()) throw IoError("failed writing record file '" + c.record + "'");
  }

  std::ostringstream text;
  text << "x,r\n";
  for (double x : xs) text << shortest_repr(x) << ',' << shortest_repr(eval_extended(interp, x).value) << '\n';
  return text.str();
}

std::string cmd_lebesgue(const RunConfig& c) {
  check_interval(c);
  if (c.n == 0) throw invalid("n must be at least 1");
  const ExtParams params{c.d, c.e};
  params.validate(c.n);
  GridSpec grid = analysis::default_lebesgue_grid(c.n, c.d);
  if (c.grid) grid.count = *c.grid;
  if (grid.points() < 10 * c.n) throw invalid("Lebesgue grid must have at least 10 n points");

  const RationalBasis basis(NodeSet::equispaced(c.interval[0], c.interval[1], c.n), params);
  std::ostringstream text;
  if (c.profile) {
    text << "x,lambda\n";
    for (double x : analysis::make_grid(grid, c.interval[0], c.interval[1])) {
      text << shortest_repr(x) << ',' << shortest_repr(analysis::lebesgue_function(basis, x)) << '\n';
    }
    return text.str();
  }
  const auto report = analysis::lebesgue_constant(basis, grid);
  analysis::ResultRow row;
  row.method = c.e == 0 ? "fh" : "ext";
  row.n = c.n;
  row.d = c.d;
  row.e = c.e;
  row.lebesgue = report.lambda_max;
  const std::vector<analysis::ResultRow> rows{row};
  analysis::write_csv(text, rows);
  return text.str();
}

std::string cmd_scan(const RunConfig& c) {
  check_interval(c);
  check_sigma(c);
  check_grid(c);
  if (c.n == 0) throw invalid("n must be at least 1");
  if (c.dmin > c.dmax) throw invalid("dmin must not exceed dmax");
  if (c.emin > c.emax) throw invalid("emin must not exceed emax");
  const analysis::FunctionRegistry registry;
  const auto f = registry.resolve(c.fn, c.interval[0], c.interval[1]);
  const auto rows = analysis::scan_de(f, c.n, c.dmin, c.dmax, c.emin, c.emax, sweep_options(c));
  std::ostringstream text;
  analysis::write_csv(text, rows);
  return text.str();
}

std::string cmd_converge(const RunConfig& c) {
  check_interval(c);
  check_sigma(c);
  check_grid(c);
  if (c.nmin == 0 || c.nmin > c.nmax || c.nstep == 0) {
    throw invalid("n range must satisfy 1 ≤ nmin ≤ nmax and nstep ≥ 1");
  }
  std::vector<analysis::MethodConfig> configs;
  for (const auto& text : c.configs) configs.push_back(analysis::MethodConfig::parse(text));
  std::vector<std::size_t> ns;
  for (std::size_t n = c.nmin; n <= c.nmax; n += c.nstep) ns.push_back(n);
  const analysis::FunctionRegistry registry;
  const auto f = registry.resolve(c.fn, c.interval[0], c.interval[1]);
  const auto rows = analysis::converge_n(f, configs, ns, sweep_options(c));
  std::ostringstream text;
  analysis::write_csv(text, rows);
  return text.str();
}

std::string cmd_table1(const RunConfig& c) {
  check_grid(c);
  check_sigma(c);
  const auto rows = analysis::table1(sweep_options(c));
  std::ostringstream text;
  analysis::write_csv(text, rows);
  return text.str();
}

void add_common(CLI::App* sub, RunConfig& c, bool with_fn) {
  sub->add_option("--interval", c.interval, "Interval endpoints a b")->expected(2)->allow_extra_args(false);
  sub->add_option("--grid", c.grid, "Grid point count");
  sub->add_option("--out", c.out, "Output file (default: stdout)");
  if (with_fn) {
    sub->add_option("--fn", c.fn, "Function id: runge or poly:c0,c1,...");
    sub->add_option("--seed", c.seed, "Noise seed");
    sub->add_option("--sigma", c.sigma, "Gaussian noise standard deviation");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floater-Hormann and end-extended barycentric rational interpolation"};
  app.require_subcommand(1);
  RunConfig c;

  auto* eval = app.add_subcommand("eval", "Evaluate r^(d,e) of a sampled function");
  add_common(eval, c, true);
  eval->add_option("--n", c.n, "Number of subintervals");
  eval->add_option("--d", c.d, "Local polynomial degree");
  eval->add_option("--e", c.e, "Extra end interpolants per side");
  eval->add_option("--at", c.at, "Evaluation points (default: uniform grid)");
  eval->add_option("--record", c.record, "Also write the interpolant record to this file");

  auto* leb = app.add_subcommand("lebesgue", "Lebesgue constant of r^(d,e) on equispaced nodes");
  add_common(leb, c, false);
  leb->add_option("--n", c.n, "Number of subintervals");
  leb->add_option("--d", c.d, "Local polynomial degree");
  leb->add_option("--e", c.e, "Extra end interpolants per side");
  leb->add_flag("--profile", c.profile, "Write lambda(x) on the grid instead");

  auto* scan = app.add_subcommand("scan", "Errors and Lebesgue constants over a (d, e) grid");
  add_common(scan, c, true);
  scan->add_option("--n", c.n, "Number of subintervals")->default_val(64);
  scan->add_option("--dmin", c.dmin, "Smallest d");
  scan->add_option("--dmax", c.dmax, "Largest d");
  scan->add_option("--emin", c.emin, "Smallest e");
  scan->add_option("--emax", c.emax, "Largest e");
  scan->add_flag("--no-lebesgue", c.no_lebesgue, "Skip Lebesgue constants");
  scan->add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  auto* converge = app.add_subcommand("converge", "Errors as a function of n per method");
  add_common(converge, c, true);
  converge->add_option("--configs", c.configs, "Methods: fh:D ext:D,E cheb spline");
  converge->add_option("--nmin", c.nmin, "Smallest n");
  converge->add_option("--nmax", c.nmax, "Largest n");
  converge->add_option("--nstep", c.nstep, "Step in n");
  converge->add_flag("--no-lebesgue", c.no_lebesgue, "Skip Lebesgue constants");
  converge->add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  auto* table = app.add_subcommand("table1", "Runge's function on [-5, 5]: optimal-d FH vs (min(14,n), 4)");
  table->add_option("--grid", c.grid, "Error grid point count");
  table->add_option("--out", c.out, "Output file (default: stdout)");
  table->add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::string text;
    if (eval->parsed()) {
      text = cmd_eval(c);
    } else if (leb->parsed()) {
      text = cmd_lebesgue(c);
    } else if (scan->parsed()) {
      text = cmd_scan(c);
    } else if (converge->parsed()) {
      text = cmd_converge(c);
    } else {
      text = cmd_table1(c);
    }
    emit(c, text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fhr::cli
