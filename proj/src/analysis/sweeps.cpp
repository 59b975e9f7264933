#include "fhr/analysis/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "fhr/analysis/baselines.hpp"
#include "fhr/analysis/error_report.hpp"
#include "fhr/analysis/lebesgue.hpp"
#include "fhr/error.hpp"
#include "fhr/format.hpp"
#include "fhr/interpolant.hpp"

namespace fhr::analysis {
namespace {

ResultRow blank_row(const std::string& method, std::size_t n, const SweepOptions& options) {
  ResultRow row;
  row.method = method;
  row.n = n;
  if (options.noise) {
    row.seed = options.noise->seed;
    row.sigma = options.noise->sigma;
  }
  return row;
}

std::vector<double> noisy_values(const std::vector<double>& xs, const ReferenceFunction& f,
                                 const SweepOptions& options) {
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(f(x));
  return options.noise ? add_noise(std::move(ys), *options.noise) : ys;
}

void fill_rational(ResultRow& row, const ReferenceFunction& f, std::size_t n, std::size_t d,
                   std::size_t e, const SweepOptions& options) {
  row.d = d;
  row.e = e;
  NodeSet nodes = NodeSet::equispaced(f.a, f.b, n);
  const std::vector<double> xs(nodes.xs().begin(), nodes.xs().end());
  const Interpolant interp(std::move(nodes), Samples(noisy_values(xs, f, options)), ExtParams{d, e});
  const ErrorReport err = error_report(interp, f, options.error_grid);
  row.linf = err.linf;
  row.l1 = err.l1;
  if (options.lebesgue) row.lebesgue = lebesgue_constant(interp.basis()).lambda_max;
}

}  // namespace

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

MethodConfig MethodConfig::parse(const std::string& text) {
  const auto bad = [&text](const std::string& why) {
    return Error(ErrorKind::parse_error, "bad method config '" + text + "': " + why);
  };
  const auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw bad("expected a nonnegative integer");
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  if (text == "cheb") return {Kind::cheb, 0, 0};
  if (text == "spline") return {Kind::spline, 0, 0};
  if (text.rfind("fh:", 0) == 0) return {Kind::fh, number(text.substr(3)), 0};
  if (text.rfind("ext:", 0) == 0) {
    const std::string rest = text.substr(4);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw bad("expected ext:D,E");
    MethodConfig config{Kind::ext, number(rest.substr(0, comma)), number(rest.substr(comma + 1))};
    if (config.e > config.d) {
      throw Error(ErrorKind::extension_out_of_range, "e must satisfy 0 ≤ e ≤ d in '" + text + "'");
    }
    return config;
  }
  throw bad("expected fh:D, ext:D,E, cheb or spline");
}

std::string MethodConfig::label() const {
  switch (kind) {
    case Kind::fh: return "fh";
    case Kind::ext: return "ext";
    case Kind::cheb: return "cheb";
    case Kind::spline: return "spline";
  }
  return "?";
}

std::vector<ResultRow> scan_de(const ReferenceFunction& f, std::size_t n, std::size_t d_min,
                               std::size_t d_max, std::size_t e_min, std::size_t e_max,
                               const SweepOptions& options) {
  if (d_min > d_max || e_min > e_max) {
    throw Error(ErrorKind::degree_out_of_range, "scan ranges must satisfy min <= max");
  }
  if (n == 0) throw Error(ErrorKind::invalid_interval, "n must be at least 1");
  const std::size_t e_count = e_max - e_min + 1;
  const std::size_t cells = (d_max - d_min + 1) * e_count;
  std::vector<ResultRow> rows(cells);
  parallel_for(cells, options.threads, [&](std::size_t k) {
    const std::size_t d = d_min + k / e_count;
    const std::size_t e = e_min + k % e_count;
    ResultRow row = blank_row(e == 0 ? "fh" : "ext", n, options);
    if (d > n || e > d) {
      row.d = d;
      row.e = e;
    } else {
      fill_rational(row, f, n, d, e, options);
    }
    rows[k] = std::move(row);
  });
  return rows;
}

std::vector<ResultRow> converge_n(const ReferenceFunction& f, const std::vector<MethodConfig>& configs,
                                  const std::vector<std::size_t>& n_list, const SweepOptions& options) {
  const std::size_t cells = configs.size() * n_list.size();
  std::vector<ResultRow> rows(cells);
  parallel_for(cells, options.threads, [&](std::size_t k) {
    const MethodConfig& config = configs[k / n_list.size()];
    const std::size_t n = n_list[k % n_list.size()];
    ResultRow row = blank_row(config.label(), n, options);
    switch (config.kind) {
      case MethodConfig::Kind::fh:
      case MethodConfig::Kind::ext:
        if (config.d > n || n == 0) {
          row.d = config.d;
          row.e = config.e;
        } else {
          fill_rational(row, f, n, config.d, config.e, options);
        }
        break;
      case MethodConfig::Kind::cheb: {
        if (n == 0) break;
        const std::vector<double> xs = chebyshev_points(f.a, f.b, n);
        const ChebyshevInterpolant cheb(f.a, f.b, noisy_values(xs, f, options));
        const ErrorReport err = error_report(std::cref(cheb), f, options.error_grid);
        row.linf = err.linf;
        row.l1 = err.l1;
        break;
      }
      case MethodConfig::Kind::spline: {
        if (n < 3) break;
        const NodeSet nodes = NodeSet::equispaced(f.a, f.b, n);
        const std::vector<double> xs(nodes.xs().begin(), nodes.xs().end());
        const CubicSpline spline(nodes, Samples(noisy_values(xs, f, options)));
        const ErrorReport err = error_report(std::cref(spline), f, options.error_grid);
        row.linf = err.linf;
        row.l1 = err.l1;
        break;
      }
    }
    rows[k] = std::move(row);
  });
  return rows;
}

const std::vector<Table1Row>& table1_layout() {
  static const std::vector<Table1Row> layout = {{10, 0}, {20, 1}, {40, 3}, {80, 7}, {160, 10}};
  return layout;
}

std::vector<ResultRow> table1(const SweepOptions& options) {
  const ReferenceFunction f = runge(-5.0, 5.0);
  const auto& layout = table1_layout();
  std::vector<ResultRow> rows(2 * layout.size());
  parallel_for(rows.size(), options.threads, [&](std::size_t k) {
    const Table1Row& entry = layout[k / 2];
    const bool proposed = k % 2 == 1;
    ResultRow row = blank_row(proposed ? "ext" : "fh", entry.n, options);
    if (proposed) {
      fill_rational(row, f, entry.n, std::min<std::size_t>(14, entry.n), 4, options);
    } else {
      fill_rational(row, f, entry.n, entry.fh_d, 0, options);
    }
    rows[k] = std::move(row);
  });
  return rows;
}

}  // namespace fhr::analysis
