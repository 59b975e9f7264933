#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fhr/analysis/grid.hpp"
#include "fhr/analysis/noise.hpp"
#include "fhr/analysis/reference.hpp"

namespace fhr::analysis {

/// One output record. Empty optionals are sentinels and print as NA.
struct ResultRow {
  std::string method;
  std::size_t n = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> e;
  std::optional<double> linf;
  std::optional<double> l1;
  std::optional<double> lebesgue;
  std::optional<std::uint64_t> seed;
  double sigma = 0.0;

  bool is_sentinel() const noexcept { return !linf.has_value(); }
};

/// An approximant family for convergence studies.
struct MethodConfig {
  enum class Kind { fh, ext, cheb, spline };

  Kind kind = Kind::fh;
  std::size_t d = 0;
  std::size_t e = 0;

  /// Parses "fh:D", "ext:D,E", "cheb" or "spline"; throws Error(parse_error).
  static MethodConfig parse(const std::string& text);
  std::string label() const;

  friend bool operator==(const MethodConfig&, const MethodConfig&) = default;
};

struct SweepOptions {
  GridSpec error_grid;
  std::optional<NoiseSpec> noise;
  bool lebesgue = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Rows for every (d, e) with d in [d_min, d_max], e in [e_min, e_max],
/// d-major. Cells with d > n or e > d are sentinels.
std::vector<ResultRow> scan_de(const ReferenceFunction& f, std::size_t n, std::size_t d_min,
                               std::size_t d_max, std::size_t e_min, std::size_t e_max,
                               const SweepOptions& options);

/// Rows for every config and n, config-major. Infeasible cells (d > n, or
/// n < 3 for the spline) are sentinels.
std::vector<ResultRow> converge_n(const ReferenceFunction& f, const std::vector<MethodConfig>& configs,
                                  const std::vector<std::size_t>& n_list, const SweepOptions& options);

/// Floater-Hormann degree used for each table row, the best known d for
/// Runge's function on [-5, 5].
struct Table1Row {
  std::size_t n;
  std::size_t fh_d;
};
const std::vector<Table1Row>& table1_layout();

/// Errors of r^(d) and r^(min(14, n), 4) for Runge's function on [-5, 5],
/// two rows per n (fh first).
std::vector<ResultRow> table1(const SweepOptions& options);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace fhr::analysis
