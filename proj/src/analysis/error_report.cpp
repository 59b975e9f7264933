#include "fhr/analysis/error_report.hpp"

#include <cmath>

namespace fhr::analysis {

ErrorReport error_report(const std::function<double(double)>& approximant,
                         const ReferenceFunction& f, const GridSpec& grid) {
  const std::vector<double> xs = make_grid(grid, f.a, f.b);
  ErrorReport report;
  report.grid = grid;
  report.a = f.a;
  report.b = f.b;
  double previous = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double err = std::abs(approximant(xs[k]) - f(xs[k]));
    if (err > report.linf || std::isnan(err)) report.linf = err;
    if (k > 0) report.l1 += 0.5 * (previous + err) * (xs[k] - xs[k - 1]);
    previous = err;
  }
  return report;
}

ErrorReport error_report(const Interpolant& interp, const ReferenceFunction& f,
                         const GridSpec& grid) {
  ErrorReport report = error_report([&interp](double x) { return interp(x); }, f, grid);
  report.n = interp.nodes().n();
  report.d = interp.params().d;
  report.e = interp.params().e;
  return report;
}

}  // namespace fhr::analysis
