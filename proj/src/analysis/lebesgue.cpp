#include "fhr/analysis/lebesgue.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fhr/error.hpp"

namespace fhr::analysis {
namespace {

class LebesgueEvaluator {
 public:
  explicit LebesgueEvaluator(const RationalBasis& basis)
      : basis_(basis), scratch_(basis.nodes().size()) {}

  double operator()(double x) {
    basis_values(basis_, x, scratch_);
    double sum = 0.0;
    for (double v : scratch_) sum += std::abs(v);
    return sum;
  }

 private:
  const RationalBasis& basis_;
  std::vector<double> scratch_;
};

struct Peak {
  double x;
  double value;
};

// Golden-section search for a maximum of lambda on [lo, hi].
Peak golden_section(LebesgueEvaluator& lambda, double lo, double hi, double tol) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = lambda(c);
  double fd = lambda(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = lambda(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = lambda(d);
    }
  }
  return fc >= fd ? Peak{c, fc} : Peak{d, fd};
}

}  // namespace

double lebesgue_function(const RationalBasis& basis, double x) {
  LebesgueEvaluator lambda(basis);
  return lambda(x);
}

double lebesgue_function(const NodeSet& nodes, const ExtParams& params, double x) {
  return lebesgue_function(RationalBasis(nodes, params), x);
}

GridSpec default_lebesgue_grid(std::size_t n, std::size_t d) {
  GridSpec grid;
  grid.count = 10 * n * (d + 1) + 1;
  return grid;
}

LebesgueReport lebesgue_constant(const RationalBasis& basis, const GridSpec& grid) {
  const NodeSet& nodes = basis.nodes();
  if (grid.points() < 10 * nodes.n()) {
    throw Error(ErrorKind::invalid_interval,
                "Lebesgue grid needs at least 10 n points (n=" + std::to_string(nodes.n()) + ")");
  }
  const std::vector<double> xs = make_grid(grid, nodes.a(), nodes.b());
  LebesgueEvaluator lambda(basis);
  std::vector<double> values(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) values[k] = lambda(xs[k]);

  LebesgueReport report{1.0, xs.front(), grid};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (values[k] > report.lambda_max) {
      report.lambda_max = values[k];
      report.argmax_x = xs[k];
    }
  }
  // Well past the 1e-6 (b - a) target so that the peak value itself is
  // converged and refining the coarse grid cannot lower the estimate.
  const double tol = 1e-9 * (nodes.b() - nodes.a());
  for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
    if (values[k] < values[k - 1] || values[k] < values[k + 1]) continue;
    const Peak peak = golden_section(lambda, xs[k - 1], xs[k + 1], tol);
    if (peak.value > report.lambda_max) {
      report.lambda_max = peak.value;
      report.argmax_x = peak.x;
    }
  }
  return report;
}

LebesgueReport lebesgue_constant(const RationalBasis& basis) {
  return lebesgue_constant(basis, default_lebesgue_grid(basis.nodes().n(), basis.params().d));
}

}  // namespace fhr::analysis
