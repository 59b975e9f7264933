#include "fhr/analysis/grid.hpp"

#include <cmath>

#include "fhr/error.hpp"
#include "fhr/interpolant.hpp"

namespace fhr::analysis {

std::vector<double> make_grid(const GridSpec& spec, double a, double b, const NodeSet* nodes) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw Error(ErrorKind::invalid_interval, "grid interval must satisfy a < b");
  }
  if (spec.count < 2 || spec.refine == 0) {
    throw Error(ErrorKind::invalid_interval, "grid needs at least two points");
  }
  const std::size_t m = spec.points();
  const double step = (b - a) / static_cast<double>(m - 1);
  std::vector<double> xs(m);
  for (std::size_t k = 0; k + 1 < m; ++k) xs[k] = a + static_cast<double>(k) * step;
  xs[m - 1] = b;
  if (spec.avoid_nodes && nodes != nullptr) {
    for (std::size_t k = 1; k + 1 < m; ++k) {
      if (snap_to_node(*nodes, xs[k])) xs[k] += 0.5 * step;
    }
  }
  return xs;
}

}  // namespace fhr::analysis
