#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "fhr/analysis/grid.hpp"
#include "fhr/analysis/reference.hpp"
#include "fhr/interpolant.hpp"

namespace fhr::analysis {

struct ErrorReport {
  double linf = 0.0;
  /// Composite trapezoid rule of |r - f| on the same grid.
  double l1 = 0.0;
  GridSpec grid;
  std::size_t n = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> e;
  double a = 0.0;
  double b = 0.0;
};

/// Errors of an arbitrary approximant on [f.a, f.b]; n, d, e are left for
/// the caller to fill in.
ErrorReport error_report(const std::function<double(double)>& approximant,
                         const ReferenceFunction& f, const GridSpec& grid);

ErrorReport error_report(const Interpolant& interp, const ReferenceFunction& f,
                         const GridSpec& grid = {});

}  // namespace fhr::analysis
