#pragma once

#include <cstddef>

#include "fhr/analysis/grid.hpp"
#include "fhr/interpolant.hpp"

namespace fhr::analysis {

/// lambda(x) = sum_j |beta_j(x)|; exactly 1 at nodes.
double lebesgue_function(const RationalBasis& basis, double x);
double lebesgue_function(const NodeSet& nodes, const ExtParams& params, double x);

struct LebesgueReport {
  double lambda_max = 1.0;
  double argmax_x = 0.0;
  GridSpec grid;
};

/// Coarse grid of 10 n (d + 1) points.
GridSpec default_lebesgue_grid(std::size_t n, std::size_t d);

/// Maximum of lambda over the grid, then golden-section refinement of every
/// grid-local maximum to 1e-9 (b - a) in x. Requires grid.points() >= 10 n.
LebesgueReport lebesgue_constant(const RationalBasis& basis, const GridSpec& grid);
LebesgueReport lebesgue_constant(const RationalBasis& basis);

}  // namespace fhr::analysis
