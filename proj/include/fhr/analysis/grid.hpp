#pragma once

#include <cstddef>
#include <vector>

#include "fhr/nodes.hpp"

namespace fhr::analysis {

/// Uniform sampling grid over [a, b] including both endpoints.
struct GridSpec {
  std::size_t count = 100000;
  /// Each of the count - 1 grid cells is split into this many pieces.
  std::size_t refine = 1;
  /// Move interior points that coincide with a node to the midpoint of the
  /// neighbouring grid cell.
  bool avoid_nodes = false;

  std::size_t points() const noexcept { return (count - 1) * refine + 1; }
};

/// Throws Error(invalid_interval) unless a < b and count >= 2.
std::vector<double> make_grid(const GridSpec& spec, double a, double b,
                              const NodeSet* nodes = nullptr);

}  // namespace fhr::analysis
