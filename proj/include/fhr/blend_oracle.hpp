#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fhr/nodes.hpp"

namespace fhr {

/// r^(d,e)(x) evaluated literally as a blend of local Lagrange interpolants
/// p_{i,j} weighted by chi, phi and psi. O(n d^2); meant as a test oracle for
/// small n. Throws Error(singular_at_node) when x is a node.
double eval_blend_oracle(const NodeSet& nodes, const Samples& samples, const ExtParams& params,
                         double x);

/// Normalized blending functions at x, ordered lower-end (phi), interior
/// (chi) then upper-end (psi). They sum to one.
std::vector<double> blending_functions(const NodeSet& nodes, const ExtParams& params, double x);

/// mu_i(x) for i = -e .. n-d+e, computed on the nodes mapped affinely to
/// [0, 1] with ghost nodes x_{-e..-1} = x_0 and x_{n+1..n+e} = x_n. Their sum
/// is a positive multiple of the denominator of r^(d,e) cleared of poles.
std::vector<double> denominator_terms(const NodeSet& nodes, const ExtParams& params, double x);

struct SignScanReport {
  /// min over the grid of s(x) / sum_i |mu_i(x)|
  double min_normalized = 0.0;
  double argmin = 0.0;
  std::size_t nonpositive = 0;
  std::size_t count = 0;

  bool all_positive() const noexcept { return count > 0 && nonpositive == 0; }
};

SignScanReport denominator_sign_scan(const NodeSet& nodes, const ExtParams& params,
                                     std::span<const double> grid);

}  // namespace fhr
