#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fhr/nodes.hpp"

namespace fhr {

/// x-independent weights of the extended interpolant.
///
/// Every family is stored divided by one common positive factor `scale`:
///
///   fh[j]           = xi_j / scale
///   lower(i)[j]     = omega_{0,j,i} * L^(i-d) / scale,   d-e <= i <= d-1, 0 <= j <= i
///   upper(i)[j - i] = omega_{i,j,n} * L^(n-d-i) / scale, n-d+1 <= i <= n-d+e, i <= j <= n
///
/// where omega_{i,j,k} = prod_{l=i..k, l!=j} 1/(x_j - x_l) and L is `length`.
/// The end tables absorb the powers of L so that the x-dependent end
/// corrections are polynomials in L/(x - x_0) and L/(x - x_n) with these
/// tables as coefficients. For equispaced nodes L = h and scale = h^(-d), so
/// every stored value is O(1).
class PrecomputedWeights {
 public:
  PrecomputedWeights() = default;

  std::span<const double> fh() const noexcept { return fh_; }
  double scale() const noexcept { return scale_; }
  double length() const noexcept { return length_; }

  std::size_t lower_count() const noexcept { return lower_.size(); }
  std::size_t upper_count() const noexcept { return upper_.size(); }
  /// Row for i = d - e + k; holds entries for j = 0 .. i.
  std::span<const double> lower_row(std::size_t k) const noexcept { return lower_[k]; }
  /// Row for i = n - d + 1 + k; holds entries for j = i .. n.
  std::span<const double> upper_row(std::size_t k) const noexcept { return upper_[k]; }

  /// Multiplies every family by `factor` and divides `scale` by it.
  PrecomputedWeights rescaled(double factor) const;

 private:
  friend PrecomputedWeights compute_weights(const NodeSet&, const ExtParams&);

  std::vector<double> fh_;
  std::vector<std::vector<double>> lower_;
  std::vector<std::vector<double>> upper_;
  double scale_ = 1.0;
  double length_ = 1.0;
};

/// Floater-Hormann weights xi_j^(d) and the end tables needed for e extra
/// interpolants per side. Throws on invalid parameters.
PrecomputedWeights compute_weights(const NodeSet& nodes, const ExtParams& params);

struct ScaledWeights {
  std::vector<double> values;
  double scale = 1.0;
};

/// xi_j^(d) / scale for j = 0..n.
ScaledWeights fh_weights(const NodeSet& nodes, std::size_t d);

struct EndTables {
  std::vector<std::vector<double>> lower;
  std::vector<std::vector<double>> upper;
  double scale = 1.0;
  double length = 1.0;
};

EndTables end_weight_tables(const NodeSet& nodes, const ExtParams& params);

}  // namespace fhr
