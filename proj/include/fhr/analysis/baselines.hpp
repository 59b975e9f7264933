#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fhr/nodes.hpp"

namespace fhr::analysis {

/// a + (b - a)(1 - cos(k pi / n))/2, k = 0..n: Chebyshev points of the second
/// kind in increasing order.
std::vector<double> chebyshev_points(double a, double b, std::size_t n);

/// Polynomial interpolant through Chebyshev points of the second kind,
/// evaluated in barycentric form with weights (-1)^k, halved at the ends.
class ChebyshevInterpolant {
 public:
  /// values[k] belongs to chebyshev_points(a, b, n)[k], n = values.size() - 1.
  ChebyshevInterpolant(double a, double b, std::vector<double> values);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator()(double x) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> weights_;
};

ChebyshevInterpolant chebyshev_baseline(const std::function<double(double)>& f, double a, double b,
                                        std::size_t n);

/// C2 cubic spline with not-a-knot end conditions. Needs n >= 3.
class CubicSpline {
 public:
  CubicSpline(const NodeSet& nodes, const Samples& samples);

  double operator()(double x) const;

  /// Second derivatives at the nodes.
  std::span<const double> curvatures() const noexcept { return m_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
};

inline CubicSpline cubic_spline_baseline(const NodeSet& nodes, const Samples& samples) {
  return CubicSpline(nodes, samples);
}

}  // namespace fhr::analysis
