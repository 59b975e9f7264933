#include "fhr/analysis/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fhr/error.hpp"

namespace fhr::analysis {

std::vector<double> chebyshev_points(double a, double b, std::size_t n) {
  if (!(a < b)) throw Error(ErrorKind::invalid_interval, "interval must satisfy a < b");
  if (n == 0) throw Error(ErrorKind::too_few_nodes, "Chebyshev interpolation needs n >= 1");
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> xs(n + 1);
  // -cos(k pi / n) written as a sine so that the points are exactly symmetric.
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = std::sin(std::numbers::pi * (2.0 * static_cast<double>(k) - static_cast<double>(n)) /
                              (2.0 * static_cast<double>(n)));
    xs[k] = mid + half * t;
  }
  xs.front() = a;
  xs.back() = b;
  return xs;
}

ChebyshevInterpolant::ChebyshevInterpolant(double a, double b, std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw Error(ErrorKind::too_few_nodes, "Chebyshev interpolation needs at least two values");
  }
  const std::size_t n = values_.size() - 1;
  nodes_ = chebyshev_points(a, b, n);
  weights_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) weights_[k] = (k % 2 == 0) ? 1.0 : -1.0;
  weights_.front() *= 0.5;
  weights_.back() *= 0.5;
}

double ChebyshevInterpolant::operator()(double x) const {
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const double diff = x - nodes_[k];
    if (diff == 0.0) return values_[k];
    const double t = weights_[k] / diff;
    numerator += t * values_[k];
    denominator += t;
  }
  return numerator / denominator;
}

ChebyshevInterpolant chebyshev_baseline(const std::function<double(double)>& f, double a, double b,
                                        std::size_t n) {
  const std::vector<double> xs = chebyshev_points(a, b, n);
  std::vector<double> values;
  values.reserve(xs.size());
  for (double x : xs) values.push_back(f(x));
  return ChebyshevInterpolant(a, b, std::move(values));
}

CubicSpline::CubicSpline(const NodeSet& nodes, const Samples& samples)
    : x_(nodes.xs().begin(), nodes.xs().end()), y_(samples.ys().begin(), samples.ys().end()) {
  const std::size_t n = nodes.n();
  if (n < 3) {
    throw Error(ErrorKind::too_few_nodes,
                "not-a-knot cubic spline needs n >= 3 (n=" + std::to_string(n) + ")");
  }
  if (y_.size() != x_.size()) {
    throw Error(ErrorKind::invalid_samples, "sample count does not match node count");
  }
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = x_[i + 1] - x_[i];

  // Unknowns M_1 .. M_{n-1}; M_0 and M_n are eliminated with the not-a-knot
  // conditions (third derivative continuous at x_1 and x_{n-1}).
  const std::size_t m = n - 1;
  std::vector<double> sub(m, 0.0);
  std::vector<double> diag(m, 0.0);
  std::vector<double> sup(m, 0.0);
  std::vector<double> rhs(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t i = r + 1;
    sub[r] = h[i - 1];
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    sup[r] = h[i];
    rhs[r] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  // M_0 = ((h0 + h1) M_1 - h0 M_2) / h1
  diag[0] += h[0] * (h[0] + h[1]) / h[1];
  sup[0] -= h[0] * h[0] / h[1];
  // M_n = ((h_{n-2} + h_{n-1}) M_{n-1} - h_{n-1} M_{n-2}) / h_{n-2}
  diag[m - 1] += h[n - 1] * (h[n - 2] + h[n - 1]) / h[n - 2];
  sub[m - 1] -= h[n - 1] * h[n - 1] / h[n - 2];

  // Thomas algorithm. For n = 3 the two corrections land on the same 2x2
  // system, which stays diagonally dominant.
  for (std::size_t r = 1; r < m; ++r) {
    const double factor = sub[r] / diag[r - 1];
    diag[r] -= factor * sup[r - 1];
    rhs[r] -= factor * rhs[r - 1];
  }
  m_.assign(n + 1, 0.0);
  m_[m] = rhs[m - 1] / diag[m - 1];
  for (std::size_t r = m - 1; r-- > 0;) {
    m_[r + 1] = (rhs[r] - sup[r] * m_[r + 2]) / diag[r];
  }
  m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
  m_[n] = ((h[n - 2] + h[n - 1]) * m_[n - 1] - h[n - 1] * m_[n - 2]) / h[n - 2];
}

double CubicSpline::operator()(double x) const {
  const std::size_t n = x_.size() - 1;
  const auto it = std::upper_bound(x_.begin() + 1, x_.end() - 1, x);
  const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
  const std::size_t k1 = std::min(k + 1, n);
  const double h = x_[k1] - x_[k];
  const double A = (x_[k1] - x) / h;
  const double B = (x - x_[k]) / h;
  return A * y_[k] + B * y_[k1] + ((A * A * A - A) * m_[k] + (B * B * B - B) * m_[k1]) * (h * h) / 6.0;
}

}  // namespace fhr::analysis
