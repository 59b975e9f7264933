#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fhr/nodes.hpp"

namespace fhr::testing {

inline double rel_err(double got, double want) {
  const double denom = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / denom;
}

/// |got - want| relative to max(|want|, scale).
inline double scaled_err(double got, double want, double scale) {
  return std::abs(got - want) / std::max(std::abs(want), scale);
}

/// Nodes on [a, b] with spacings exp(U(-spread, spread)), normalized.
inline NodeSet perturbed_nodes(std::mt19937_64& rng, double a, double b, std::size_t n,
                               double spread = 0.5) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> gaps(n);
  double total = 0.0;
  for (double& g : gaps) {
    g = std::exp(u(rng));
    total += g;
  }
  std::vector<double> xs(n + 1);
  xs[0] = a;
  double acc = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    acc += gaps[i - 1];
    xs[i] = a + (b - a) * acc / total;
  }
  xs[n] = b;
  return NodeSet(std::move(xs));
}

inline std::vector<double> uniform_values(std::mt19937_64& rng, std::size_t count, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(count);
  for (double& x : v) x = u(rng);
  return v;
}

/// A point in (a, b) at least `margin` (relative to the local spacing) away
/// from every node.
inline double off_node_point(std::mt19937_64& rng, const NodeSet& nodes, double margin = 1e-3) {
  std::uniform_real_distribution<double> u(nodes.a(), nodes.b());
  for (;;) {
    const double x = u(rng);
    const std::size_t j = nodes.nearest(x);
    const double local = j < nodes.n() ? nodes[j + 1] - nodes[j] : nodes[j] - nodes[j - 1];
    if (std::abs(x - nodes[j]) > margin * local) return x;
  }
}

/// omega_{i,j,k} = prod_{l=i..k, l != j} 1/(x_j - x_l), unscaled.
inline double omega(const NodeSet& nodes, std::size_t i, std::size_t j, std::size_t k) {
  double p = 1.0;
  for (std::size_t l = i; l <= k; ++l) {
    if (l != j) p /= (nodes[j] - nodes[l]);
  }
  return p;
}

}  // namespace fhr::testing
