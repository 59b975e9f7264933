#include "fhr/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhr/error.hpp"

namespace fhr {

namespace {

// True when xs is bit-identical to what NodeSet::equispaced would build.
bool matches_equispaced(const std::vector<double>& xs) {
  const std::size_t n = xs.size() - 1;
  const double h = (xs[n] - xs[0]) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] != xs[0] + static_cast<double>(i) * h) return false;
  }
  return true;
}

}  // namespace

NodeSet::NodeSet(std::vector<double> xs) : NodeSet(std::move(xs), false) {
  equispaced_ = matches_equispaced(xs_);
}

NodeSet::NodeSet(std::vector<double> xs, bool equispaced)
    : xs_(std::move(xs)), equispaced_(equispaced) {
  if (xs_.size() < 2) {
    throw Error(ErrorKind::invalid_nodes, "a node set needs at least two nodes");
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i])) {
      throw Error(ErrorKind::invalid_nodes, "node " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(xs_[i - 1] < xs_[i])) {
      throw Error(ErrorKind::invalid_nodes,
                  "nodes must be strictly increasing (violated at index " + std::to_string(i) + ")");
    }
  }
}

NodeSet NodeSet::equispaced(double a, double b, std::size_t n) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw Error(ErrorKind::invalid_interval, "interval must satisfy a < b");
  }
  if (n == 0) {
    throw Error(ErrorKind::invalid_interval, "n must be at least 1");
  }
  const double h = (b - a) / static_cast<double>(n);
  std::vector<double> xs(n + 1);
  for (std::size_t i = 0; i < n; ++i) xs[i] = a + static_cast<double>(i) * h;
  xs[n] = b;
  return NodeSet(std::move(xs), true);
}

std::size_t NodeSet::nearest(double x) const noexcept {
  const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.begin()) return 0;
  if (it == xs_.end()) return n();
  const auto hi = static_cast<std::size_t>(it - xs_.begin());
  return (x - xs_[hi - 1] <= xs_[hi] - x) ? hi - 1 : hi;
}

Samples::Samples(std::vector<double> ys) : ys_(std::move(ys)) {
  for (std::size_t i = 0; i < ys_.size(); ++i) {
    if (!std::isfinite(ys_[i])) {
      throw Error(ErrorKind::invalid_samples, "sample " + std::to_string(i) + " is not finite");
    }
  }
}

void ExtParams::validate(std::size_t n) const {
  if (d > n) {
    throw Error(ErrorKind::degree_out_of_range, "d must satisfy 0 ≤ d ≤ n (d=" +
                                                    std::to_string(d) + ", n=" + std::to_string(n) + ")");
  }
  if (e > d) {
    throw Error(ErrorKind::extension_out_of_range, "e must satisfy 0 ≤ e ≤ d (e=" +
                                                       std::to_string(e) + ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace fhr
