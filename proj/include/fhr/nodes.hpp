#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fhr {

/// Strictly increasing, finite abscissae x_0 < ... < x_n. The interval is
/// [x_0, x_n].
class NodeSet {
 public:
  /// Validates ordering and finiteness; throws Error(invalid_nodes).
  explicit NodeSet(std::vector<double> xs);

  /// x_i = a + i*(b - a)/n for 0 < i < n, with x_0 = a and x_n = b exactly.
  static NodeSet equispaced(double a, double b, std::size_t n);

  std::span<const double> xs() const noexcept { return xs_; }
  double operator[](std::size_t i) const noexcept { return xs_[i]; }

  /// Number of subintervals; there are n() + 1 nodes.
  std::size_t n() const noexcept { return xs_.size() - 1; }
  std::size_t size() const noexcept { return xs_.size(); }
  double a() const noexcept { return xs_.front(); }
  double b() const noexcept { return xs_.back(); }

  /// (b - a)/n; the exact spacing for equispaced sets.
  double mean_spacing() const noexcept { return (b() - a()) / static_cast<double>(n()); }
  bool is_equispaced() const noexcept { return equispaced_; }

  /// Index of the node closest to x (ties resolve to the lower index).
  std::size_t nearest(double x) const noexcept;

 private:
  NodeSet(std::vector<double> xs, bool equispaced);

  std::vector<double> xs_;
  bool equispaced_ = false;
};

inline NodeSet make_equispaced_nodes(double a, double b, std::size_t n) {
  return NodeSet::equispaced(a, b, n);
}

/// Finite ordinates y_0 ... y_n paired with a NodeSet.
class Samples {
 public:
  explicit Samples(std::vector<double> ys);

  std::span<const double> ys() const noexcept { return ys_; }
  double operator[](std::size_t i) const noexcept { return ys_[i]; }
  std::size_t size() const noexcept { return ys_.size(); }

 private:
  std::vector<double> ys_;
};

template <class F>
Samples sample(const NodeSet& nodes, F&& f) {
  std::vector<double> ys;
  ys.reserve(nodes.size());
  for (double x : nodes.xs()) ys.push_back(f(x));
  return Samples(std::move(ys));
}

/// Local polynomial degree d and count e of extra end interpolants per side.
/// e = 0 is the plain Floater-Hormann interpolant.
struct ExtParams {
  std::size_t d = 0;
  std::size_t e = 0;

  /// Throws Error(degree_out_of_range) if d > n and
  /// Error(extension_out_of_range) if e > d.
  void validate(std::size_t n) const;

  friend bool operator==(const ExtParams&, const ExtParams&) = default;
};

}  // namespace fhr
