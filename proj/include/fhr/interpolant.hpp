#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fhr/nodes.hpp"
#include "fhr/weights.hpp"

namespace fhr {

/// Nodes, parameters and precomputed weights; everything about the extended
/// interpolant that does not depend on the data. Immutable, so a single
/// instance may be evaluated from many threads.
class RationalBasis {
 public:
  RationalBasis(NodeSet nodes, ExtParams params);

  /// Uses caller-supplied weights, e.g. a rescaled copy of compute_weights().
  RationalBasis(NodeSet nodes, ExtParams params, PrecomputedWeights weights);

  const NodeSet& nodes() const noexcept { return nodes_; }
  const ExtParams& params() const noexcept { return params_; }
  const PrecomputedWeights& weights() const noexcept { return weights_; }

 private:
  NodeSet nodes_;
  ExtParams params_;
  PrecomputedWeights weights_;
};

class Interpolant {
 public:
  Interpolant(NodeSet nodes, Samples samples, ExtParams params);
  Interpolant(RationalBasis basis, Samples samples);

  const RationalBasis& basis() const noexcept { return basis_; }
  const NodeSet& nodes() const noexcept { return basis_.nodes(); }
  const Samples& samples() const noexcept { return samples_; }
  const ExtParams& params() const noexcept { return basis_.params(); }
  const PrecomputedWeights& weights() const noexcept { return basis_.weights(); }

  double operator()(double x) const;

 private:
  RationalBasis basis_;
  Samples samples_;
};

struct EvalOutcome {
  double value = 0.0;
  /// Set when x was within the snap tolerance of a node.
  std::optional<std::size_t> at_node;
};

struct EvalOptions {
  /// Neumaier-compensated accumulation of numerator and denominator.
  bool compensated = false;
};

/// Arithmetic operation tally for cost measurements.
struct OpCounter {
  std::uint64_t ops = 0;
};

/// Index of the node x snaps to: |x - x_j| <= 4 eps max(|x_j|, L) with L
/// the mean node spacing.
std::optional<std::size_t> snap_to_node(const NodeSet& nodes, double x);

/// r^(d,e)(x) as the ratio of sums of (zeta_j + xi_j + eta_j)/(x - x_j).
/// O(n + d e) per call. Throws Error(non_finite_input) for NaN/inf x.
EvalOutcome eval_extended(const Interpolant& interp, double x, const EvalOptions& options = {});
EvalOutcome eval_extended(const Interpolant& interp, double x, const EvalOptions& options,
                          OpCounter& counter);

/// Plain Floater-Hormann barycentric evaluation; a separate code path that
/// ignores the end tables. Requires e = 0.
EvalOutcome eval_fh(const Interpolant& interp, double x);

/// The x-dependent end corrections, divided by the weights' scale.
/// zeta[j] for j = 0..d-1 and eta[k] for j = n-d+1+k. Both are all zero
/// when e = 0.
struct EndCorrections {
  std::vector<double> zeta;
  std::vector<double> eta;
};

/// Throws Error(evaluation_at_endpoint) if x equals x_0 or x_n.
EndCorrections eval_zeta_eta(const RationalBasis& basis, double x);

/// beta_j(x) for all j. At a node this is the Kronecker delta.
std::vector<double> basis_values(const RationalBasis& basis, double x);
/// As above, writing into out (size n + 1).
void basis_values(const RationalBasis& basis, double x, std::span<double> out);

/// beta_j(x). Throws Error(index_out_of_range) if j > n.
double basis_function(const RationalBasis& basis, std::size_t j, double x);
double basis_function(const Interpolant& interp, std::size_t j, double x);

}  // namespace fhr
