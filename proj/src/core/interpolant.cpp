#include "fhr/interpolant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fhr/error.hpp"

namespace fhr {
namespace {

struct NoCount {
  void add(std::uint64_t) noexcept {}
};

struct Count {
  OpCounter& counter;
  void add(std::uint64_t k) noexcept { counter.ops += k; }
};

// Plain or Neumaier-compensated running sum.
class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}

  void add(double v) noexcept {
    if (!compensated_) {
      sum_ += v;
      return;
    }
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  bool compensated_;
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Horner evaluation of zeta_j: sum_{i=max(j,d-e)}^{d-1} c_i s^(d-i), s = -L/(x - x_0).
template <class Counter>
double zeta_at(const PrecomputedWeights& w, std::size_t d, std::size_t e, std::size_t j, double s,
               Counter& counter) {
  const std::size_t first = d - e;
  double acc = 0.0;
  for (std::size_t i = std::max(j, first); i < d; ++i) {
    acc = acc * s + w.lower_row(i - first)[j];
  }
  counter.add(2 * (d - std::max(j, first)) + 1);
  return acc * s;
}

// Horner evaluation of eta_j: sum_{i=n-d+1}^{min(j,n-d+e)} (-1)^i c_i q^(i-n+d), q = L/(x - x_n).
template <class Counter>
double eta_at(const PrecomputedWeights& w, std::size_t n, std::size_t d, std::size_t e,
              std::size_t j, double q, Counter& counter) {
  const std::size_t first = n - d + 1;
  const std::size_t last = std::min(j, n - d + e);
  double acc = 0.0;
  for (std::size_t i = last + 1; i-- > first;) {
    const double c = w.upper_row(i - first)[j - i];
    acc = acc * q + ((i % 2 == 0) ? c : -c);
  }
  counter.add(2 * (last + 1 - first) + 1);
  return acc * q;
}

// Invokes visit(j, weight_j / (x - x_j)) for every node, where weight_j is
// zeta_j + xi_j + eta_j. x must not be a node.
template <class Counter, class Visit>
void for_each_term(const RationalBasis& basis, double x, Counter& counter, Visit&& visit) {
  const auto xs = basis.nodes().xs();
  const auto& w = basis.weights();
  const auto fh = w.fh();
  const std::size_t n = basis.nodes().n();
  const std::size_t d = basis.params().d;
  const std::size_t e = basis.params().e;

  double s = 0.0;
  double q = 0.0;
  if (e > 0) {
    s = -w.length() / (x - xs[0]);
    q = w.length() / (x - xs[n]);
    counter.add(5);
  }
  const std::size_t upper_start = n - d + 1;

  for (std::size_t j = 0; j <= n; ++j) {
    double weight = fh[j];
    if (e > 0) {
      if (j < d) {
        weight += zeta_at(w, d, e, j, s, counter);
        counter.add(1);
      }
      if (j >= upper_start) {
        weight += eta_at(w, n, d, e, j, q, counter);
        counter.add(1);
      }
    }
    counter.add(2);
    visit(j, weight / (x - xs[j]));
  }
}

template <class Counter>
EvalOutcome evaluate(const Interpolant& interp, double x, const EvalOptions& options,
                     Counter& counter) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::non_finite_input, "evaluation point is not finite");
  }
  if (const auto node = snap_to_node(interp.nodes(), x)) {
    return {interp.samples()[*node], node};
  }
  const auto ys = interp.samples().ys();
  Accumulator numerator(options.compensated);
  Accumulator denominator(options.compensated);
  for_each_term(interp.basis(), x, counter, [&](std::size_t j, double term) {
    numerator.add(term * ys[j]);
    denominator.add(term);
  });
  counter.add(3 * interp.nodes().size() + 1);
  return {numerator.value() / denominator.value(), std::nullopt};
}

}  // namespace

RationalBasis::RationalBasis(NodeSet nodes, ExtParams params)
    : nodes_(std::move(nodes)), params_(params), weights_(compute_weights(nodes_, params_)) {}

RationalBasis::RationalBasis(NodeSet nodes, ExtParams params, PrecomputedWeights weights)
    : nodes_(std::move(nodes)), params_(params), weights_(std::move(weights)) {
  params_.validate(nodes_.n());
  const std::size_t n = nodes_.n();
  if (weights_.fh().size() != n + 1 || weights_.lower_count() != params_.e ||
      weights_.upper_count() != params_.e) {
    throw Error(ErrorKind::invalid_nodes, "weights do not match the node set and parameters");
  }
}

Interpolant::Interpolant(NodeSet nodes, Samples samples, ExtParams params)
    : Interpolant(RationalBasis(std::move(nodes), params), std::move(samples)) {}

Interpolant::Interpolant(RationalBasis basis, Samples samples)
    : basis_(std::move(basis)), samples_(std::move(samples)) {
  if (samples_.size() != basis_.nodes().size()) {
    throw Error(ErrorKind::invalid_samples,
                "expected " + std::to_string(basis_.nodes().size()) + " samples, got " +
                    std::to_string(samples_.size()));
  }
}

double Interpolant::operator()(double x) const { return eval_extended(*this, x).value; }

std::optional<std::size_t> snap_to_node(const NodeSet& nodes, double x) {
  const std::size_t j = nodes.nearest(x);
  const double xj = nodes[j];
  const double tol =
      4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(xj), nodes.mean_spacing());
  if (std::abs(x - xj) <= tol) return j;
  return std::nullopt;
}

EvalOutcome eval_extended(const Interpolant& interp, double x, const EvalOptions& options) {
  NoCount counter;
  return evaluate(interp, x, options, counter);
}

EvalOutcome eval_extended(const Interpolant& interp, double x, const EvalOptions& options,
                          OpCounter& counter) {
  Count c{counter};
  return evaluate(interp, x, options, c);
}

EvalOutcome eval_fh(const Interpolant& interp, double x) {
  if (interp.params().e != 0) {
    throw Error(ErrorKind::extension_out_of_range, "eval_fh requires e = 0");
  }
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::non_finite_input, "evaluation point is not finite");
  }
  if (const auto node = snap_to_node(interp.nodes(), x)) {
    return {interp.samples()[*node], node};
  }
  const auto xs = interp.nodes().xs();
  const auto ys = interp.samples().ys();
  const auto xi = interp.weights().fh();
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double t = xi[j] / (x - xs[j]);
    numerator += t * ys[j];
    denominator += t;
  }
  return {numerator / denominator, std::nullopt};
}

EndCorrections eval_zeta_eta(const RationalBasis& basis, double x) {
  const auto& nodes = basis.nodes();
  if (x == nodes.a() || x == nodes.b()) {
    throw Error(ErrorKind::evaluation_at_endpoint,
                "end corrections are singular at the interval endpoints");
  }
  const std::size_t n = nodes.n();
  const std::size_t d = basis.params().d;
  const std::size_t e = basis.params().e;
  EndCorrections out{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
  if (e == 0) return out;
  const auto& w = basis.weights();
  NoCount counter;
  const double s = -w.length() / (x - nodes.a());
  const double q = w.length() / (x - nodes.b());
  for (std::size_t j = 0; j < d; ++j) out.zeta[j] = zeta_at(w, d, e, j, s, counter);
  for (std::size_t k = 0; k < d; ++k) out.eta[k] = eta_at(w, n, d, e, n - d + 1 + k, q, counter);
  return out;
}

std::vector<double> basis_values(const RationalBasis& basis, double x) {
  std::vector<double> values(basis.nodes().size());
  basis_values(basis, x, values);
  return values;
}

void basis_values(const RationalBasis& basis, double x, std::span<double> out) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::non_finite_input, "evaluation point is not finite");
  }
  if (out.size() != basis.nodes().size()) {
    throw Error(ErrorKind::index_out_of_range, "output span must hold n + 1 values");
  }
  if (const auto node = snap_to_node(basis.nodes(), x)) {
    std::fill(out.begin(), out.end(), 0.0);
    out[*node] = 1.0;
    return;
  }
  NoCount counter;
  double denominator = 0.0;
  for_each_term(basis, x, counter, [&](std::size_t j, double term) {
    out[j] = term;
    denominator += term;
  });
  for (double& v : out) v /= denominator;
}

double basis_function(const RationalBasis& basis, std::size_t j, double x) {
  if (j > basis.nodes().n()) {
    throw Error(ErrorKind::index_out_of_range, "basis index " + std::to_string(j) + " exceeds n");
  }
  return basis_values(basis, x)[j];
}

double basis_function(const Interpolant& interp, std::size_t j, double x) {
  return basis_function(interp.basis(), j, x);
}

}  // namespace fhr
