#include "fhr/blend_oracle.hpp"

#include <cmath>
#include <limits>

#include "fhr/error.hpp"
#include "fhr/interpolant.hpp"

namespace fhr {
namespace {

// Lagrange form of the polynomial through (x_k, y_k), k = first..last.
double lagrange(std::span<const double> xs, std::span<const double> ys, std::size_t first,
                std::size_t last, double x) {
  double sum = 0.0;
  for (std::size_t k = first; k <= last; ++k) {
    double basis = 1.0;
    for (std::size_t l = first; l <= last; ++l) {
      if (l != k) basis *= (x - xs[l]) / (xs[k] - xs[l]);
    }
    sum += basis * ys[k];
  }
  return sum;
}

double sign(std::size_t i) { return i % 2 == 0 ? 1.0 : -1.0; }

// chi_{i,j}(x) = (-1)^i prod_{k=i}^{j} 1/(x - x_k)
double chi(std::span<const double> xs, std::size_t i, std::size_t j, double x) {
  double product = sign(i);
  for (std::size_t k = i; k <= j; ++k) product /= (x - xs[k]);
  return product;
}

struct Blend {
  double weight;
  std::size_t first;
  std::size_t last;
};

std::vector<Blend> blend_terms(const NodeSet& nodes, const ExtParams& params, double x) {
  params.validate(nodes.n());
  if (snap_to_node(nodes, x)) {
    throw Error(ErrorKind::singular_at_node, "the blend form is singular at nodes");
  }
  const auto xs = nodes.xs();
  const std::size_t n = nodes.n();
  const std::size_t d = params.d;
  const std::size_t e = params.e;
  std::vector<Blend> terms;
  // phi_i = (-1)^(d-i) / (x - x_0)^(d-i) chi_{0,i}
  for (std::size_t i = d - e; i < d; ++i) {
    const double phi = sign(d - i) / std::pow(x - xs[0], static_cast<double>(d - i)) * chi(xs, 0, i, x);
    terms.push_back({phi, 0, i});
  }
  for (std::size_t i = 0; i <= n - d; ++i) {
    terms.push_back({chi(xs, i, i + d, x), i, i + d});
  }
  // psi_i = 1 / (x - x_n)^(i-n+d) chi_{i,n}
  for (std::size_t i = n - d + 1; i <= n - d + e; ++i) {
    const double psi = chi(xs, i, n, x) / std::pow(x - xs[n], static_cast<double>(i + d - n));
    terms.push_back({psi, i, n});
  }
  return terms;
}

}  // namespace

double eval_blend_oracle(const NodeSet& nodes, const Samples& samples, const ExtParams& params,
                         double x) {
  if (samples.size() != nodes.size()) {
    throw Error(ErrorKind::invalid_samples, "sample count does not match node count");
  }
  const auto terms = blend_terms(nodes, params, x);
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& t : terms) {
    numerator += t.weight * lagrange(nodes.xs(), samples.ys(), t.first, t.last, x);
    denominator += t.weight;
  }
  return numerator / denominator;
}

std::vector<double> blending_functions(const NodeSet& nodes, const ExtParams& params, double x) {
  const auto terms = blend_terms(nodes, params, x);
  double total = 0.0;
  for (const auto& t : terms) total += t.weight;
  std::vector<double> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.weight / total);
  return out;
}

std::vector<double> denominator_terms(const NodeSet& nodes, const ExtParams& params, double x) {
  params.validate(nodes.n());
  const std::size_t n = nodes.n();
  const std::size_t d = params.d;
  const std::size_t e = params.e;
  const double a = nodes.a();
  const double width = nodes.b() - nodes.a();

  // Extended node k (k = -e .. n+e) lives at ext[k + e].
  std::vector<double> ext;
  ext.reserve(n + 1 + 2 * e);
  for (std::size_t k = 0; k < e; ++k) ext.push_back(0.0);
  for (double xk : nodes.xs()) ext.push_back((xk - a) / width);
  ext.back() = 1.0;
  ext[e] = 0.0;
  for (std::size_t k = 0; k < e; ++k) ext.push_back(1.0);
  const double u = (x - a) / width;

  // mu_i = prod_{j=-e}^{i-1} (u - u_j) prod_{k=i+d+1}^{n+e} (u_k - u), window
  // starts i = -e .. n-d+e, i.e. offsets m = i + e = 0 .. n-d+2e.
  const std::size_t count = ext.size();
  std::vector<double> prefix(count + 1, 1.0);  // prefix[m] = prod_{j<m} (u - ext[j])
  std::vector<double> suffix(count + 1, 1.0);  // suffix[k] = prod_{k'>=k} (ext[k'] - u)
  for (std::size_t j = 0; j < count; ++j) prefix[j + 1] = prefix[j] * (u - ext[j]);
  for (std::size_t k = count; k-- > 0;) suffix[k] = suffix[k + 1] * (ext[k] - u);
  const std::size_t windows = n - d + 2 * e + 1;
  std::vector<double> mu(windows);
  for (std::size_t m = 0; m < windows; ++m) mu[m] = prefix[m] * suffix[m + d + 1];
  return mu;
}

SignScanReport denominator_sign_scan(const NodeSet& nodes, const ExtParams& params,
                                     std::span<const double> grid) {
  SignScanReport report;
  report.min_normalized = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    const auto mu = denominator_terms(nodes, params, x);
    double sum = 0.0;
    double magnitude = 0.0;
    for (double m : mu) {
      sum += m;
      magnitude += std::abs(m);
    }
    const double normalized = magnitude > 0.0 ? sum / magnitude : 0.0;
    if (!(normalized > 0.0)) ++report.nonpositive;
    if (normalized < report.min_normalized) {
      report.min_normalized = normalized;
      report.argmin = x;
    }
    ++report.count;
  }
  return report;
}

}  // namespace fhr
