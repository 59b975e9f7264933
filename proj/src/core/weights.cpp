#include "fhr/weights.hpp"

#include <algorithm>
#include <cmath>

#include "fhr/error.hpp"

namespace fhr {
namespace {

// omega_{i,j,k} * L^(k-i): product over l in [i, k], l != j, of L/(x_j - x_l).
double scaled_omega(std::span<const double> xs, std::size_t i, std::size_t j, std::size_t k,
                    double length) {
  double product = 1.0;
  for (std::size_t l = i; l <= k; ++l) {
    if (l != j) product *= length / (xs[j] - xs[l]);
  }
  return product;
}

struct RawWeights {
  std::vector<double> fh;
  std::vector<std::vector<double>> lower;
  std::vector<std::vector<double>> upper;
  double length = 1.0;
  double extra = 1.0;  // common divisor applied on top of L^(-d)
};

// All families scaled by L^d, before the geometric-mean normalization.
RawWeights raw_weights(const NodeSet& nodes, const ExtParams& params) {
  params.validate(nodes.n());
  const auto xs = nodes.xs();
  const std::size_t n = nodes.n();
  const std::size_t d = params.d;
  const std::size_t e = params.e;

  RawWeights raw;
  raw.length = nodes.mean_spacing();

  raw.fh.assign(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t lo = j >= d ? j - d : 0;
    const std::size_t hi = std::min(j, n - d);
    double sum = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
      const double w = scaled_omega(xs, i, j, i + d, raw.length);
      sum += (i % 2 == 0) ? w : -w;
    }
    raw.fh[j] = sum;
  }

  // omega_{0,j,i} L^(i-d) L^d = omega_{0,j,i} L^i
  for (std::size_t i = d - e; i < d; ++i) {
    std::vector<double> row(i + 1);
    for (std::size_t j = 0; j <= i; ++j) row[j] = scaled_omega(xs, 0, j, i, raw.length);
    raw.lower.push_back(std::move(row));
  }
  // omega_{i,j,n} L^(n-d-i) L^d = omega_{i,j,n} L^(n-i)
  for (std::size_t i = n - d + 1; i <= n - d + e; ++i) {
    std::vector<double> row(n - i + 1);
    for (std::size_t j = i; j <= n; ++j) row[j - i] = scaled_omega(xs, i, j, n, raw.length);
    raw.upper.push_back(std::move(row));
  }

  if (!nodes.is_equispaced()) {
    double log_sum = 0.0;
    for (double w : raw.fh) log_sum += std::log(std::abs(w));
    raw.extra = std::exp(log_sum / static_cast<double>(raw.fh.size()));
  }
  return raw;
}

void divide_all(std::vector<double>& v, double divisor) {
  if (divisor == 1.0) return;
  for (double& x : v) x /= divisor;
}

}  // namespace

PrecomputedWeights compute_weights(const NodeSet& nodes, const ExtParams& params) {
  RawWeights raw = raw_weights(nodes, params);
  divide_all(raw.fh, raw.extra);
  for (auto& row : raw.lower) divide_all(row, raw.extra);
  for (auto& row : raw.upper) divide_all(row, raw.extra);

  PrecomputedWeights w;
  w.fh_ = std::move(raw.fh);
  w.lower_ = std::move(raw.lower);
  w.upper_ = std::move(raw.upper);
  w.length_ = raw.length;
  w.scale_ = std::pow(raw.length, -static_cast<double>(params.d)) * raw.extra;
  return w;
}

PrecomputedWeights PrecomputedWeights::rescaled(double factor) const {
  PrecomputedWeights w = *this;
  for (double& x : w.fh_) x *= factor;
  for (auto& row : w.lower_)
    for (double& x : row) x *= factor;
  for (auto& row : w.upper_)
    for (double& x : row) x *= factor;
  w.scale_ /= factor;
  return w;
}

ScaledWeights fh_weights(const NodeSet& nodes, std::size_t d) {
  if (d > nodes.n()) {
    throw Error(ErrorKind::degree_out_of_range, "d must satisfy 0 ≤ d ≤ n");
  }
  const PrecomputedWeights w = compute_weights(nodes, ExtParams{d, 0});
  return {std::vector<double>(w.fh().begin(), w.fh().end()), w.scale()};
}

EndTables end_weight_tables(const NodeSet& nodes, const ExtParams& params) {
  const PrecomputedWeights w = compute_weights(nodes, params);
  EndTables tables;
  for (std::size_t k = 0; k < w.lower_count(); ++k) {
    tables.lower.emplace_back(w.lower_row(k).begin(), w.lower_row(k).end());
  }
  for (std::size_t k = 0; k < w.upper_count(); ++k) {
    tables.upper.emplace_back(w.upper_row(k).begin(), w.upper_row(k).end());
  }
  tables.scale = w.scale();
  tables.length = w.length();
  return tables;
}

}  // namespace fhr
