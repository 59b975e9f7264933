#include "fhr/analysis/noise.hpp"

#include <cmath>
#include <numbers>

#include "fhr/error.hpp"

namespace fhr::analysis {

double GaussianStream::uniform() {
  // 53 random bits mapped to (0, 1]
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double GaussianStream::next() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> add_noise(std::vector<double> values, const NoiseSpec& spec) {
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
    throw Error(ErrorKind::invalid_samples, "sigma must be a finite value >= 0");
  }
  if (spec.sigma == 0.0) return values;
  GaussianStream stream(spec.seed);
  for (double& v : values) v += spec.sigma * stream.next();
  return values;
}

Samples add_noise(const Samples& samples, const NoiseSpec& spec) {
  return Samples(add_noise(std::vector<double>(samples.ys().begin(), samples.ys().end()), spec));
}

}  // namespace fhr::analysis
