#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fhr/nodes.hpp"

namespace fhr::analysis {

struct NoiseSpec {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Standard normal variates from std::mt19937_64 via Box-Muller. Each
/// variate consumes two consecutive engine outputs u1, u2 (53-bit uniforms
/// in (0, 1]) and returns sqrt(-2 ln u1) cos(2 pi u2). The engine output
/// sequence is fixed by the C++ standard.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform();

  std::mt19937_64 engine_;
};

/// y_i + sigma g_i with one variate per node, in node order.
Samples add_noise(const Samples& samples, const NoiseSpec& spec);
std::vector<double> add_noise(std::vector<double> values, const NoiseSpec& spec);

}  // namespace fhr::analysis
