#pragma once

#include <utility>

#include "gld/gld.hpp"
#include "gld/objectives.hpp"
#include "gld/rng.hpp"

namespace gld {

/// Accelerated Random Search: two-point directional-derivative estimate
/// along a random Gaussian direction with a Nesterov-style momentum
/// sequence driven by the assumed strong convexity / smoothness pair.
/// Two function evaluations per iteration.
struct ArsConfig {
  double alpha_hat = 1.0;
  double beta_hat = 1.0;
  double mu = 0.0;  // smoothing; 0 -> 1e-6 * diameter / sqrt(n)
  int max_iterations = 100;
  double diameter = 0.0;  // 0 -> max(1, ||x0||)
  long long max_evals = -1;
  bool record_iterates = false;
};

RunTrace ars_run(ObjectiveOracle& oracle, const ArsConfig& config,
                 const Vec& x0, SeededRng& rng);

enum class MisestimationKind { ArsAlpha, ArsBeta, ArsEven };

/// Distributes an approximation factor z across the (alpha, beta) estimates:
/// ArsAlpha -> (alpha/z, beta), ArsBeta -> (alpha, z beta),
/// ArsEven -> (alpha/sqrt z, sqrt z * beta).
std::pair<double, double> apply_misestimation(double alpha, double beta,
                                              MisestimationKind kind,
                                              double z);

}  // namespace gld
