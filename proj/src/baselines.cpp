#include "gld/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gld {

RunTrace ars_run(ObjectiveOracle& oracle, const ArsConfig& config,
                 const Vec& x0, SeededRng& rng) {
  if (config.alpha_hat <= 0.0 || config.beta_hat < config.alpha_hat)
    throw std::invalid_argument("ars requires 0 < alpha_hat <= beta_hat");
  if (config.max_iterations < 0)
    throw std::invalid_argument("max_iterations must be >= 0");
  if (static_cast<int>(x0.size()) != oracle.dim())
    throw std::invalid_argument("x0 dimension mismatch");

  RunTrace trace;
  trace.final_point = x0;
  if (config.max_iterations == 0) return trace;

  const int n = oracle.dim();
  const double diameter =
      config.diameter > 0.0 ? config.diameter : std::max(1.0, norm(x0));
  const double mu = config.mu > 0.0
                        ? config.mu
                        : 1e-6 * diameter / std::sqrt(static_cast<double>(n));
  // Effective Lipschitz constant of the random two-point estimator.
  const double l_eff = 4.0 * (n + 4) * config.beta_hat;
  const double step = 1.0 / l_eff;
  // Momentum from the assumed condition number. Folding the dimension factor
  // into kappa as well pushes the momentum so close to 1 that the directional
  // noise destabilizes the iteration for n around 100.
  const double kappa = config.beta_hat / config.alpha_hat;
  const double momentum =
      (std::sqrt(kappa) - 1.0) / (std::sqrt(kappa) + 1.0);

  std::optional<double> opt_value;
  if (oracle.known_optimum()) opt_value = oracle.known_optimum()->value;

  Vec x = x0;
  Vec x_prev = x0;
  Vec y = x0;
  // y starts at x0, so f(x0) is the first iteration's base evaluation;
  // total cost is exactly 2 evaluations per iteration.
  double best = std::numeric_limits<double>::infinity();
  Vec best_point = x0;
  const long long start_count = oracle.eval_count();
  if (config.record_iterates) trace.iterates.push_back(x0);

  Vec u(n), y_probe(n);
  double fy_last = std::numeric_limits<double>::infinity();
  for (int t = 0; t < config.max_iterations; ++t) {
    if (config.max_evals >= 0 &&
        oracle.eval_count() - start_count + 2 > config.max_evals) {
      trace.truncated = true;
      break;
    }
    for (int i = 0; i < n; ++i) u[i] = rng.next_gaussian();
    const Vec y_old = y;
    const double fy = oracle.evaluate(y_old);
    for (int i = 0; i < n; ++i) y_probe[i] = y_old[i] + mu * u[i];
    const double fy_mu = oracle.evaluate(y_probe);
    bool rejected = false;
    if (std::isfinite(fy) && std::isfinite(fy_mu)) {
      // Function-value restart: the directional estimate is noisy, and
      // sustained momentum diverges once the value stops decreasing.
      const bool restart = fy > fy_last;
      fy_last = fy;
      const double slope = (fy_mu - fy) / mu;
      x_prev = x;
      x = y_old;
      axpy(x, -step * slope, u);
      if (restart) {
        y = x;
        x_prev = x;
      } else {
        for (int i = 0; i < n; ++i)
          y[i] = x[i] + momentum * (x[i] - x_prev[i]);
      }
    } else {
      rejected = true;  // non-finite estimate: keep the current pair
    }
    if (std::isfinite(fy) && fy < best) {
      best = fy;
      best_point = y_old;
    }
    if (std::isfinite(fy_mu) && fy_mu < best) {
      best = fy_mu;
      best_point = y_probe;
    }

    TraceRecord rec;
    rec.iteration = t;
    rec.evaluations = oracle.eval_count() - start_count;
    rec.best_value = best;
    if (opt_value) rec.optimality_gap = best - *opt_value;
    rec.nonfinite_flag = rejected;
    trace.records.push_back(rec);
    if (config.record_iterates) trace.iterates.push_back(x);
  }
  trace.final_point = best_point;
  trace.final_value = best;
  return trace;
}

std::pair<double, double> apply_misestimation(double alpha, double beta,
                                              MisestimationKind kind,
                                              double z) {
  if (z < 1.0) throw std::invalid_argument("approximation factor z must be >= 1");
  switch (kind) {
    case MisestimationKind::ArsAlpha:
      return {alpha / z, beta};
    case MisestimationKind::ArsBeta:
      return {alpha, z * beta};
    case MisestimationKind::ArsEven:
      return {alpha / std::sqrt(z), std::sqrt(z) * beta};
  }
  throw std::invalid_argument("unknown misestimation kind");
}

}  // namespace gld
