#include "gld/gld.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gld {

std::vector<Rung> rungs_from_ladder(const RadiusLadder& ladder,
                                    int effective_dim) {
  std::vector<Rung> rungs;
  rungs.reserve(ladder.radii.size());
  for (double r : ladder.radii) rungs.push_back({r, effective_dim});
  return rungs;
}

std::vector<Rung> low_rank_ladder_extension(const RadiusLadder& ladder,
                                            int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<int> dims;
  for (int d = 1; d < n; d *= 2) dims.push_back(d);
  dims.push_back(n);
  std::vector<Rung> rungs;
  rungs.reserve(ladder.radii.size() * dims.size());
  for (double r : ladder.radii)
    for (int d : dims) rungs.push_back({r, d});
  return rungs;
}

StepResult gld_step(ObjectiveOracle& oracle, const Vec& x, double fx,
                    std::span<const Rung> rungs, SamplerKind sampler,
                    SeededRng& rng) {
  if (rungs.empty()) throw std::invalid_argument("gld_step: empty ladder");
  StepResult result;
  result.next = x;
  result.best_value = fx;
  const int n = oracle.dim();
  for (const Rung& rung : rungs) {
    Vec y;
    if (sampler == SamplerKind::UniformBall) {
      const double ball_radius =
          rung.radius / std::sqrt(static_cast<double>(
                            rung.effective_dim > 0 ? rung.effective_dim : n));
      y = sample_uniform_ball(rng, x, ball_radius);
    } else {
      y = sample_gaussian(rng, x, rung.radius,
                          rung.effective_dim > 0 ? rung.effective_dim : n);
    }
    double fy;
    if (all_finite(y)) {
      fy = oracle.evaluate(y);
    } else {
      // Cannot happen for finite x and positive radius; guard anyway.
      fy = std::numeric_limits<double>::quiet_NaN();
    }
    ++result.candidates_evaluated;
    if (!std::isfinite(fy)) {
      result.nonfinite_seen = true;
      continue;  // treated as +infinity, never selected
    }
    if (fy < result.best_value) {
      result.best_value = fy;
      result.next = std::move(y);
      result.accepted_radius = rung.radius;
    }
  }
  return result;
}

int default_halving_period(int n, double q_bound) {
  const double q = q_bound;
  const double h = static_cast<double>(n) * q * std::log2(std::max(q, 2.0));
  return std::max(1, static_cast<int>(std::ceil(h)));
}

namespace {

struct RunState {
  RunTrace trace;
  Vec x;
  double fx = 0.0;
  std::optional<double> opt_value;
};

RunState init_run(ObjectiveOracle& oracle, const Vec& x0, int max_iterations,
                  bool record_iterates) {
  if (static_cast<int>(x0.size()) != oracle.dim())
    throw std::invalid_argument("x0 dimension mismatch");
  RunState state;
  state.x = x0;
  if (oracle.known_optimum()) state.opt_value = oracle.known_optimum()->value;
  if (max_iterations > 0) {
    state.fx = oracle.evaluate(x0);
  }
  state.trace.final_point = x0;
  state.trace.final_value = state.fx;
  if (record_iterates) state.trace.iterates.push_back(x0);
  return state;
}

void record_iteration(RunState& state, int iteration, long long evals,
                      const StepResult& step, bool record_iterates) {
  TraceRecord rec;
  rec.iteration = iteration;
  rec.evaluations = evals;
  rec.best_value = step.best_value;
  if (state.opt_value) rec.optimality_gap = step.best_value - *state.opt_value;
  rec.accepted_radius = step.accepted_radius;
  rec.nonfinite_flag = step.nonfinite_seen;
  state.trace.records.push_back(rec);
  state.x = step.next;
  state.fx = step.best_value;
  if (record_iterates) state.trace.iterates.push_back(state.x);
}

}  // namespace

RunTrace gld_search_run(ObjectiveOracle& oracle, const GldSearchConfig& config,
                        const Vec& x0, SeededRng& rng) {
  if (config.max_iterations < 0)
    throw std::invalid_argument("max_iterations must be >= 0");
  const int n = oracle.dim();
  const int eff = config.effective_dim > 0 ? config.effective_dim : n;
  const RadiusLadder ladder =
      build_ladder_search(config.max_radius, config.min_radius);
  const std::vector<Rung> rungs = config.low_rank_ladder
                                      ? low_rank_ladder_extension(ladder, n)
                                      : rungs_from_ladder(ladder, eff);
  const long long start_count = oracle.eval_count();
  RunState state =
      init_run(oracle, x0, config.max_iterations, config.record_iterates);
  for (int t = 1; t <= config.max_iterations; ++t) {
    if (config.max_evals >= 0 &&
        oracle.eval_count() - start_count + static_cast<long long>(rungs.size()) >
            config.max_evals) {
      state.trace.truncated = true;
      break;
    }
    StepResult step =
        gld_step(oracle, state.x, state.fx, rungs, config.sampler, rng);
    record_iteration(state, t, oracle.eval_count() - start_count, step,
                     config.record_iterates);
  }
  state.trace.final_point = state.x;
  state.trace.final_value = state.fx;
  return state.trace;
}

RunTrace gld_fast_run(ObjectiveOracle& oracle, const GldFastConfig& config,
                      const Vec& x0, SeededRng& rng) {
  if (config.max_iterations < 0)
    throw std::invalid_argument("max_iterations must be >= 0");
  const int n = oracle.dim();
  const int eff = config.effective_dim > 0 ? config.effective_dim : n;
  // The halving clock follows the dimension that governs progress, which is
  // the latent dimension when one is supplied via effective_dim.
  const int period = config.halving_period > 0
                         ? config.halving_period
                         : default_halving_period(eff, config.q_bound);
  double radius = config.initial_radius;
  const long long start_count = oracle.eval_count();
  RunState state =
      init_run(oracle, x0, config.max_iterations, config.record_iterates);
  for (int t = 1; t <= config.max_iterations; ++t) {
    if (t % period == 0) radius *= 0.5;
    const RadiusLadder ladder = build_ladder_fast(radius, config.q_bound);
    const std::vector<Rung> rungs = config.low_rank_ladder
                                        ? low_rank_ladder_extension(ladder, n)
                                        : rungs_from_ladder(ladder, eff);
    if (config.max_evals >= 0 &&
        oracle.eval_count() - start_count + static_cast<long long>(rungs.size()) >
            config.max_evals) {
      state.trace.truncated = true;
      break;
    }
    StepResult step =
        gld_step(oracle, state.x, state.fx, rungs, config.sampler, rng);
    record_iteration(state, t, oracle.eval_count() - start_count, step,
                     config.record_iterates);
  }
  state.trace.final_point = state.x;
  state.trace.final_value = state.fx;
  return state.trace;
}

}  // namespace gld
