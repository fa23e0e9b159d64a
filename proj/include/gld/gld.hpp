#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gld/objectives.hpp"
#include "gld/rng.hpp"
#include "gld/sampling.hpp"
#include "gld/vec.hpp"

namespace gld {

/// One candidate scale for a descent step: a ladder rung radius paired with
/// the effective dimension used to scale the sampler. The rung radius is the
/// theorem-level "r"; the sampler divides by sqrt(effective_dim) internally.
struct Rung {
  double radius = 0.0;
  int effective_dim = 1;
};

std::vector<Rung> rungs_from_ladder(const RadiusLadder& ladder,
                                    int effective_dim);

/// Extends a ladder to cover unknown latent dimension: for each rung radius,
/// one candidate per latent dimension in {1, 2, 4, ..., n} (n always
/// included). Candidate count = |ladder| * (floor(log2 n) + 1 [+1 if n is
/// not a power of two]).
std::vector<Rung> low_rank_ladder_extension(const RadiusLadder& ladder, int n);

struct StepResult {
  Vec next;
  int candidates_evaluated = 0;
  std::optional<double> accepted_radius;  // empty when the incumbent won
  double best_value = 0.0;
  bool nonfinite_seen = false;
};

/// One GLD iteration: samples exactly one candidate per rung and returns the
/// argmin over {x_t} + candidates. Non-finite candidate values count toward
/// the budget but are never selected. Ties go to the incumbent, then to
/// earlier rungs.
StepResult gld_step(ObjectiveOracle& oracle, const Vec& x, double fx,
                    std::span<const Rung> rungs, SamplerKind sampler,
                    SeededRng& rng);

struct TraceRecord {
  int iteration = 0;
  long long evaluations = 0;  // cumulative
  double best_value = 0.0;
  std::optional<double> optimality_gap;
  std::optional<double> accepted_radius;
  bool nonfinite_flag = false;
};

struct RunTrace {
  std::vector<TraceRecord> records;
  Vec final_point;
  double final_value = 0.0;
  bool truncated = false;
  std::vector<Vec> iterates;  // filled only when record_iterates is set
};

struct GldSearchConfig {
  int max_iterations = 100;
  double max_radius = 1.0;   // R
  double min_radius = 0.01;  // r
  SamplerKind sampler = SamplerKind::UniformBall;
  int effective_dim = 0;     // 0 -> problem dimension
  long long max_evals = -1;  // -1 -> unlimited
  bool low_rank_ladder = false;
  bool record_iterates = false;
};

struct GldFastConfig {
  int max_iterations = 100;
  double initial_radius = 1.0;  // diameter of the search space
  double q_bound = 1.0;
  int halving_period = 0;  // 0 -> max(1, ceil(n Q log2 max(Q,2)))
  SamplerKind sampler = SamplerKind::Gaussian;
  int effective_dim = 0;
  long long max_evals = -1;
  bool low_rank_ladder = false;
  bool record_iterates = false;
};

int default_halving_period(int n, double q_bound);

RunTrace gld_search_run(ObjectiveOracle& oracle, const GldSearchConfig& config,
                        const Vec& x0, SeededRng& rng);

RunTrace gld_fast_run(ObjectiveOracle& oracle, const GldFastConfig& config,
                      const Vec& x0, SeededRng& rng);

}  // namespace gld
