#pragma once

#include <vector>

#include "gld/rng.hpp"
#include "gld/vec.hpp"

namespace gld {

enum class SamplerKind { UniformBall, Gaussian };

/// Uniform draw from the ball of the given radius around `center`.
/// Direction is a normalized Gaussian vector; length is radius * U^(1/n).
Vec sample_uniform_ball(SeededRng& rng, const Vec& center, double radius);

/// Isotropic Gaussian draw with per-coordinate variance
/// radius^2 / effective_dim around `center`.
Vec sample_gaussian(SeededRng& rng, const Vec& center, double radius,
                    int effective_dim);

enum class LadderMode { Search, Fast };

/// Geometric set of candidate sampling radii swept once per iteration.
/// Consecutive radii differ by exactly a factor of 2; `radii` is descending.
struct RadiusLadder {
  std::vector<double> radii;
  int depth = 0;  // K
  LadderMode mode = LadderMode::Search;
};

/// Search mode: radii { 2^-k R : k = 0..K } with K = ceil(log2(R/r)).
RadiusLadder build_ladder_search(double max_radius, double min_radius);

/// Fast mode: radii { 2^-k R : k = -K..K } with K = ceil(log2(4 sqrt(Q))).
RadiusLadder build_ladder_fast(double radius, double q_bound);

}  // namespace gld
