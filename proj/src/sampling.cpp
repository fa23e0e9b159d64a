#include "gld/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace gld {

Vec sample_uniform_ball(SeededRng& rng, const Vec& center, double radius) {
  if (radius < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const int n = static_cast<int>(center.size());
  Vec dir(n);
  double nrm2 = 0.0;
  for (double& v : dir) {
    v = rng.next_gaussian();
    nrm2 += v * v;
  }
  const double nrm = std::sqrt(nrm2);
  const double u = rng.next_double();
  const double len = radius * std::pow(u, 1.0 / static_cast<double>(n));
  Vec out(n);
  if (nrm == 0.0) return center;  // astronomically unlikely; degenerate draw
  for (int i = 0; i < n; ++i) out[i] = center[i] + len * dir[i] / nrm;
  return out;
}

Vec sample_gaussian(SeededRng& rng, const Vec& center, double radius,
                    int effective_dim) {
  if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
  if (effective_dim < 1)
    throw std::invalid_argument("effective_dim must be >= 1");
  const double sd = radius / std::sqrt(static_cast<double>(effective_dim));
  Vec out(center.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = center[i] + sd * rng.next_gaussian();
  return out;
}

RadiusLadder build_ladder_search(double max_radius, double min_radius) {
  if (min_radius <= 0.0 || min_radius > max_radius)
    throw std::invalid_argument("ladder requires 0 < r <= R");
  const int depth =
      static_cast<int>(std::ceil(std::log2(max_radius / min_radius)));
  RadiusLadder ladder;
  ladder.mode = LadderMode::Search;
  ladder.depth = depth;
  double radius = max_radius;
  for (int k = 0; k <= depth; ++k) {
    ladder.radii.push_back(radius);
    radius *= 0.5;
  }
  return ladder;
}

RadiusLadder build_ladder_fast(double radius, double q_bound) {
  if (radius <= 0.0) throw std::invalid_argument("ladder requires R > 0");
  if (q_bound < 1.0) throw std::invalid_argument("ladder requires Q >= 1");
  const int depth =
      static_cast<int>(std::ceil(std::log2(4.0 * std::sqrt(q_bound))));
  RadiusLadder ladder;
  ladder.mode = LadderMode::Fast;
  ladder.depth = depth;
  double r = std::ldexp(radius, depth);  // 2^K R
  for (int k = -depth; k <= depth; ++k) {
    ladder.radii.push_back(r);
    r *= 0.5;
  }
  return ladder;
}

}  // namespace gld
