#pragma once

#include <functional>
#include <optional>

#include "gld/rng.hpp"
#include "gld/sampling.hpp"
#include "gld/vec.hpp"

namespace gld {

/// Regularized incomplete beta function I_x(a, b), evaluated with the
/// standard continued fraction plus the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
/// Absolute accuracy 1e-10 over 0 <= x <= 1, a, b > 0.
double regularized_incomplete_beta(double x, double a, double b);

/// Two balls of radii r1, r2 in R^dim whose centers are ell apart.
struct BallPair {
  double r1 = 1.0;
  double r2 = 1.0;
  double ell = 1.0;
  int dim = 1;

  bool intersects() const;
  /// Signed distance from B1's center to the radical hyperplane:
  /// c1 = (ell^2 + r1^2 - r2^2) / (2 ell).
  double cap_offset() const;
};

struct CapFraction {
  double fraction = 0.0;  // vol(C1) / vol(B1)
  bool degenerate = false;  // containment or beyond-hemisphere handling used
};

/// Fraction of B1 occupied by its own intersection cap, from the exact
/// spherical-cap formula vol(C1) = 1/2 vol(B1) I_{1 - c1^2/r1^2}((n+1)/2, 1/2).
/// Full containment of B1 in B2 returns 1; disjoint balls return 0; caps
/// past the hemisphere use the complementary formula and are flagged.
CapFraction cap_fraction_exact(const BallPair& pair);

struct McEstimate {
  double value = 0.0;
  double stderr_value = 0.0;
  long long samples = 0;
  bool hypothesis_ok = true;
};

/// Monte Carlo fraction of B1's volume lying inside B2.
McEstimate intersection_fraction_mc(const BallPair& pair, long long samples,
                                    SeededRng& rng);

/// Monte Carlo fraction of B1 beyond the radical hyperplane (B1's own
/// intersection cap). Independent oracle for cap_fraction_exact.
McEstimate cap_fraction_mc(const BallPair& pair, long long samples,
                           SeededRng& rng);

/// P(X in B2) for X ~ N(center1, (r1^2/dim) I). `hypothesis_ok` reports
/// whether r1 in [ell/(2 sqrt n), ell/sqrt n] and r2 >= ell (1 - slack/n)
/// hold; the estimate is computed either way.
McEstimate gaussian_intersection_mc(const BallPair& pair, long long samples,
                                    SeededRng& rng,
                                    double hypothesis_slack = 1.0);

/// Fraction of sampled steps from x achieving the multiplicative gap
/// decrease (1 - 1/(5 n Q)). The sampler draws at scale rung/sqrt(n) for
/// uniform balls or variance rung^2/n for Gaussians.
McEstimate descent_probability_mc(const std::function<double(const Vec&)>& f,
                                  const Vec& x_star, double f_star,
                                  const Vec& x, double rung,
                                  SamplerKind sampler, double q,
                                  long long samples, SeededRng& rng);

/// Probability probe for the lower-bound construction: ellipsoid
/// f(x) = x_1^2 + Q sum_{i>1} x_i^2, start sampled from
/// { x : x_1 in [0.9, 1], |x_i| <= 0.1/(Q sqrt n) }, step y = x + rung * v
/// with v standard Gaussian. Success means
/// f(y) <= f(x) (1 - sqrt(5 ln(nQ)) / (nQ)).
McEstimate lower_bound_probe(int n, double q, double rung, long long samples,
                             SeededRng& rng);

}  // namespace gld
