#include "gld/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace gld {

namespace {

// Lentz-style continued fraction for the incomplete beta function,
// convergent for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

// Binomial point estimate with an add-half smoothed standard error so the
// reported uncertainty never collapses to zero when every sample agrees.
McEstimate binomial_estimate(long long hits, long long samples) {
  McEstimate est;
  est.samples = samples;
  est.value = static_cast<double>(hits) / static_cast<double>(samples);
  const double p =
      (static_cast<double>(hits) + 0.5) / (static_cast<double>(samples) + 1.0);
  est.stderr_value = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("incomplete beta requires 0 <= x <= 1");
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("incomplete beta requires a, b > 0");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

bool BallPair::intersects() const {
  return std::abs(r1 - r2) <= ell && ell <= r1 + r2;
}

double BallPair::cap_offset() const {
  return (ell * ell + r1 * r1 - r2 * r2) / (2.0 * ell);
}

CapFraction cap_fraction_exact(const BallPair& pair) {
  if (pair.r1 <= 0.0 || pair.r2 <= 0.0 || pair.ell <= 0.0 || pair.dim < 1)
    throw std::invalid_argument("ball pair parameters must be positive");
  CapFraction out;
  if (pair.ell >= pair.r1 + pair.r2) {
    out.degenerate = true;
    return out;  // disjoint: fraction 0
  }
  if (pair.ell + pair.r1 <= pair.r2) {
    out.degenerate = true;
    out.fraction = 1.0;  // B1 entirely inside B2
    return out;
  }
  const double c1 = pair.cap_offset();
  const double ratio2 = (c1 / pair.r1) * (c1 / pair.r1);
  const double x = std::max(0.0, 1.0 - ratio2);
  const double half_cap = 0.5 * regularized_incomplete_beta(
                                    x, (pair.dim + 1) / 2.0, 0.5);
  if (c1 > 0.0) {
    out.fraction = half_cap;
  } else {
    // Cap covers more than a hemisphere; use the complement.
    out.degenerate = true;
    out.fraction = 1.0 - half_cap;
  }
  return out;
}

McEstimate intersection_fraction_mc(const BallPair& pair, long long samples,
                                    SeededRng& rng) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  // B1 at the origin, B2 at (ell, 0, ..., 0).
  Vec center1(pair.dim, 0.0);
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    const Vec y = sample_uniform_ball(rng, center1, pair.r1);
    double d2 = (y[0] - pair.ell) * (y[0] - pair.ell);
    for (int i = 1; i < pair.dim; ++i) d2 += y[i] * y[i];
    if (d2 <= pair.r2 * pair.r2) ++hits;
  }
  return binomial_estimate(hits, samples);
}

McEstimate cap_fraction_mc(const BallPair& pair, long long samples,
                           SeededRng& rng) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const double c1 = pair.cap_offset();
  Vec center1(pair.dim, 0.0);
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    const Vec y = sample_uniform_ball(rng, center1, pair.r1);
    if (y[0] >= c1) ++hits;  // B2 lies along +e1; cap is the far-side slice
  }
  return binomial_estimate(hits, samples);
}

McEstimate gaussian_intersection_mc(const BallPair& pair, long long samples,
                                    SeededRng& rng, double hypothesis_slack) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const double sqrt_n = std::sqrt(static_cast<double>(pair.dim));
  const bool r1_ok = pair.r1 >= pair.ell / (2.0 * sqrt_n) &&
                     pair.r1 <= pair.ell / sqrt_n;
  const bool r2_ok =
      pair.r2 >= pair.ell * (1.0 - hypothesis_slack / pair.dim);
  const double sd = pair.r1 / sqrt_n;
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    double d2 = 0.0;
    for (int i = 0; i < pair.dim; ++i) {
      const double xi = sd * rng.next_gaussian() - (i == 0 ? pair.ell : 0.0);
      d2 += xi * xi;
    }
    if (d2 <= pair.r2 * pair.r2) ++hits;
  }
  McEstimate est = binomial_estimate(hits, samples);
  est.hypothesis_ok = r1_ok && r2_ok;
  return est;
}

McEstimate descent_probability_mc(const std::function<double(const Vec&)>& f,
                                  const Vec& x_star, double f_star,
                                  const Vec& x, double rung,
                                  SamplerKind sampler, double q,
                                  long long samples, SeededRng& rng) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const double dist = norm(sub(x, x_star));
  if (dist < 1e-12)
    throw std::invalid_argument("descent probe requires x away from x*");
  const int n = static_cast<int>(x.size());
  const double gap = f(x) - f_star;
  const double target =
      gap * (1.0 - 1.0 / (5.0 * static_cast<double>(n) * q));
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    Vec y;
    if (sampler == SamplerKind::UniformBall)
      y = sample_uniform_ball(rng, x,
                              rung / std::sqrt(static_cast<double>(n)));
    else
      y = sample_gaussian(rng, x, rung, n);
    if (f(y) - f_star <= target) ++hits;
  }
  return binomial_estimate(hits, samples);
}

McEstimate lower_bound_probe(int n, double q, double rung, long long samples,
                             SeededRng& rng) {
  if (n < 2) throw std::invalid_argument("lower bound probe requires n >= 2");
  if (q < 1.0) throw std::invalid_argument("lower bound probe requires Q >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const double nq = static_cast<double>(n) * q;
  const double factor = 1.0 - std::sqrt(5.0 * std::log(nq)) / nq;
  const double coord_bound = 0.1 / (q * std::sqrt(static_cast<double>(n)));
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    // Start point drawn from the hard-instance region described above.
    double fx = 0.0, fy = 0.0;
    const double x1 = 0.9 + 0.1 * rng.next_double();
    {
      const double y1 = x1 + rung * rng.next_gaussian();
      fx += x1 * x1;
      fy += y1 * y1;
    }
    for (int i = 1; i < n; ++i) {
      const double xi = coord_bound * (2.0 * rng.next_double() - 1.0);
      const double yi = xi + rung * rng.next_gaussian();
      fx += q * xi * xi;
      fy += q * yi * yi;
    }
    if (fy <= fx * factor) ++hits;
  }
  return binomial_estimate(hits, samples);
}

}  // namespace gld
