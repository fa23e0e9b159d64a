#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gld/sampling.hpp"

using namespace gld;

TEST_CASE("uniform ball draws stay inside and match known moments") {
  SeededRng rng(100);
  const int n = 8;
  const Vec center(n, 0.0);
  const double radius = 2.0;
  const int samples = 200000;
  double sum_sq = 0.0;
  Vec mean(n, 0.0);
  for (int i = 0; i < samples; ++i) {
    const Vec y = sample_uniform_ball(rng, center, radius);
    const double r = norm(y);
    REQUIRE(r <= radius + 1e-12);
    sum_sq += r * r;
    axpy(mean, 1.0 / samples, y);
  }
  // E||y||^2 = r^2 * n / (n + 2) for the uniform ball.
  const double expected = radius * radius * n / (n + 2.0);
  CHECK(sum_sq / samples == doctest::Approx(expected).epsilon(0.01));
  CHECK(norm(mean) < 0.02);
}

TEST_CASE("uniform ball respects the center") {
  SeededRng rng(101);
  const Vec center{5.0, -3.0, 2.0};
  for (int i = 0; i < 1000; ++i) {
    const Vec y = sample_uniform_ball(rng, center, 0.5);
    CHECK(norm(sub(y, center)) <= 0.5 + 1e-12);
  }
}

TEST_CASE("uniform ball radial cdf follows u^n") {
  // P(||y|| <= t r) = t^n; check the median radius t = 2^(-1/n).
  SeededRng rng(102);
  const int n = 5;
  const Vec center(n, 0.0);
  const double median = std::pow(0.5, 1.0 / n);
  int below = 0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i)
    if (norm(sample_uniform_ball(rng, center, 1.0)) <= median) ++below;
  CHECK(static_cast<double>(below) / samples ==
        doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("gaussian sampler variance scales as radius^2 / effective_dim") {
  SeededRng rng(103);
  const int n = 6;
  const Vec center(n, 1.0);
  const double radius = 3.0;
  const int k = 4;  // effective dim need not equal the ambient dim
  const int samples = 100000;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec y = sample_gaussian(rng, center, radius, k);
    const Vec d = sub(y, center);
    sum_sq += dot(d, d);
  }
  // E||y - x||^2 = n * radius^2 / k.
  const double expected = n * radius * radius / k;
  CHECK(sum_sq / samples == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("sampler parameter validation") {
  SeededRng rng(104);
  const Vec c{0.0, 0.0};
  CHECK_THROWS_AS(sample_uniform_ball(rng, c, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(sample_gaussian(rng, c, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(sample_gaussian(rng, c, 1.0, 0), std::invalid_argument);
  // Zero radius is legal and returns the center exactly.
  const Vec y = sample_uniform_ball(rng, c, 0.0);
  CHECK(y[0] == 0.0);
  CHECK(y[1] == 0.0);
}

TEST_CASE("search ladder construction") {
  const RadiusLadder l = build_ladder_search(10.0, 0.7);
  CHECK(l.depth == 4);  // ceil(log2(10 / 0.7))
  REQUIRE(l.radii.size() == 5);
  CHECK(l.radii[0] == doctest::Approx(10.0));
  CHECK(l.radii[1] == doctest::Approx(5.0));
  CHECK(l.radii[4] == doctest::Approx(0.625));
  CHECK(l.mode == LadderMode::Search);
}

TEST_CASE("search ladder with exact power-of-two ratio") {
  const RadiusLadder l = build_ladder_search(8.0, 1.0);
  CHECK(l.depth == 3);
  REQUIRE(l.radii.size() == 4);
  CHECK(l.radii.back() == doctest::Approx(1.0));
}

TEST_CASE("search ladder degenerate R == r") {
  const RadiusLadder l = build_ladder_search(2.0, 2.0);
  CHECK(l.depth == 0);
  REQUIRE(l.radii.size() == 1);
  CHECK(l.radii[0] == doctest::Approx(2.0));
}

TEST_CASE("fast ladder construction") {
  const RadiusLadder l = build_ladder_fast(1.0, 1.0);
  // K = ceil(log2(4)) = 2; radii 2^k R for k = K..-K.
  CHECK(l.depth == 2);
  REQUIRE(l.radii.size() == 5);
  CHECK(l.radii[0] == doctest::Approx(4.0));
  CHECK(l.radii[1] == doctest::Approx(2.0));
  CHECK(l.radii[2] == doctest::Approx(1.0));
  CHECK(l.radii[3] == doctest::Approx(0.5));
  CHECK(l.radii[4] == doctest::Approx(0.25));
  CHECK(l.mode == LadderMode::Fast);
}

TEST_CASE("fast ladder grows logarithmically in Q") {
  const RadiusLadder q16 = build_ladder_fast(1.0, 16.0);
  // K = ceil(log2(4 * 4)) = 4 -> 9 rungs.
  CHECK(q16.depth == 4);
  CHECK(q16.radii.size() == 9);
  const RadiusLadder q64 = build_ladder_fast(2.0, 64.0);
  // K = ceil(log2(32)) = 5 -> 11 rungs, scaled by R = 2.
  CHECK(q64.depth == 5);
  REQUIRE(q64.radii.size() == 11);
  CHECK(q64.radii[0] == doctest::Approx(64.0));
  CHECK(q64.radii[5] == doctest::Approx(2.0));
}

TEST_CASE("ladders reject bad parameters") {
  CHECK_THROWS_AS(build_ladder_search(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(build_ladder_search(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_ladder_search(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(build_ladder_fast(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_ladder_fast(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("ladder radii are exactly dyadic") {
  const RadiusLadder l = build_ladder_fast(3.0, 100.0);
  for (size_t i = 1; i < l.radii.size(); ++i)
    CHECK(l.radii[i - 1] == 2.0 * l.radii[i]);  // exact in binary
}
