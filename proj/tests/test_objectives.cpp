#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gld/objectives.hpp"
#include "gld/rng.hpp"

using namespace gld;

TEST_CASE("build_quadratic diagonal spacing") {
  const QuadraticSpec q = build_quadratic(1.0, 8.0, 2);
  CHECK(q.diag[0] == doctest::Approx(1.0));
  CHECK(q.diag[1] == doctest::Approx(8.0));

  const QuadraticSpec constant = build_quadratic(3.0, 3.0, 5);
  for (double d : constant.diag) CHECK(d == doctest::Approx(3.0));

  const QuadraticSpec four = build_quadratic(1.0, 8.0, 4);
  CHECK(four.diag[0] == doctest::Approx(1.0));
  CHECK(four.diag[1] == doctest::Approx(10.0 / 3.0));
  CHECK(four.diag[2] == doctest::Approx(17.0 / 3.0));
  CHECK(four.diag[3] == doctest::Approx(8.0));

  // n = 1 degenerate case
  CHECK(build_quadratic(2.5, 7.0, 1).diag[0] == doctest::Approx(2.5));
}

TEST_CASE("build_quadratic rejects bad parameters") {
  CHECK_THROWS_AS(build_quadratic(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_quadratic(-1.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_quadratic(2.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_quadratic(1.0, 2.0, 0), std::invalid_argument);
}

TEST_CASE("condition number is the diagonal ratio") {
  const QuadraticSpec q = build_quadratic(1.0, 8.0, 17);
  CHECK(q.diag.back() / q.diag.front() == doctest::Approx(8.0));
  CHECK(q.condition_number() == doctest::Approx(8.0));
}

TEST_CASE("counted evaluation") {
  const QuadraticSpec q = build_quadratic(1.0, 8.0, 2);
  ObjectiveOracle oracle = q.make_oracle();
  CHECK(oracle.evaluate({0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(oracle.evaluate({1.0, 1.0}) == doctest::Approx(4.5));
  CHECK(oracle.eval_count() == 2);
  for (int i = 0; i < 5; ++i) oracle.evaluate({0.5, 0.5});
  CHECK(oracle.eval_count() == 7);
  oracle.evaluate({0.0, 1.0});
  CHECK(oracle.eval_count() == 8);
}

TEST_CASE("counted evaluation rejects bad inputs") {
  ObjectiveOracle oracle = build_quadratic(1.0, 8.0, 2).make_oracle();
  CHECK_THROWS_AS(oracle.evaluate({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(oracle.evaluate({1.0, std::nan("")}),
                  std::invalid_argument);
  CHECK(oracle.eval_count() == 0);
}

TEST_CASE("oracle evaluates its own optimum exactly") {
  ObjectiveOracle oracle = build_quadratic(1.0, 8.0, 3).make_oracle();
  REQUIRE(oracle.known_optimum().has_value());
  const auto& opt = *oracle.known_optimum();
  CHECK(oracle.evaluate(opt.point) == doctest::Approx(opt.value).epsilon(1e-12));
}

TEST_CASE("monotone wrap values and shared counting") {
  ObjectiveOracle inner = build_quadratic(1.0, 8.0, 2).make_oracle();
  ObjectiveOracle wrapped =
      wrap_monotone(inner, MonotoneTransform::NegExpNegSqrt);
  CHECK(wrapped.evaluate({0.0, 0.0}) == doctest::Approx(-1.0));
  CHECK(wrapped.evaluate({1.0, 1.0}) ==
        doctest::Approx(-std::exp(-std::sqrt(4.5))));
  CHECK(-std::exp(-std::sqrt(4.5)) == doctest::Approx(-0.119899).epsilon(1e-4));
  // Accounting delegates to the inner oracle.
  CHECK(inner.eval_count() == 2);
  CHECK(wrapped.eval_count() == 2);
  inner.evaluate({0.0, 0.0});
  CHECK(wrapped.eval_count() == 3);

  ObjectiveOracle identity = wrap_monotone(inner, MonotoneTransform::Identity);
  CHECK(identity.evaluate({1.0, 1.0}) == doctest::Approx(4.5));
}

TEST_CASE("neg_exp_neg_sqrt domain and monotonicity") {
  CHECK_THROWS_AS(neg_exp_neg_sqrt(-0.1), std::domain_error);
  SeededRng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double y1 = 10.0 * rng.next_double();
    const double y2 = y1 + 1e-6 + 10.0 * rng.next_double();
    CHECK(neg_exp_neg_sqrt(y1) < neg_exp_neg_sqrt(y2));
  }
}

TEST_CASE("level sets preserved under wrap") {
  const QuadraticSpec q = build_quadratic(1.0, 8.0, 3);
  SeededRng rng(4);
  for (int i = 0; i < 1000; ++i) {
    Vec a(3), b(3);
    for (auto& v : a) v = 2.0 * rng.next_double() - 1.0;
    for (auto& v : b) v = 2.0 * rng.next_double() - 1.0;
    const double fa = q.value(a), fb = q.value(b);
    const double ga = neg_exp_neg_sqrt(fa), gb = neg_exp_neg_sqrt(fb);
    if (fa < fb) CHECK(ga < gb);
    if (fa == fb) CHECK(ga == gb);
    if (fa > fb) CHECK(ga > gb);
  }
}

TEST_CASE("low rank axis-aligned projection") {
  const QuadraticSpec g = build_quadratic(1.0, 1.0, 1);  // g(y) = y^2 / 2
  std::vector<Vec> basis{{1.0, 0.0, 0.0}};
  const LowRankComposite f = build_low_rank_with_basis(basis, g, 0.0);
  CHECK(f.value({2.0, 9.0, -7.0}) == doctest::Approx(2.0));
}

TEST_CASE("low rank basis orthonormality") {
  const QuadraticSpec g = build_quadratic(1.0, 8.0, 5);
  const LowRankComposite f = build_low_rank(40, 5, g, 0.0, 77);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      CHECK(std::abs(dot(f.basis[i], f.basis[j]) - expected) < 1e-10);
    }
}

TEST_CASE("low rank with zero delta matches the projection exactly") {
  const QuadraticSpec g = build_quadratic(1.0, 8.0, 3);
  const LowRankComposite f = build_low_rank(10, 3, g, 0.0, 5);
  SeededRng rng(6);
  for (int i = 0; i < 1000; ++i) {
    Vec x(10);
    for (auto& v : x) v = rng.next_gaussian();
    CHECK(f.value(x) == doctest::Approx(f.projected_value(x)));
  }
}

TEST_CASE("low rank invariant to null-space motion") {
  const QuadraticSpec g = build_quadratic(1.0, 8.0, 2);
  const LowRankComposite f = build_low_rank(8, 2, g, 0.0, 11);
  SeededRng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Vec x(8), w(8);
    for (auto& v : x) v = rng.next_gaussian();
    for (auto& v : w) v = rng.next_gaussian();
    // Project w onto the null space of the basis.
    for (const Vec& col : f.basis) axpy(w, -dot(col, w), col);
    const double fx = f.value(x);
    const double fxw = f.value(add(x, w));
    CHECK(std::abs(fxw - fx) <= 1e-9 * std::max(1.0, std::abs(fx)));
  }
}

TEST_CASE("low rank in-column-space evaluation matches dense oracle") {
  const QuadraticSpec g = build_quadratic(1.0, 8.0, 3);
  const LowRankComposite f = build_low_rank(12, 3, g, 0.0, 21);
  SeededRng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    Vec z(3);
    for (auto& v : z) v = rng.next_gaussian();
    // x = A z lies in the column space; latent coordinates must recover z.
    Vec x(12, 0.0);
    for (int j = 0; j < 3; ++j) axpy(x, z[j], f.basis[j]);
    CHECK(f.value(x) == doctest::Approx(g.value(z)).epsilon(1e-9));
  }
}

TEST_CASE("low rank perturbation bound") {
  const QuadraticSpec g = build_quadratic(1.0, 8.0, 2);
  const double delta = 0.01;
  const LowRankComposite f = build_low_rank(6, 2, g, delta, 31);
  SeededRng rng(32);
  double max_dev = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Vec x(6);
    for (auto& v : x) v = 3.0 * rng.next_gaussian();
    max_dev = std::max(max_dev, std::abs(f.value(x) - f.projected_value(x)));
  }
  CHECK(max_dev <= delta);
  CHECK(max_dev > 0.5 * delta);  // the perturbation actually bites
}

TEST_CASE("build_low_rank parameter validation") {
  const QuadraticSpec g = build_quadratic(1.0, 8.0, 3);
  CHECK_THROWS_AS(build_low_rank(3, 3, g, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_low_rank(5, 0, build_quadratic(1, 1, 1), 0.0, 1),
                  std::invalid_argument);
}

TEST_CASE("benchmark values at and away from the optimum") {
  const Vec zero2{0.0, 0.0};
  CHECK(build_benchmark(BenchmarkKind::Rastrigin, 2).value(zero2) ==
        doctest::Approx(0.0));
  CHECK(build_benchmark(BenchmarkKind::Ellipsoidal, 2).value({1.0, 1.0}) ==
        doctest::Approx(1.0 + 1e6));
  CHECK(build_benchmark(BenchmarkKind::Discus, 3).value({0.0, 1.0, 1.0}) ==
        doctest::Approx(2.0));
}

TEST_CASE("benchmarks vanish at a shifted optimum and stay finite on the box") {
  SeededRng rng(41);
  for (BenchmarkKind kind :
       {BenchmarkKind::Rastrigin, BenchmarkKind::BentCigar,
        BenchmarkKind::DifferentPowers, BenchmarkKind::Discus,
        BenchmarkKind::Ellipsoidal, BenchmarkKind::SharpRidge,
        BenchmarkKind::SchaffersF7, BenchmarkKind::Katsuura,
        BenchmarkKind::Weierstrass}) {
    Vec shift{0.3, -1.2, 2.0};
    const BenchmarkFunction fn = build_benchmark(kind, 3, shift);
    CHECK(std::abs(fn.value(shift)) < 1e-9);
    for (int i = 0; i < 200; ++i) {
      Vec x(3);
      for (auto& v : x) v = 10.0 * rng.next_double() - 5.0;
      const double fv = fn.value(x);
      CHECK(std::isfinite(fv));
      CHECK(fv >= -1e-9);
    }
  }
}

TEST_CASE("benchmark dimension mismatch") {
  const BenchmarkFunction fn = build_benchmark(BenchmarkKind::Rastrigin, 3);
  ObjectiveOracle oracle = fn.make_oracle();
  CHECK_THROWS_AS(oracle.evaluate({1.0, 2.0}), std::invalid_argument);
}
