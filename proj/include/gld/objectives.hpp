#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gld/vec.hpp"

namespace gld {

struct Optimum {
  Vec point;
  double value = 0.0;
};

enum class MonotoneTransform { Identity, NegExpNegSqrt };

/// Counted black-box evaluator. Every call to evaluate() bumps a shared
/// counter; wrapped oracles (monotone transforms) share the counter of the
/// oracle they wrap, so budgets are accounted exactly once per inner call.
/// Not safe for concurrent callers; create one oracle per run.
class ObjectiveOracle {
 public:
  using Fn = std::function<double(const Vec&)>;

  ObjectiveOracle(int dim, Fn fn, std::optional<Optimum> optimum = {});

  /// Evaluates f(x) and increments the shared counter by exactly 1.
  /// Throws std::invalid_argument on dimension mismatch or non-finite input.
  double evaluate(const Vec& x);

  int dim() const { return dim_; }
  long long eval_count() const { return *count_; }
  void reset_count() { *count_ = 0; }
  const std::optional<Optimum>& known_optimum() const { return optimum_; }

  /// Oracle computing transform(f(x)) that shares this oracle's counter.
  friend ObjectiveOracle wrap_monotone(const ObjectiveOracle& inner,
                                       MonotoneTransform transform);

 private:
  int dim_;
  Fn fn_;
  std::shared_ptr<long long> count_;
  std::optional<Optimum> optimum_;
};

/// g(y) = -exp(-sqrt(y)); strictly increasing on y >= 0.
double neg_exp_neg_sqrt(double y);

double apply_transform(MonotoneTransform t, double y);

ObjectiveOracle wrap_monotone(const ObjectiveOracle& inner,
                              MonotoneTransform transform);

/// The diagonal quadratic family: f(x) = 1/2 sum_i diag[i] x_i^2 with
/// diag[i] evenly spaced from alpha to beta.
struct QuadraticSpec {
  double alpha = 1.0;
  double beta = 1.0;
  int dim = 1;
  Vec diag;

  double value(const Vec& x) const;
  double condition_number() const { return beta / alpha; }
  ObjectiveOracle make_oracle() const;
};

QuadraticSpec build_quadratic(double alpha, double beta, int dim);

/// f(x) = g(A^T x) + h(x) with A an n-by-k orthonormal basis, g a latent
/// quadratic, and h(x) = delta * sin(sum_i x_i) when delta > 0.
struct LowRankComposite {
  int dim = 0;
  int latent_dim = 0;
  std::vector<Vec> basis;  // k columns, each of length dim
  QuadraticSpec inner;
  double delta = 0.0;

  Vec latent(const Vec& x) const;           // A^T x
  double value(const Vec& x) const;         // g(A^T x) + h(x)
  double projected_value(const Vec& x) const;  // g(A^T x) only
  ObjectiveOracle make_oracle() const;
};

LowRankComposite build_low_rank(int dim, int latent_dim,
                                const QuadraticSpec& inner, double delta,
                                std::uint64_t seed);

/// Same composite but with an explicitly supplied basis (used by tests that
/// need axis-aligned projections).
LowRankComposite build_low_rank_with_basis(std::vector<Vec> basis,
                                           const QuadraticSpec& inner,
                                           double delta);

enum class BenchmarkKind {
  Rastrigin,
  BentCigar,
  DifferentPowers,
  Discus,
  Ellipsoidal,
  SharpRidge,
  SchaffersF7,
  Katsuura,
  Weierstrass,
};

const char* benchmark_name(BenchmarkKind kind);
std::optional<BenchmarkKind> benchmark_from_name(const std::string& name);

/// Raw analytic benchmark functions with a configurable optimum shift and
/// no rotation or instance machinery. Minimum value is 0 at the shift.
struct BenchmarkFunction {
  BenchmarkKind kind = BenchmarkKind::Rastrigin;
  int dim = 1;
  Vec optimum_shift;

  double value(const Vec& x) const;
  ObjectiveOracle make_oracle() const;
};

BenchmarkFunction build_benchmark(BenchmarkKind kind, int dim,
                                  Vec optimum_shift = {});

}  // namespace gld
