#include "gld/objectives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gld/rng.hpp"

namespace gld {

ObjectiveOracle::ObjectiveOracle(int dim, Fn fn, std::optional<Optimum> optimum)
    : dim_(dim),
      fn_(std::move(fn)),
      count_(std::make_shared<long long>(0)),
      optimum_(std::move(optimum)) {
  if (dim_ < 1) throw std::invalid_argument("oracle dim must be positive");
}

double ObjectiveOracle::evaluate(const Vec& x) {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("evaluate: dimension mismatch");
  if (!all_finite(x))
    throw std::invalid_argument("evaluate: non-finite input coordinate");
  ++*count_;
  return fn_(x);
}

double neg_exp_neg_sqrt(double y) {
  if (y < 0.0)
    throw std::domain_error("NegExpNegSqrt requires nonnegative inner value");
  return -std::exp(-std::sqrt(y));
}

double apply_transform(MonotoneTransform t, double y) {
  switch (t) {
    case MonotoneTransform::Identity:
      return y;
    case MonotoneTransform::NegExpNegSqrt:
      return neg_exp_neg_sqrt(y);
  }
  throw std::invalid_argument("unknown transform");
}

ObjectiveOracle wrap_monotone(const ObjectiveOracle& inner,
                              MonotoneTransform transform) {
  ObjectiveOracle out = inner;
  auto inner_fn = inner.fn_;
  out.fn_ = [inner_fn, transform](const Vec& x) {
    return apply_transform(transform, inner_fn(x));
  };
  if (inner.optimum_) {
    out.optimum_ = Optimum{inner.optimum_->point,
                           apply_transform(transform, inner.optimum_->value)};
  }
  return out;  // shares count_ with inner
}

double QuadraticSpec::value(const Vec& x) const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += diag[i] * x[i] * x[i];
  return 0.5 * s;
}

ObjectiveOracle QuadraticSpec::make_oracle() const {
  QuadraticSpec spec = *this;
  return ObjectiveOracle(
      dim, [spec](const Vec& x) { return spec.value(x); },
      Optimum{Vec(dim, 0.0), 0.0});
}

QuadraticSpec build_quadratic(double alpha, double beta, int dim) {
  if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
  if (beta < alpha) throw std::invalid_argument("beta must satisfy beta >= alpha");
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  QuadraticSpec spec;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.dim = dim;
  spec.diag.resize(dim);
  if (dim == 1) {
    spec.diag[0] = alpha;
  } else {
    for (int i = 0; i < dim; ++i)
      spec.diag[i] = alpha + (beta - alpha) * static_cast<double>(i) /
                                 static_cast<double>(dim - 1);
  }
  return spec;
}

Vec LowRankComposite::latent(const Vec& x) const {
  Vec z(latent_dim);
  for (int j = 0; j < latent_dim; ++j) z[j] = dot(basis[j], x);
  return z;
}

double LowRankComposite::projected_value(const Vec& x) const {
  return inner.value(latent(x));
}

double LowRankComposite::value(const Vec& x) const {
  double v = projected_value(x);
  if (delta > 0.0) {
    double s = 0.0;
    for (double xi : x) s += xi;
    v += delta * std::sin(s);
  }
  return v;
}

ObjectiveOracle LowRankComposite::make_oracle() const {
  LowRankComposite self = *this;
  std::optional<Optimum> opt;
  if (delta == 0.0) opt = Optimum{Vec(dim, 0.0), 0.0};
  return ObjectiveOracle(
      dim, [self](const Vec& x) { return self.value(x); }, opt);
}

namespace {

// Modified Gram-Schmidt with one re-orthonormalization pass.
void orthonormalize(std::vector<Vec>& cols) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i)
        axpy(cols[j], -dot(cols[i], cols[j]), cols[i]);
      const double nrm = norm(cols[j]);
      if (nrm < 1e-12)
        throw std::runtime_error("degenerate basis draw; choose another seed");
      for (double& v : cols[j]) v /= nrm;
    }
  }
}

}  // namespace

LowRankComposite build_low_rank(int dim, int latent_dim,
                                const QuadraticSpec& inner, double delta,
                                std::uint64_t seed) {
  if (latent_dim < 1 || latent_dim >= dim)
    throw std::invalid_argument("latent_dim must satisfy 1 <= k < n");
  if (inner.dim != latent_dim)
    throw std::invalid_argument("inner spec dimension must equal latent_dim");
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  SeededRng rng(seed);
  std::vector<Vec> cols(latent_dim, Vec(dim));
  for (auto& col : cols)
    for (double& v : col) v = rng.next_gaussian();
  orthonormalize(cols);
  LowRankComposite out;
  out.dim = dim;
  out.latent_dim = latent_dim;
  out.basis = std::move(cols);
  out.inner = inner;
  out.delta = delta;
  return out;
}

LowRankComposite build_low_rank_with_basis(std::vector<Vec> basis,
                                           const QuadraticSpec& inner,
                                           double delta) {
  if (basis.empty()) throw std::invalid_argument("basis must be nonempty");
  const int dim = static_cast<int>(basis[0].size());
  const int k = static_cast<int>(basis.size());
  if (k >= dim) throw std::invalid_argument("basis must satisfy k < n");
  if (inner.dim != k)
    throw std::invalid_argument("inner spec dimension must equal latent_dim");
  LowRankComposite out;
  out.dim = dim;
  out.latent_dim = k;
  out.basis = std::move(basis);
  out.inner = inner;
  out.delta = delta;
  return out;
}

const char* benchmark_name(BenchmarkKind kind) {
  switch (kind) {
    case BenchmarkKind::Rastrigin: return "rastrigin";
    case BenchmarkKind::BentCigar: return "bent_cigar";
    case BenchmarkKind::DifferentPowers: return "different_powers";
    case BenchmarkKind::Discus: return "discus";
    case BenchmarkKind::Ellipsoidal: return "ellipsoidal";
    case BenchmarkKind::SharpRidge: return "sharp_ridge";
    case BenchmarkKind::SchaffersF7: return "schaffers_f7";
    case BenchmarkKind::Katsuura: return "katsuura";
    case BenchmarkKind::Weierstrass: return "weierstrass";
  }
  return "unknown";
}

std::optional<BenchmarkKind> benchmark_from_name(const std::string& name) {
  for (BenchmarkKind kind :
       {BenchmarkKind::Rastrigin, BenchmarkKind::BentCigar,
        BenchmarkKind::DifferentPowers, BenchmarkKind::Discus,
        BenchmarkKind::Ellipsoidal, BenchmarkKind::SharpRidge,
        BenchmarkKind::SchaffersF7, BenchmarkKind::Katsuura,
        BenchmarkKind::Weierstrass}) {
    if (name == benchmark_name(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double rastrigin(const Vec& z) {
  double s = 10.0 * static_cast<double>(z.size());
  for (double v : z) s += v * v - 10.0 * std::cos(kTwoPi * v);
  return s;
}

double bent_cigar(const Vec& z) {
  double s = z[0] * z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s += 1e6 * z[i] * z[i];
  return s;
}

double different_powers(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p =
        n > 1 ? 2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n - 1)
              : 2.0;
    s += std::pow(std::abs(z[i]), p);
  }
  return std::sqrt(s);
}

double discus(const Vec& z) {
  double s = 1e6 * z[0] * z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s += z[i] * z[i];
  return s;
}

double ellipsoidal(const Vec& z) {
  const std::size_t n = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w =
        n > 1 ? std::pow(10.0, 6.0 * static_cast<double>(i) /
                                   static_cast<double>(n - 1))
              : 1.0;
    s += w * z[i] * z[i];
  }
  return s;
}

double sharp_ridge(const Vec& z) {
  double tail = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) tail += z[i] * z[i];
  return z[0] * z[0] + 100.0 * std::sqrt(tail);
}

double schaffers_f7(const Vec& z) {
  const std::size_t n = z.size();
  if (n == 1) return z[0] * z[0];
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double si = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
    const double t = std::sin(50.0 * std::pow(si, 0.2));
    s += std::sqrt(si) * (1.0 + t * t);
  }
  s /= static_cast<double>(n - 1);
  return s * s;
}

double katsuura(const Vec& z) {
  const double n = static_cast<double>(z.size());
  double prod = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double inner = 0.0;
    double p2 = 1.0;
    for (int j = 1; j <= 32; ++j) {
      p2 *= 2.0;
      const double t = p2 * z[i];
      inner += std::abs(t - std::round(t)) / p2;
    }
    prod *= std::pow(1.0 + static_cast<double>(i + 1) * inner,
                     10.0 / std::pow(n, 1.2));
  }
  return 10.0 / (n * n) * (prod - 1.0);
}

double weierstrass(const Vec& z) {
  constexpr double a = 0.5;
  constexpr double b = 3.0;
  constexpr int kmax = 20;
  double offset = 0.0;
  {
    double ak = 1.0, bk = 1.0;
    for (int k = 0; k <= kmax; ++k) {
      offset += ak * std::cos(std::numbers::pi * bk);
      ak *= a;
      bk *= b;
    }
  }
  double s = 0.0;
  for (double zi : z) {
    double ak = 1.0, bk = 1.0;
    for (int k = 0; k <= kmax; ++k) {
      s += ak * std::cos(kTwoPi * bk * (zi + 0.5));
      ak *= a;
      bk *= b;
    }
  }
  return s - static_cast<double>(z.size()) * offset;
}

}  // namespace

double BenchmarkFunction::value(const Vec& x) const {
  Vec z(dim);
  for (int i = 0; i < dim; ++i) z[i] = x[i] - optimum_shift[i];
  switch (kind) {
    case BenchmarkKind::Rastrigin: return rastrigin(z);
    case BenchmarkKind::BentCigar: return bent_cigar(z);
    case BenchmarkKind::DifferentPowers: return different_powers(z);
    case BenchmarkKind::Discus: return discus(z);
    case BenchmarkKind::Ellipsoidal: return ellipsoidal(z);
    case BenchmarkKind::SharpRidge: return sharp_ridge(z);
    case BenchmarkKind::SchaffersF7: return schaffers_f7(z);
    case BenchmarkKind::Katsuura: return katsuura(z);
    case BenchmarkKind::Weierstrass: return weierstrass(z);
  }
  throw std::invalid_argument("unknown benchmark kind");
}

ObjectiveOracle BenchmarkFunction::make_oracle() const {
  BenchmarkFunction self = *this;
  return ObjectiveOracle(
      dim, [self](const Vec& x) { return self.value(x); },
      Optimum{optimum_shift, 0.0});
}

BenchmarkFunction build_benchmark(BenchmarkKind kind, int dim,
                                  Vec optimum_shift) {
  if (dim < 1) throw std::invalid_argument("benchmark dim must be >= 1");
  if (optimum_shift.empty()) optimum_shift.assign(dim, 0.0);
  if (static_cast<int>(optimum_shift.size()) != dim)
    throw std::invalid_argument("optimum_shift length must equal dim");
  return BenchmarkFunction{kind, dim, std::move(optimum_shift)};
}

}  // namespace gld
