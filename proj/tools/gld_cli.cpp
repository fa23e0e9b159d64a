#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gld/baselines.hpp"
#include "gld/geometry.hpp"
#include "gld/gld.hpp"
#include "gld/harness.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GLD_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

int run_single(const std::string& algo, int dim, double alpha, double beta,
               double q_bound, std::uint64_t seed, long long max_evals,
               const std::string& transform, const std::string& out_path) {
  if (alpha <= 0.0 || beta < alpha) {
    std::cerr << "error: parameters must satisfy 0 < alpha <= beta\n";
    return 1;
  }
  const double q = beta / alpha;
  if (q_bound <= 0.0) q_bound = q;
  const gld::QuadraticSpec quad = gld::build_quadratic(alpha, beta, dim);
  gld::ObjectiveOracle inner = quad.make_oracle();
  gld::ObjectiveOracle oracle =
      transform == "neg_exp_neg_sqrt"
          ? gld::wrap_monotone(inner, gld::MonotoneTransform::NegExpNegSqrt)
          : inner;
  const gld::Vec x0(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  const double diameter = std::sqrt(q_bound);
  gld::SeededRng rng(seed);
  gld::RunTrace trace;
  if (algo == "gld-search") {
    gld::GldSearchConfig config;
    config.max_iterations = static_cast<int>(max_evals);
    config.max_radius = diameter;
    config.min_radius = 1e-4 * diameter;
    config.sampler = gld::SamplerKind::Gaussian;
    config.max_evals = max_evals;
    trace = gld::gld_search_run(oracle, config, x0, rng);
  } else if (algo == "gld-fast") {
    gld::GldFastConfig config;
    config.max_iterations = static_cast<int>(max_evals);
    config.initial_radius = diameter;
    config.q_bound = q_bound;
    config.sampler = gld::SamplerKind::Gaussian;
    config.max_evals = max_evals;
    trace = gld::gld_fast_run(oracle, config, x0, rng);
  } else if (algo == "ars") {
    gld::ArsConfig config;
    config.alpha_hat = alpha;
    config.beta_hat = beta;
    config.max_iterations = static_cast<int>(max_evals / 2);
    config.diameter = diameter;
    config.max_evals = max_evals;
    trace = gld::ars_run(oracle, config, x0, rng);
  } else {
    std::cerr << "error: unknown --algo " << algo << '\n';
    return 1;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << '\n';
    return 2;
  }
  out << gld::kTraceHeader << '\n';
  for (const gld::TraceRow& row :
       gld::trace_rows("run", algo, dim, q, seed, trace, 0.0))
    out << gld::format_trace_row(row) << '\n';
  std::cout << "wrote " << trace.records.size() << " rows to " << out_path
            << "; final value " << trace.final_value << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GradientLess Descent optimizers and verification harness"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "single optimizer run");
  std::string algo = "gld-fast";
  int dim = 10;
  double alpha = 1.0, beta = 8.0, q_bound = 0.0;
  std::uint64_t seed = default_seed();
  long long max_evals = 100000;
  std::string transform = "identity";
  std::string out_path = "trace.csv";
  run_cmd->add_option("--algo", algo, "gld-search | gld-fast | ars");
  run_cmd->add_option("--dim", dim)->check(CLI::PositiveNumber);
  run_cmd->add_option("--alpha", alpha);
  run_cmd->add_option("--beta", beta);
  run_cmd->add_option("--q", q_bound, "condition number bound for gld-fast");
  run_cmd->add_option("--seed", seed);
  run_cmd->add_option("--max-evals", max_evals)->check(CLI::PositiveNumber);
  run_cmd->add_option("--transform", transform,
                      "identity | neg_exp_neg_sqrt");
  run_cmd->add_option("--out", out_path);

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "named experiment suite");
  std::string config_path;
  exp_cmd->add_option("--config", config_path, "JSON experiment spec")
      ->required();

  // verify-geometry
  auto* geo_cmd =
      app.add_subcommand("verify-geometry", "ball intersection grid sweep");
  long long samples = 100000;
  std::uint64_t geo_seed = default_seed();
  std::string geo_out = "geometry.csv";
  geo_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  geo_cmd->add_option("--seed", geo_seed);
  geo_cmd->add_option("--out", geo_out);

  // probe-lower-bound
  auto* probe_cmd =
      app.add_subcommand("probe-lower-bound", "large-radius failure probe");
  int probe_n = 100;
  double probe_q = 10.0;
  double rung = 1.0;
  long long probe_samples = 10000;
  std::uint64_t probe_seed = default_seed();
  std::string probe_out = "lower_bound.csv";
  probe_cmd->add_option("--n", probe_n)->check(CLI::Range(2, 1000000));
  probe_cmd->add_option("--q", probe_q);
  probe_cmd->add_option("--rung", rung);
  probe_cmd->add_option("--samples", probe_samples)
      ->check(CLI::PositiveNumber);
  probe_cmd->add_option("--seed", probe_seed);
  probe_cmd->add_option("--out", probe_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed())
      return run_single(algo, dim, alpha, beta, q_bound, seed, max_evals,
                        transform, out_path);
    if (exp_cmd->parsed()) {
      const gld::ExperimentSpec spec = gld::load_experiment_file(config_path);
      const long long rows = gld::run_experiment(spec);
      std::cout << "wrote " << rows << " rows to " << spec.output << '\n';
      return 0;
    }
    if (geo_cmd->parsed()) {
      const auto grid = gld::run_geometry_grid(samples, geo_seed);
      gld::write_geometry_csv(geo_out, grid);
      std::cout << "wrote " << grid.size() << " grid rows to " << geo_out
                << '\n';
      return 0;
    }
    if (probe_cmd->parsed()) {
      gld::SeededRng rng(probe_seed);
      const double nq = probe_n * probe_q;
      const double control = std::sqrt(std::log(nq)) / nq;
      std::ofstream out(probe_out);
      if (!out) {
        std::cerr << "error: cannot open output file " << probe_out << '\n';
        return 2;
      }
      out << "n,q,rung,probability,stderr,samples\n";
      for (double r : {rung, control}) {
        const gld::McEstimate est =
            gld::lower_bound_probe(probe_n, probe_q, r, probe_samples, rng);
        out << probe_n << ',' << probe_q << ',' << r << ',' << est.value
            << ',' << est.stderr_value << ',' << est.samples << '\n';
      }
      std::cout << "wrote probe results to " << probe_out << '\n';
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
