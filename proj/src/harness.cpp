#include "gld/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gld/baselines.hpp"
#include "gld/geometry.hpp"

namespace gld {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Vec standard_start(int dim) {
  return Vec(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ConvergenceByDim: return "convergence_by_dim";
    case ExperimentKind::MonotoneTransform: return "monotone_transform";
    case ExperimentKind::ConditionMisestimation:
      return "condition_misestimation";
    case ExperimentKind::LowRank: return "low_rank";
    case ExperimentKind::DescentProbability: return "descent_probability";
    case ExperimentKind::GeometryGrid: return "geometry_grid";
    case ExperimentKind::LowerBoundProbe: return "lower_bound_probe";
    case ExperimentKind::BenchmarkSuite: return "benchmark_suite";
  }
  return "unknown";
}

std::optional<ExperimentKind> experiment_from_name(const std::string& name) {
  for (ExperimentKind kind :
       {ExperimentKind::ConvergenceByDim, ExperimentKind::MonotoneTransform,
        ExperimentKind::ConditionMisestimation, ExperimentKind::LowRank,
        ExperimentKind::DescentProbability, ExperimentKind::GeometryGrid,
        ExperimentKind::LowerBoundProbe, ExperimentKind::BenchmarkSuite}) {
    if (name == experiment_name(kind)) return kind;
  }
  return std::nullopt;
}

ExperimentSpec parse_experiment_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") +
                             e.what());
  }
  ExperimentSpec spec;
  const char* kind_key =
      j.contains("experiment") ? "experiment" : j.contains("name") ? "name"
                                                                   : nullptr;
  if (kind_key) {
    const auto kind = experiment_from_name(j[kind_key].get<std::string>());
    if (!kind)
      throw std::invalid_argument("unknown experiment name: " +
                                  j[kind_key].get<std::string>());
    spec.kind = *kind;
  }
  if (j.contains("dims")) spec.dims = j["dims"].get<std::vector<int>>();
  if (j.contains("alpha")) spec.alpha = j["alpha"].get<double>();
  if (j.contains("beta")) spec.beta = j["beta"].get<double>();
  if (j.contains("q")) {
    spec.alpha = 1.0;
    spec.beta = j["q"].get<double>();
  }
  if (j.contains("algorithms"))
    spec.algorithms = j["algorithms"].get<std::vector<std::string>>();
  if (j.contains("seeds"))
    spec.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  if (j.contains("max_evals")) spec.max_evals = j["max_evals"].get<long long>();
  if (j.contains("target_gap")) spec.target_gap = j["target_gap"].get<double>();
  if (j.contains("output")) spec.output = j["output"].get<std::string>();
  if (j.contains("transform")) {
    const std::string t = j["transform"].get<std::string>();
    if (t == "identity")
      spec.transform = MonotoneTransform::Identity;
    else if (t == "neg_exp_neg_sqrt")
      spec.transform = MonotoneTransform::NegExpNegSqrt;
    else
      throw std::invalid_argument("unknown transform: " + t);
  }
  if (j.contains("z")) spec.z = j["z"].get<double>();
  if (j.contains("latent_dim")) spec.latent_dim = j["latent_dim"].get<int>();
  if (j.contains("delta")) spec.delta = j["delta"].get<double>();
  if (j.contains("samples")) spec.samples = j["samples"].get<long long>();
  if (spec.dims.empty() || spec.seeds.empty() || spec.algorithms.empty())
    throw std::invalid_argument("dims, seeds, algorithms must be nonempty");
  if (spec.max_evals < 1)
    throw std::invalid_argument("max_evals must be >= 1");
  if (!(spec.alpha > 0.0) || !(spec.alpha <= spec.beta))
    throw std::invalid_argument("need 0 < alpha <= beta");
  return spec;
}

ExperimentSpec load_experiment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_json(ss.str());
}

const char* const kTraceHeader =
    "experiment,algorithm,dim,q,seed,iteration,evaluations,best_value,"
    "optimality_gap,wall_time_ms";

std::string format_trace_row(const TraceRow& row) {
  std::string out;
  out += row.experiment;
  out += ',';
  out += row.algorithm;
  out += ',';
  out += std::to_string(row.dim);
  out += ',';
  out += fmt_double(row.q);
  out += ',';
  out += std::to_string(row.seed);
  out += ',';
  out += std::to_string(row.iteration);
  out += ',';
  out += std::to_string(row.evaluations);
  out += ',';
  out += fmt_double(row.best_value);
  out += ',';
  if (row.optimality_gap) out += fmt_double(*row.optimality_gap);
  out += ',';
  out += fmt_double(row.wall_time_ms);
  return out;
}

std::vector<TraceRow> trace_rows(const std::string& experiment,
                                 const std::string& algorithm, int dim,
                                 double q, std::uint64_t seed,
                                 const RunTrace& trace, double wall_time_ms) {
  std::vector<TraceRow> rows;
  rows.reserve(trace.records.size());
  for (const TraceRecord& rec : trace.records) {
    TraceRow row;
    row.experiment = experiment;
    row.algorithm = algorithm;
    row.dim = dim;
    row.q = q;
    row.seed = seed;
    row.iteration = rec.iteration;
    row.evaluations = rec.evaluations;
    row.best_value = rec.best_value;
    row.optimality_gap = rec.optimality_gap;
    row.wall_time_ms = wall_time_ms;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

struct AlgoRun {
  std::string algorithm;
  RunTrace trace;
  double wall_time_ms = 0.0;
};

AlgoRun run_algorithm(const std::string& algo, ObjectiveOracle& oracle,
                      const Vec& x0, double alpha, double beta,
                      double q_bound, double diameter, long long max_evals,
                      SeededRng rng) {
  const auto t0 = std::chrono::steady_clock::now();
  AlgoRun out;
  out.algorithm = algo;
  if (algo == "gld-search") {
    GldSearchConfig config;
    config.max_iterations = static_cast<int>(max_evals);
    config.max_radius = diameter;
    config.min_radius = 1e-4 * diameter;
    config.sampler = SamplerKind::Gaussian;
    config.max_evals = max_evals;
    out.trace = gld_search_run(oracle, config, x0, rng);
  } else if (algo == "gld-fast") {
    GldFastConfig config;
    config.max_iterations = static_cast<int>(max_evals);
    config.initial_radius = diameter;
    config.q_bound = q_bound;
    config.sampler = SamplerKind::Gaussian;
    config.max_evals = max_evals;
    out.trace = gld_fast_run(oracle, config, x0, rng);
  } else if (algo == "ars") {
    ArsConfig config;
    config.alpha_hat = alpha;
    config.beta_hat = beta;
    config.max_iterations = static_cast<int>(max_evals / 2);
    config.diameter = diameter;
    config.max_evals = max_evals;
    out.trace = ars_run(oracle, config, x0, rng);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  out.wall_time_ms = elapsed_ms(t0);
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path, const char* header)
      : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    out_ << header << '\n';
  }

  void write_rows(const std::vector<TraceRow>& rows) {
    for (const TraceRow& row : rows) out_ << format_trace_row(row) << '\n';
    out_.flush();  // one flush per completed run
    count_ += static_cast<long long>(rows.size());
  }

  void write_line(const std::string& line) {
    out_ << line << '\n';
    out_.flush();
    ++count_;
  }

  long long count() const { return count_; }

 private:
  std::ofstream out_;
  long long count_ = 0;
};

long long run_quadratic_grid(const ExperimentSpec& spec, CsvWriter& writer,
                             bool with_transform) {
  const double q = spec.beta / spec.alpha;
  const double diameter = std::sqrt(q);
  for (const std::string& algo : spec.algorithms) {
    for (int dim : spec.dims) {
      for (std::uint64_t seed : spec.seeds) {
        const QuadraticSpec quad = build_quadratic(spec.alpha, spec.beta, dim);
        const Vec x0 = standard_start(dim);
        {
          ObjectiveOracle oracle = quad.make_oracle();
          AlgoRun run =
              run_algorithm(algo, oracle, x0, spec.alpha, spec.beta, q,
                            diameter, spec.max_evals, SeededRng(seed));
          writer.write_rows(trace_rows(experiment_name(spec.kind), algo, dim,
                                       q, seed, run.trace, run.wall_time_ms));
        }
        if (with_transform) {
          ObjectiveOracle inner = quad.make_oracle();
          ObjectiveOracle oracle =
              wrap_monotone(inner, MonotoneTransform::NegExpNegSqrt);
          AlgoRun run =
              run_algorithm(algo, oracle, x0, spec.alpha, spec.beta, q,
                            diameter, spec.max_evals, SeededRng(seed));
          writer.write_rows(trace_rows(experiment_name(spec.kind),
                                       algo + "-mono", dim, q, seed, run.trace,
                                       run.wall_time_ms));
        }
      }
    }
  }
  return writer.count();
}

long long run_misestimation(const ExperimentSpec& spec, CsvWriter& writer) {
  const double q = spec.beta / spec.alpha;
  for (int dim : spec.dims) {
    for (std::uint64_t seed : spec.seeds) {
      const QuadraticSpec quad = build_quadratic(spec.alpha, spec.beta, dim);
      const Vec x0 = standard_start(dim);
      // GLD-Fast receives Q*z as its condition number bound.
      {
        ObjectiveOracle oracle = quad.make_oracle();
        const double q_bound = q * spec.z;
        AlgoRun run = run_algorithm("gld-fast", oracle, x0, spec.alpha,
                                    spec.beta, q_bound, std::sqrt(q_bound),
                                    spec.max_evals, SeededRng(seed));
        writer.write_rows(trace_rows(experiment_name(spec.kind), "gld-fast",
                                     dim, q, seed, run.trace,
                                     run.wall_time_ms));
      }
      const std::pair<MisestimationKind, const char*> variants[] = {
          {MisestimationKind::ArsAlpha, "ars-alpha"},
          {MisestimationKind::ArsBeta, "ars-beta"},
          {MisestimationKind::ArsEven, "ars-even"},
      };
      for (const auto& [kind, name] : variants) {
        const auto [a_hat, b_hat] =
            apply_misestimation(spec.alpha, spec.beta, kind, spec.z);
        ObjectiveOracle oracle = quad.make_oracle();
        AlgoRun run =
            run_algorithm("ars", oracle, x0, a_hat, b_hat, b_hat / a_hat,
                          std::sqrt(q), spec.max_evals, SeededRng(seed));
        writer.write_rows(trace_rows(experiment_name(spec.kind), name, dim, q,
                                     seed, run.trace, run.wall_time_ms));
      }
    }
  }
  return writer.count();
}

long long run_low_rank(const ExperimentSpec& spec, CsvWriter& writer) {
  const double q = spec.beta / spec.alpha;
  for (int dim : spec.dims) {
    if (spec.latent_dim >= dim)
      throw std::invalid_argument("latent_dim must be below dim");
    const QuadraticSpec inner =
        build_quadratic(spec.alpha, spec.beta, spec.latent_dim);
    for (std::uint64_t seed : spec.seeds) {
      const LowRankComposite composite =
          build_low_rank(dim, spec.latent_dim, inner, spec.delta, seed);
      const Vec x0 = standard_start(dim);
      const struct {
        const char* name;
        bool low_rank;
      } modes[] = {{"gld-fast-lowrank", true}, {"gld-fast-fullrank", false}};
      for (const auto& mode : modes) {
        ObjectiveOracle oracle = composite.make_oracle();
        GldFastConfig config;
        config.max_iterations = static_cast<int>(spec.max_evals);
        config.initial_radius = std::sqrt(q);
        config.q_bound = q;
        config.sampler = SamplerKind::Gaussian;
        config.max_evals = spec.max_evals;
        config.low_rank_ladder = mode.low_rank;
        const auto t0 = std::chrono::steady_clock::now();
        SeededRng rng(seed);
        RunTrace trace = gld_fast_run(oracle, config, x0, rng);
        writer.write_rows(trace_rows(experiment_name(spec.kind), mode.name,
                                     dim, q, seed, trace, elapsed_ms(t0)));
      }
    }
  }
  return writer.count();
}

long long run_descent_probability(const ExperimentSpec& spec,
                                  CsvWriter& writer) {
  const double q = spec.beta / spec.alpha;
  for (int dim : spec.dims) {
    for (std::uint64_t seed : spec.seeds) {
      const QuadraticSpec quad = build_quadratic(spec.alpha, spec.beta, dim);
      const Vec x0 = standard_start(dim);  // distance 1 from the optimum
      const Vec x_star(dim, 0.0);
      const RadiusLadder ladder = build_ladder_search(1.0, 1.0 / 64.0);
      SeededRng rng(seed);
      for (double rung : ladder.radii) {
        const McEstimate est = descent_probability_mc(
            [&quad](const Vec& p) { return quad.value(p); }, x_star, 0.0, x0,
            rung, SamplerKind::UniformBall, q, spec.samples, rng);
        std::ostringstream line;
        line << experiment_name(spec.kind) << ",dim=" << dim << ',' << dim
             << ',' << fmt_double(q) << ',' << seed << ",0," << est.samples
             << ',' << fmt_double(rung) << ',' << fmt_double(est.value) << ','
             << fmt_double(est.stderr_value);
        writer.write_line(line.str());
      }
    }
  }
  return writer.count();
}

long long run_lower_bound(const ExperimentSpec& spec, CsvWriter& writer) {
  const double q = spec.beta / spec.alpha;
  for (int dim : spec.dims) {
    const double nq = static_cast<double>(dim) * q;
    const double small_rung = std::sqrt(std::log(nq)) / nq;
    const double large_rung = 1.0;
    for (std::uint64_t seed : spec.seeds) {
      SeededRng rng(seed);
      for (double rung : {large_rung, small_rung}) {
        const McEstimate est =
            lower_bound_probe(dim, q, rung, spec.samples, rng);
        std::ostringstream line;
        line << experiment_name(spec.kind) << ",probe," << dim << ','
             << fmt_double(q) << ',' << seed << ",0," << est.samples << ','
             << fmt_double(rung) << ',' << fmt_double(est.value) << ','
             << fmt_double(est.stderr_value);
        writer.write_line(line.str());
      }
    }
  }
  return writer.count();
}

long long run_benchmark_suite(const ExperimentSpec& spec, CsvWriter& writer) {
  // The paper's BBOB runs assume smoothness 10 and strong convexity 0.1.
  const double alpha = 0.1, beta = 10.0;
  const double q = beta / alpha;
  for (BenchmarkKind kind :
       {BenchmarkKind::Rastrigin, BenchmarkKind::BentCigar,
        BenchmarkKind::DifferentPowers, BenchmarkKind::Discus,
        BenchmarkKind::Ellipsoidal, BenchmarkKind::SharpRidge,
        BenchmarkKind::SchaffersF7, BenchmarkKind::Katsuura,
        BenchmarkKind::Weierstrass}) {
    for (const std::string& algo : spec.algorithms) {
      for (int dim : spec.dims) {
        for (std::uint64_t seed : spec.seeds) {
          const BenchmarkFunction fn = build_benchmark(kind, dim);
          ObjectiveOracle oracle = fn.make_oracle();
          const Vec x0 = standard_start(dim);
          AlgoRun run = run_algorithm(algo, oracle, x0, alpha, beta, q, 10.0,
                                      spec.max_evals, SeededRng(seed));
          writer.write_rows(trace_rows(
              experiment_name(spec.kind),
              std::string(benchmark_name(kind)) + "/" + algo, dim, q, seed,
              run.trace, run.wall_time_ms));
        }
      }
    }
  }
  return writer.count();
}

}  // namespace

long long run_experiment(const ExperimentSpec& spec) {
  long long rows = 0;
  switch (spec.kind) {
    case ExperimentKind::GeometryGrid: {
      const auto grid = run_geometry_grid(spec.samples, spec.seeds.front());
      write_geometry_csv(spec.output, grid);
      return static_cast<long long>(grid.size());
    }
    case ExperimentKind::DescentProbability: {
      CsvWriter writer(spec.output,
                       "experiment,algorithm,dim,q,seed,iteration,samples,"
                       "rung,probability,stderr");
      return run_descent_probability(spec, writer);
    }
    case ExperimentKind::LowerBoundProbe: {
      CsvWriter writer(spec.output,
                       "experiment,algorithm,dim,q,seed,iteration,samples,"
                       "rung,probability,stderr");
      return run_lower_bound(spec, writer);
    }
    default:
      break;
  }
  CsvWriter writer(spec.output, kTraceHeader);
  switch (spec.kind) {
    case ExperimentKind::ConvergenceByDim:
      rows = run_quadratic_grid(spec, writer, false);
      break;
    case ExperimentKind::MonotoneTransform:
      rows = run_quadratic_grid(spec, writer, true);
      break;
    case ExperimentKind::ConditionMisestimation:
      rows = run_misestimation(spec, writer);
      break;
    case ExperimentKind::LowRank:
      rows = run_low_rank(spec, writer);
      break;
    case ExperimentKind::BenchmarkSuite:
      rows = run_benchmark_suite(spec, writer);
      break;
    default:
      throw std::logic_error("unhandled experiment kind");
  }
  const auto summary = summarize_traces({spec.output}, spec.target_gap);
  write_summary_csv(spec.output + ".summary.csv", summary);
  return rows;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double quantile_lower(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  const std::size_t idx = static_cast<std::size_t>(
      p * static_cast<double>(values.size() - 1));
  return values[idx];
}

long long median_lower_ll(std::vector<long long> values) {
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace

std::vector<SummaryRow> summarize_traces(const std::vector<std::string>& paths,
                                         double target_gap) {
  struct RunKey {
    std::string experiment, algorithm;
    int dim;
    double q;
    std::uint64_t seed;
    auto operator<=>(const RunKey&) const = default;
  };
  struct RunAgg {
    long long evals_to_target = -1;
    double final_gap = std::nan("");
    long long last_evals = -1;
  };
  std::map<RunKey, RunAgg> runs;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);
    std::string line;
    if (!std::getline(in, line))
      throw std::runtime_error("empty trace file: " + path);
    if (line != kTraceHeader)
      throw std::runtime_error("schema mismatch in " + path +
                               ": header differs at column check");
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto fields = split_csv_line(line);
      if (fields.size() != 10)
        throw std::runtime_error("schema mismatch: wrong column count");
      RunKey key{fields[0], fields[1], std::stoi(fields[2]),
                 std::stod(fields[3]),
                 static_cast<std::uint64_t>(std::stoull(fields[4]))};
      RunAgg& agg = runs[key];
      const long long evals = std::stoll(fields[6]);
      if (!fields[8].empty()) {
        const double gap = std::stod(fields[8]);
        if (gap <= target_gap && agg.evals_to_target < 0)
          agg.evals_to_target = evals;
        if (evals >= agg.last_evals) agg.final_gap = gap;
      }
      agg.last_evals = std::max(agg.last_evals, evals);
    }
  }
  // Collapse seeds into per-cell summaries.
  struct CellKey {
    std::string experiment, algorithm;
    int dim;
    double q;
    auto operator<=>(const CellKey&) const = default;
  };
  std::map<CellKey, std::vector<RunAgg>> cells;
  for (const auto& [key, agg] : runs)
    cells[CellKey{key.experiment, key.algorithm, key.dim, key.q}].push_back(
        agg);
  std::vector<SummaryRow> out;
  for (const auto& [key, aggs] : cells) {
    SummaryRow row;
    row.experiment = key.experiment;
    row.algorithm = key.algorithm;
    row.dim = key.dim;
    row.q = key.q;
    row.runs = static_cast<long long>(aggs.size());
    std::vector<long long> evals;
    std::vector<double> gaps;
    bool all_reached = true;
    for (const RunAgg& agg : aggs) {
      if (agg.evals_to_target < 0)
        all_reached = false;
      else
        evals.push_back(agg.evals_to_target);
      if (std::isfinite(agg.final_gap)) gaps.push_back(agg.final_gap);
    }
    if (all_reached && !evals.empty())
      row.median_evals_to_target = median_lower_ll(evals);
    if (!gaps.empty()) {
      row.final_gap_q25 = quantile_lower(gaps, 0.25);
      row.final_gap_median = quantile_lower(gaps, 0.5);
      row.final_gap_q75 = quantile_lower(gaps, 0.75);
    }
    out.push_back(std::move(row));
  }
  return out;
}

void write_summary_csv(const std::string& path,
                       const std::vector<SummaryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "experiment,algorithm,dim,q,runs,median_evals_to_target,"
         "final_gap_q25,final_gap_median,final_gap_q75\n";
  for (const SummaryRow& row : rows) {
    out << row.experiment << ',' << row.algorithm << ',' << row.dim << ','
        << fmt_double(row.q) << ',' << row.runs << ','
        << row.median_evals_to_target << ',' << fmt_double(row.final_gap_q25)
        << ',' << fmt_double(row.final_gap_median) << ','
        << fmt_double(row.final_gap_q75) << '\n';
  }
}

std::vector<GeometryGridRow> run_geometry_grid(long long samples,
                                               std::uint64_t seed) {
  std::vector<GeometryGridRow> rows;
  SeededRng root(seed);
  std::uint64_t run_index = 0;
  for (int n : {1, 2, 5, 10, 50}) {
    const double ell = 1.0;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    // Four hypothesis-satisfying (r1, r2) pairs per dimension.
    const double r1_values[] = {ell / (2.0 * sqrt_n), ell / sqrt_n};
    const double r2_values[] = {ell - ell / (4.0 * n), ell * 1.05};
    for (double r1 : r1_values) {
      for (double r2 : r2_values) {
        BallPair pair{r1, r2, ell, n};
        GeometryGridRow row;
        row.dim = n;
        row.r1 = r1;
        row.r2 = r2;
        row.ell = ell;
        const CapFraction cap = cap_fraction_exact(pair);
        row.exact_fraction = cap.fraction;
        row.exact_degenerate = cap.degenerate;
        SeededRng rng = root.split(run_index++);
        const McEstimate mc = intersection_fraction_mc(pair, samples, rng);
        row.mc_fraction = mc.value;
        row.mc_stderr = mc.stderr_value;
        row.meets_eighth = mc.value >= 0.125 - 4.0 * mc.stderr_value;
        row.meets_quarter = mc.value >= 0.25 - 4.0 * mc.stderr_value;
        SeededRng cap_rng = root.split(run_index++);
        const McEstimate cap_mc = cap_fraction_mc(pair, samples, cap_rng);
        row.cap_mc_fraction = cap_mc.value;
        row.cap_mc_stderr = cap_mc.stderr_value;
        const double tol = std::max(4.0 * cap_mc.stderr_value, 1e-12);
        row.oracle_agrees = std::abs(cap.fraction - cap_mc.value) <= tol;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_geometry_csv(const std::string& path,
                        const std::vector<GeometryGridRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "dim,r1,r2,ell,exact_fraction,exact_degenerate,cap_mc_fraction,"
         "cap_mc_stderr,mc_fraction,mc_stderr,meets_eighth,meets_quarter,"
         "oracle_agrees\n";
  for (const GeometryGridRow& row : rows) {
    out << row.dim << ',' << fmt_double(row.r1) << ',' << fmt_double(row.r2)
        << ',' << fmt_double(row.ell) << ',' << fmt_double(row.exact_fraction)
        << ',' << (row.exact_degenerate ? 1 : 0) << ','
        << fmt_double(row.cap_mc_fraction) << ','
        << fmt_double(row.cap_mc_stderr) << ',' << fmt_double(row.mc_fraction)
        << ',' << fmt_double(row.mc_stderr) << ','
        << (row.meets_eighth ? 1 : 0) << ',' << (row.meets_quarter ? 1 : 0)
        << ',' << (row.oracle_agrees ? 1 : 0) << '\n';
  }
}

}  // namespace gld
