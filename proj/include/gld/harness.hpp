#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gld/gld.hpp"
#include "gld/objectives.hpp"

namespace gld {

enum class ExperimentKind {
  ConvergenceByDim,
  MonotoneTransform,
  ConditionMisestimation,
  LowRank,
  DescentProbability,
  GeometryGrid,
  LowerBoundProbe,
  BenchmarkSuite,
};

const char* experiment_name(ExperimentKind kind);
std::optional<ExperimentKind> experiment_from_name(const std::string& name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::ConvergenceByDim;
  std::vector<int> dims{10, 20, 50, 100};
  double alpha = 1.0;
  double beta = 8.0;
  std::vector<std::string> algorithms{"gld-search", "gld-fast", "ars"};
  std::vector<std::uint64_t> seeds{1};
  long long max_evals = 100000;
  double target_gap = 1e-3;
  std::string output = "trace.csv";
  MonotoneTransform transform = MonotoneTransform::Identity;
  double z = 1.0;          // misestimation factor
  int latent_dim = 5;      // low-rank experiments
  double delta = 0.0;      // low-rank perturbation
  long long samples = 100000;  // MC experiments
};

ExperimentSpec parse_experiment_json(const std::string& json_text);
ExperimentSpec load_experiment_file(const std::string& path);

/// One CSV row of a convergence trace. Column order is fixed:
/// experiment,algorithm,dim,q,seed,iteration,evaluations,best_value,
/// optimality_gap,wall_time_ms. The gap column is empty when no optimum is
/// known; wall_time_ms is excluded from determinism guarantees.
struct TraceRow {
  std::string experiment;
  std::string algorithm;
  int dim = 0;
  double q = 1.0;
  std::uint64_t seed = 0;
  int iteration = 0;
  long long evaluations = 0;
  double best_value = 0.0;
  std::optional<double> optimality_gap;
  double wall_time_ms = 0.0;
};

extern const char* const kTraceHeader;

std::string format_trace_row(const TraceRow& row);
std::vector<TraceRow> trace_rows(const std::string& experiment,
                                 const std::string& algorithm, int dim,
                                 double q, std::uint64_t seed,
                                 const RunTrace& trace, double wall_time_ms);

/// Runs the experiment grid and writes the trace CSV plus a
/// "<output>.summary.csv" aggregate. Returns the number of rows written.
long long run_experiment(const ExperimentSpec& spec);

struct SummaryRow {
  std::string experiment;
  std::string algorithm;
  int dim = 0;
  double q = 1.0;
  long long runs = 0;
  /// Lower median of evaluations-to-target over runs; -1 when some run
  /// never reached the target.
  long long median_evals_to_target = -1;
  double final_gap_q25 = 0.0;
  double final_gap_median = 0.0;
  double final_gap_q75 = 0.0;
};

/// Aggregates trace CSVs sharing the TraceRow schema. Medians use the
/// lower-median tie rule.
std::vector<SummaryRow> summarize_traces(const std::vector<std::string>& paths,
                                         double target_gap);
void write_summary_csv(const std::string& path,
                       const std::vector<SummaryRow>& rows);

/// Geometry grid verification report (Lemma-style ball pairs).
struct GeometryGridRow {
  int dim = 0;
  double r1 = 0.0, r2 = 0.0, ell = 0.0;
  double exact_fraction = 0.0;  // B1's own cap, closed form
  bool exact_degenerate = false;
  double cap_mc_fraction = 0.0;  // B1's own cap, Monte Carlo
  double cap_mc_stderr = 0.0;
  double mc_fraction = 0.0;  // full intersection fraction of B1
  double mc_stderr = 0.0;
  bool meets_eighth = false;   // intersection >= 0.125 - 4*stderr
  bool meets_quarter = false;  // intersection >= 0.25 - 4*stderr
  bool oracle_agrees = false;  // |exact - cap_mc| <= 4*cap_mc_stderr
};

std::vector<GeometryGridRow> run_geometry_grid(long long samples,
                                               std::uint64_t seed);
void write_geometry_csv(const std::string& path,
                        const std::vector<GeometryGridRow>& rows);

}  // namespace gld
