#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gld/baselines.hpp"
#include "gld/geometry.hpp"
#include "gld/gld.hpp"
#include "gld/harness.hpp"
#include "gld/objectives.hpp"

namespace py = pybind11;
using namespace gld;

PYBIND11_MODULE(_core, m) {
  m.doc() = "GradientLess Descent optimizers, samplers and geometry probes";

  py::class_<SeededRng>(m, "SeededRng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &SeededRng::next_u64)
      .def("next_double", &SeededRng::next_double)
      .def("next_gaussian", &SeededRng::next_gaussian)
      .def("split", &SeededRng::split, py::arg("index"));

  py::class_<Optimum>(m, "Optimum")
      .def_readonly("point", &Optimum::point)
      .def_readonly("value", &Optimum::value);

  py::class_<ObjectiveOracle>(m, "ObjectiveOracle")
      .def(py::init<int, ObjectiveOracle::Fn>(), py::arg("dim"),
           py::arg("fn"))
      .def("evaluate", &ObjectiveOracle::evaluate)
      .def_property_readonly("dim", &ObjectiveOracle::dim)
      .def_property_readonly("eval_count", &ObjectiveOracle::eval_count)
      .def("reset_count", &ObjectiveOracle::reset_count);

  py::enum_<MonotoneTransform>(m, "MonotoneTransform")
      .value("Identity", MonotoneTransform::Identity)
      .value("NegExpNegSqrt", MonotoneTransform::NegExpNegSqrt);

  m.def("wrap_monotone", &wrap_monotone, py::arg("inner"),
        py::arg("transform"));

  py::class_<QuadraticSpec>(m, "QuadraticSpec")
      .def_readonly("alpha", &QuadraticSpec::alpha)
      .def_readonly("beta", &QuadraticSpec::beta)
      .def_readonly("dim", &QuadraticSpec::dim)
      .def_readonly("diag", &QuadraticSpec::diag)
      .def("value", &QuadraticSpec::value)
      .def("condition_number", &QuadraticSpec::condition_number)
      .def("make_oracle", &QuadraticSpec::make_oracle);

  m.def("build_quadratic", &build_quadratic, py::arg("alpha"),
        py::arg("beta"), py::arg("dim"));

  py::class_<LowRankComposite>(m, "LowRankComposite")
      .def_readonly("dim", &LowRankComposite::dim)
      .def_readonly("latent_dim", &LowRankComposite::latent_dim)
      .def_readonly("basis", &LowRankComposite::basis)
      .def_readonly("delta", &LowRankComposite::delta)
      .def("value", &LowRankComposite::value)
      .def("projected_value", &LowRankComposite::projected_value)
      .def("make_oracle", &LowRankComposite::make_oracle);

  m.def("build_low_rank", &build_low_rank, py::arg("dim"),
        py::arg("latent_dim"), py::arg("inner"), py::arg("delta"),
        py::arg("seed"));

  py::enum_<BenchmarkKind>(m, "BenchmarkKind")
      .value("Rastrigin", BenchmarkKind::Rastrigin)
      .value("BentCigar", BenchmarkKind::BentCigar)
      .value("DifferentPowers", BenchmarkKind::DifferentPowers)
      .value("Discus", BenchmarkKind::Discus)
      .value("Ellipsoidal", BenchmarkKind::Ellipsoidal)
      .value("SharpRidge", BenchmarkKind::SharpRidge)
      .value("SchaffersF7", BenchmarkKind::SchaffersF7)
      .value("Katsuura", BenchmarkKind::Katsuura)
      .value("Weierstrass", BenchmarkKind::Weierstrass);

  py::class_<BenchmarkFunction>(m, "BenchmarkFunction")
      .def_readonly("kind", &BenchmarkFunction::kind)
      .def_readonly("dim", &BenchmarkFunction::dim)
      .def("value", &BenchmarkFunction::value)
      .def("make_oracle", &BenchmarkFunction::make_oracle);

  m.def("build_benchmark", &build_benchmark, py::arg("kind"), py::arg("dim"),
        py::arg("optimum_shift") = Vec{});

  py::enum_<SamplerKind>(m, "SamplerKind")
      .value("UniformBall", SamplerKind::UniformBall)
      .value("Gaussian", SamplerKind::Gaussian);

  m.def("sample_uniform_ball", &sample_uniform_ball, py::arg("rng"),
        py::arg("center"), py::arg("radius"));
  m.def("sample_gaussian", &sample_gaussian, py::arg("rng"),
        py::arg("center"), py::arg("radius"), py::arg("effective_dim"));

  py::class_<RadiusLadder>(m, "RadiusLadder")
      .def_readonly("radii", &RadiusLadder::radii)
      .def_readonly("depth", &RadiusLadder::depth);

  m.def("build_ladder_search", &build_ladder_search, py::arg("max_radius"),
        py::arg("min_radius"));
  m.def("build_ladder_fast", &build_ladder_fast, py::arg("radius"),
        py::arg("q_bound"));

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("iteration", &TraceRecord::iteration)
      .def_readonly("evaluations", &TraceRecord::evaluations)
      .def_readonly("best_value", &TraceRecord::best_value)
      .def_readonly("optimality_gap", &TraceRecord::optimality_gap)
      .def_readonly("accepted_radius", &TraceRecord::accepted_radius);

  py::class_<RunTrace>(m, "RunTrace")
      .def_readonly("records", &RunTrace::records)
      .def_readonly("final_point", &RunTrace::final_point)
      .def_readonly("final_value", &RunTrace::final_value)
      .def_readonly("truncated", &RunTrace::truncated)
      .def_readonly("iterates", &RunTrace::iterates);

  py::class_<GldSearchConfig>(m, "GldSearchConfig")
      .def(py::init<>())
      .def_readwrite("max_iterations", &GldSearchConfig::max_iterations)
      .def_readwrite("max_radius", &GldSearchConfig::max_radius)
      .def_readwrite("min_radius", &GldSearchConfig::min_radius)
      .def_readwrite("sampler", &GldSearchConfig::sampler)
      .def_readwrite("effective_dim", &GldSearchConfig::effective_dim)
      .def_readwrite("max_evals", &GldSearchConfig::max_evals)
      .def_readwrite("low_rank_ladder", &GldSearchConfig::low_rank_ladder)
      .def_readwrite("record_iterates", &GldSearchConfig::record_iterates);

  py::class_<GldFastConfig>(m, "GldFastConfig")
      .def(py::init<>())
      .def_readwrite("max_iterations", &GldFastConfig::max_iterations)
      .def_readwrite("initial_radius", &GldFastConfig::initial_radius)
      .def_readwrite("q_bound", &GldFastConfig::q_bound)
      .def_readwrite("halving_period", &GldFastConfig::halving_period)
      .def_readwrite("sampler", &GldFastConfig::sampler)
      .def_readwrite("effective_dim", &GldFastConfig::effective_dim)
      .def_readwrite("max_evals", &GldFastConfig::max_evals)
      .def_readwrite("low_rank_ladder", &GldFastConfig::low_rank_ladder)
      .def_readwrite("record_iterates", &GldFastConfig::record_iterates);

  m.def("gld_search_run", &gld_search_run, py::arg("oracle"),
        py::arg("config"), py::arg("x0"), py::arg("rng"));
  m.def("gld_fast_run", &gld_fast_run, py::arg("oracle"), py::arg("config"),
        py::arg("x0"), py::arg("rng"));
  m.def("default_halving_period", &default_halving_period, py::arg("n"),
        py::arg("q_bound"));

  py::class_<ArsConfig>(m, "ArsConfig")
      .def(py::init<>())
      .def_readwrite("alpha_hat", &ArsConfig::alpha_hat)
      .def_readwrite("beta_hat", &ArsConfig::beta_hat)
      .def_readwrite("mu", &ArsConfig::mu)
      .def_readwrite("max_iterations", &ArsConfig::max_iterations)
      .def_readwrite("diameter", &ArsConfig::diameter)
      .def_readwrite("max_evals", &ArsConfig::max_evals)
      .def_readwrite("record_iterates", &ArsConfig::record_iterates);

  m.def("ars_run", &ars_run, py::arg("oracle"), py::arg("config"),
        py::arg("x0"), py::arg("rng"));

  py::enum_<MisestimationKind>(m, "MisestimationKind")
      .value("ArsAlpha", MisestimationKind::ArsAlpha)
      .value("ArsBeta", MisestimationKind::ArsBeta)
      .value("ArsEven", MisestimationKind::ArsEven);

  m.def("apply_misestimation", &apply_misestimation, py::arg("alpha"),
        py::arg("beta"), py::arg("kind"), py::arg("z"));

  m.def("regularized_incomplete_beta", &regularized_incomplete_beta,
        py::arg("x"), py::arg("a"), py::arg("b"));

  py::class_<BallPair>(m, "BallPair")
      .def(py::init([](double r1, double r2, double ell, int dim) {
             return BallPair{r1, r2, ell, dim};
           }),
           py::arg("r1"), py::arg("r2"), py::arg("ell"), py::arg("dim"))
      .def_readonly("r1", &BallPair::r1)
      .def_readonly("r2", &BallPair::r2)
      .def_readonly("ell", &BallPair::ell)
      .def_readonly("dim", &BallPair::dim)
      .def("intersects", &BallPair::intersects)
      .def("cap_offset", &BallPair::cap_offset);

  py::class_<CapFraction>(m, "CapFraction")
      .def_readonly("fraction", &CapFraction::fraction)
      .def_readonly("degenerate", &CapFraction::degenerate);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("value", &McEstimate::value)
      .def_readonly("stderr", &McEstimate::stderr_value)
      .def_readonly("samples", &McEstimate::samples)
      .def_readonly("hypothesis_ok", &McEstimate::hypothesis_ok);

  m.def("cap_fraction_exact", &cap_fraction_exact, py::arg("pair"));
  m.def("intersection_fraction_mc", &intersection_fraction_mc,
        py::arg("pair"), py::arg("samples"), py::arg("rng"));
  m.def("cap_fraction_mc", &cap_fraction_mc, py::arg("pair"),
        py::arg("samples"), py::arg("rng"));
  m.def("gaussian_intersection_mc", &gaussian_intersection_mc,
        py::arg("pair"), py::arg("samples"), py::arg("rng"),
        py::arg("hypothesis_slack") = 1.0);
  m.def("descent_probability_mc", &descent_probability_mc, py::arg("f"),
        py::arg("x_star"), py::arg("f_star"), py::arg("x"), py::arg("rung"),
        py::arg("sampler"), py::arg("q"), py::arg("samples"), py::arg("rng"));
  m.def("lower_bound_probe", &lower_bound_probe, py::arg("n"), py::arg("q"),
        py::arg("rung"), py::arg("samples"), py::arg("rng"));
}
