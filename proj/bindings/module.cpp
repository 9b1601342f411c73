#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <vector>

#include "aegis/attrition.hpp"
#include "aegis/dynamics.hpp"
#include "aegis/engines.hpp"
#include "aegis/json_io.hpp"
#include "aegis/montecarlo.hpp"
#include "aegis/optimizer.hpp"
#include "aegis/scenario.hpp"

namespace py = pybind11;
using namespace aegis;

namespace {

std::array<double, 3> to_array(const Vec3& v) { return {v.x, v.y, v.z}; }

std::vector<std::array<double, 3>> to_arrays(const std::vector<Vec3>& v) {
    std::vector<std::array<double, 3>> out;
    out.reserve(v.size());
    for (const Vec3& p : v) out.push_back(to_array(p));
    return out;
}

EngineKind parse_engine(const std::string& name, std::uint64_t seed) {
    if (name == "p0") return EngineKind::p0(seed);
    if (name == "p1") return EngineKind::p1();
    if (name == "p2") return EngineKind::p2();
    if (name == "p3") return EngineKind::p3();
    throw std::invalid_argument("unknown engine: " + name + " (expected p0|p1|p2|p3)");
}

ValidatedConfig config_from_json_str(const std::string& text) {
    return validate(config_from_json(nlohmann::json::parse(text)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Swarm engagement simulation, attrition models, and defender trajectory optimization";

    py::class_<ValidatedConfig>(m, "ScenarioConfig")
        .def_property_readonly("n_attackers", [](const ValidatedConfig& c) { return c->n_attackers; })
        .def_property_readonly("n_defenders", [](const ValidatedConfig& c) { return c->n_defenders; })
        .def_property_readonly("dt", [](const ValidatedConfig& c) { return c->dt; })
        .def_property_readonly("n_steps", [](const ValidatedConfig& c) { return c->n_steps; })
        .def_property_readonly("horizon", [](const ValidatedConfig& c) { return c->horizon(); })
        .def_property_readonly("threshold", [](const ValidatedConfig& c) { return c->threshold; })
        .def_property_readonly("bernstein_degree",
                               [](const ValidatedConfig& c) { return c->bernstein_degree; })
        .def("to_json", [](const ValidatedConfig& c) { return config_to_json(c.get()).dump(2); })
        .def("__repr__", [](const ValidatedConfig& c) {
            return "<ScenarioConfig N=" + std::to_string(c->n_attackers) +
                   " M=" + std::to_string(c->n_defenders) + ">";
        });

    m.def("load_config", &load_config_file, py::arg("path"),
          "Load and validate a scenario config JSON file");
    m.def("config_from_json", &config_from_json_str, py::arg("text"),
          "Validate a scenario config from a JSON string");

    py::class_<TrajectoryParams>(m, "TrajectoryParams")
        .def_property_readonly("degree", [](const TrajectoryParams& p) { return p.degree; })
        .def_property_readonly("horizon", [](const TrajectoryParams& p) { return p.horizon; })
        .def_property_readonly("n_defenders",
                               [](const TrajectoryParams& p) { return p.n_defenders(); })
        .def("position",
             [](const TrajectoryParams& p, int defender, double t) {
                 return to_array(bernstein_position(p, defender, t));
             })
        .def("velocity",
             [](const TrajectoryParams& p, int defender, double t) {
                 return to_array(bernstein_velocity(p, defender, t));
             })
        .def("acceleration",
             [](const TrajectoryParams& p, int defender, double t) {
                 return to_array(bernstein_acceleration(p, defender, t));
             })
        .def("save", [](const TrajectoryParams& p, const std::string& path) {
            save_trajectories_file(p, path);
        });

    m.def("load_trajectories", &load_trajectories_file, py::arg("path"));
    m.def("baseline_stationary", &baseline_stationary, py::arg("config"));

    py::class_<SwarmState>(m, "SwarmState")
        .def_property_readonly("time", [](const SwarmState& s) { return s.time; })
        .def_property_readonly("attacker_positions",
                               [](const SwarmState& s) { return to_arrays(s.attacker_pos); })
        .def_property_readonly("defender_positions",
                               [](const SwarmState& s) { return to_arrays(s.defender_pos); })
        .def_property_readonly("hvu_position", [](const SwarmState& s) { return to_array(s.hvu_pos); });

    m.def(
        "initial_state",
        [](const ValidatedConfig& cfg, std::optional<std::uint64_t> seed) {
            return seed ? initial_state(cfg, *seed) : initial_state(cfg);
        },
        py::arg("config"), py::arg("seed") = py::none());

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("times", &SimResult::times)
        .def_readonly("attacker_curve", &SimResult::attacker_curve)
        .def_readonly("defender_curve", &SimResult::defender_curve)
        .def_readonly("hvu_curve", &SimResult::hvu_curve)
        .def_readonly("terminal_cost", &SimResult::terminal_cost)
        .def_readonly("hvu_destroyed", &SimResult::hvu_destroyed)
        .def_readonly("step_of_destruction", &SimResult::step_of_destruction)
        .def_readonly("rng_draws", &SimResult::rng_draws);

    m.def(
        "simulate",
        [](const ValidatedConfig& cfg, const TrajectoryParams& traj, const std::string& engine,
           std::uint64_t seed, int stride) {
            RunOptions opts;
            opts.snapshot_stride = stride;
            return run(cfg, traj, parse_engine(engine, seed), opts);
        },
        py::arg("config"), py::arg("trajectories"), py::arg("engine"), py::arg("seed") = 0,
        py::arg("stride") = 0);

    py::class_<EnsembleSummary>(m, "EnsembleSummary")
        .def_readonly("runs", &EnsembleSummary::runs)
        .def_readonly("hvu_destruction_frequency", &EnsembleSummary::hvu_destruction_frequency)
        .def_readonly("hvu_destruction_se", &EnsembleSummary::hvu_destruction_se)
        .def_readonly("mean_attacker_survival", &EnsembleSummary::mean_attacker_survival)
        .def_readonly("mean_defender_survival", &EnsembleSummary::mean_defender_survival)
        .def_readonly("mean_hvu_survival", &EnsembleSummary::mean_hvu_survival);

    m.def("run_ensemble", &run_ensemble, py::arg("config"), py::arg("trajectories"),
          py::arg("runs"), py::arg("master_seed"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());

    py::class_<EngineComparison>(m, "EngineComparison")
        .def_readonly("attacker_curve", &EngineComparison::attacker_curve)
        .def_readonly("defender_curve", &EngineComparison::defender_curve)
        .def_readonly("hvu_curve", &EngineComparison::hvu_curve)
        .def_readonly("terminal_hvu_survival", &EngineComparison::terminal_hvu_survival)
        .def_readonly("delta_terminal", &EngineComparison::delta_terminal)
        .def_readonly("hvu_linf", &EngineComparison::hvu_linf)
        .def_readonly("attacker_linf", &EngineComparison::attacker_linf)
        .def_readonly("defender_linf", &EngineComparison::defender_linf);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("runs", &ComparisonReport::runs)
        .def_readonly("p0", &ComparisonReport::p0)
        .def_readonly("p1", &ComparisonReport::p1)
        .def_readonly("p2", &ComparisonReport::p2)
        .def_readonly("p3", &ComparisonReport::p3);

    m.def("compare_engines", &compare_engines, py::arg("config"), py::arg("trajectories"),
          py::arg("runs"), py::arg("master_seed"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());

    py::class_<OptimizationResult>(m, "OptimizationResult")
        .def_readonly("best_params", &OptimizationResult::best_params)
        .def_readonly("best_cost", &OptimizationResult::best_cost)
        .def_readonly("history", &OptimizationResult::history)
        .def_readonly("evaluations", &OptimizationResult::evaluations)
        .def_readonly("feasible", &OptimizationResult::feasible);

    m.def(
        "optimize",
        [](const ValidatedConfig& cfg, const std::string& engine, int budget, std::uint64_t seed,
           double penalty_weight) {
            ObjectiveSpec spec;
            spec.engine = parse_engine(engine, 0);
            spec.penalty_weight = penalty_weight;
            return optimize(spec, cfg, budget, seed);
        },
        py::arg("config"), py::arg("engine"), py::arg("budget"), py::arg("seed"),
        py::arg("penalty_weight") = 10.0, py::call_guard<py::gil_scoped_release>());

    m.def(
        "objective",
        [](const TrajectoryParams& params, const ValidatedConfig& cfg, const std::string& engine,
           double penalty_weight) {
            ObjectiveSpec spec;
            spec.engine = parse_engine(engine, 0);
            spec.penalty_weight = penalty_weight;
            return objective(params, spec, cfg);
        },
        py::arg("trajectories"), py::arg("config"), py::arg("engine"),
        py::arg("penalty_weight") = 10.0);

    m.def("damage_kernel", &damage_kernel, py::arg("sq_dist"), py::arg("sigma"));

    m.attr("__version__") = "0.1.0";
}
