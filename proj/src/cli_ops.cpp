#include "aegis/cli_ops.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "aegis/json_io.hpp"
#include "aegis/montecarlo.hpp"
#include "aegis/optimizer.hpp"

namespace aegis {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Shortest round-trip decimal form; keeps CSV exports byte-reproducible.
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

void write_json_file(const fs::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

// One-line provenance comment embedded at the top of every CSV.
std::string provenance_line(const json& summary) {
    json p = summary;
    return "# provenance: " + p.dump();
}

struct LoadedInputs {
    ValidatedConfig config;
    TrajectoryParams trajectories;
    std::string trajectories_label;
};

LoadedInputs load_inputs(const RunManifest& m) {
    ValidatedConfig cfg = load_config_file(m.config_path);
    if (m.source == RunManifest::TrajectorySource::Baseline) {
        TrajectoryParams traj = baseline_stationary(cfg);
        return {std::move(cfg), std::move(traj), "baseline"};
    }
    TrajectoryParams traj = load_trajectories_file(m.trajectories_path);
    return {std::move(cfg), std::move(traj), m.trajectories_path};
}

json base_summary(const char* command, const RunManifest& m, const ValidatedConfig& cfg,
                  const std::string& trajectories_label) {
    return json{
        {"command", command},
        {"engine", m.engine.name()},
        {"seed", m.seed},
        {"trajectories", trajectories_label},
        {"config", config_to_json(cfg.get())},
    };
}

}  // namespace

int cmd_simulate(const RunManifest& m) {
    LoadedInputs in = load_inputs(m);
    const ScenarioConfig& c = in.config.get();

    RunOptions opts;
    opts.snapshot_stride = m.snapshot_stride;
    const SimResult res = run(in.config, in.trajectories, m.engine, opts);

    fs::create_directories(m.out_dir);

    json summary = base_summary("simulate", m, in.config, in.trajectories_label);
    summary["terminal_cost"] = res.terminal_cost;
    summary["hvu_destroyed"] = res.hvu_destroyed;
    summary["step_of_destruction"] =
        res.step_of_destruction ? json(*res.step_of_destruction) : json(nullptr);
    summary["n_snapshots"] = res.snapshot_steps.size();
    summary["rng_draws"] = res.rng_draws;
    write_json_file(fs::path(m.out_dir) / "summary.json", summary);

    auto csv = open_out(fs::path(m.out_dir) / "states.csv");
    csv << provenance_line(summary) << '\n';
    csv << "time";
    for (int i = 0; i < c.n_attackers; ++i)
        csv << ",att" << i << "_x,att" << i << "_y,att" << i << "_z";
    for (int k = 0; k < c.n_defenders; ++k)
        csv << ",def" << k << "_x,def" << k << "_y,def" << k << "_z";
    csv << ",q_hvu";
    for (int i = 0; i < c.n_attackers; ++i) csv << ",q_att" << i;
    for (int k = 0; k < c.n_defenders; ++k) csv << ",q_def" << k;
    csv << ",alive_hvu";
    for (int i = 0; i < c.n_attackers; ++i) csv << ",alive_att" << i;
    for (int k = 0; k < c.n_defenders; ++k) csv << ",alive_def" << k;
    csv << '\n';

    const bool masked = !res.alive_sets.empty();
    for (std::size_t s = 0; s < res.snapshot_steps.size(); ++s) {
        const SwarmState& st = res.states[s];
        const SurvivalVector& q = res.survival[s];
        const int step = res.snapshot_steps[s];
        csv << fmt(st.time);
        for (const Vec3& p : st.attacker_pos)
            csv << ',' << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(p.z);
        for (const Vec3& p : st.defender_pos)
            csv << ',' << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(p.z);
        csv << ',' << fmt(q.hvu);
        for (double v : q.attackers) csv << ',' << fmt(v);
        for (double v : q.defenders) csv << ',' << fmt(v);
        const bool hvu_alive =
            !res.hvu_destroyed || !res.step_of_destruction || step < *res.step_of_destruction;
        csv << ',' << (hvu_alive ? 1 : 0);
        if (masked) {
            const IndexSet& a = res.alive_sets[s];
            for (int i = 0; i < c.n_attackers; ++i) csv << ',' << (a.attacker_alive(i) ? 1 : 0);
            for (int k = 0; k < c.n_defenders; ++k) csv << ',' << (a.defender_alive(k) ? 1 : 0);
        } else {
            for (int i = 0; i < c.n_attackers + c.n_defenders; ++i) csv << ",1";
        }
        csv << '\n';
    }
    return 0;
}

int cmd_optimize(const RunManifest& m) {
    if (m.engine.is_stochastic())
        throw std::invalid_argument("optimize requires a smooth engine (p1/p2/p3)");
    ValidatedConfig cfg = load_config_file(m.config_path);

    ObjectiveSpec spec;
    spec.engine = m.engine;
    spec.penalty_weight = m.penalty_weight;

    const OptimizationResult res = optimize(spec, cfg, m.budget, m.seed);
    const double baseline_cost = objective(baseline_stationary(cfg), spec, cfg);

    fs::create_directories(m.out_dir);
    save_trajectories_file(res.best_params, (fs::path(m.out_dir) / "trajectories.json").string());

    json summary = base_summary("optimize", m, cfg, "optimized");
    summary["budget"] = m.budget;
    summary["penalty_weight"] = m.penalty_weight;
    summary["best_cost"] = res.best_cost;
    summary["baseline_cost"] = baseline_cost;
    summary["evaluations"] = res.evaluations;
    summary["feasible"] = res.feasible;
    write_json_file(fs::path(m.out_dir) / "summary.json", summary);

    auto csv = open_out(fs::path(m.out_dir) / "history.csv");
    csv << provenance_line(summary) << '\n';
    csv << "evaluation,best_cost\n";
    for (const auto& [eval, cost] : res.history) csv << eval << ',' << fmt(cost) << '\n';
    return 0;
}

int cmd_montecarlo(const RunManifest& m) {
    LoadedInputs in = load_inputs(m);

    const EnsembleSummary ens =
        run_ensemble(in.config, in.trajectories, m.runs, m.seed, m.threads);

    fs::create_directories(m.out_dir);
    json summary = base_summary("montecarlo", m, in.config, in.trajectories_label);
    summary["engine"] = "p0";
    summary["runs"] = ens.runs;
    summary["hvu_destruction_frequency"] = ens.hvu_destruction_frequency;
    summary["hvu_destruction_se"] = ens.hvu_destruction_se;
    write_json_file(fs::path(m.out_dir) / "summary.json", summary);

    auto csv = open_out(fs::path(m.out_dir) / "curves.csv");
    csv << provenance_line(summary) << '\n';
    csv << "time,mean_attacker_survival,mean_defender_survival,mean_hvu_survival\n";
    const double dt = in.config->dt;
    for (std::size_t k = 0; k < ens.mean_hvu_survival.size(); ++k) {
        csv << fmt(k * dt) << ',' << fmt(ens.mean_attacker_survival[k]) << ','
            << fmt(ens.mean_defender_survival[k]) << ',' << fmt(ens.mean_hvu_survival[k]) << '\n';
    }
    return 0;
}

int cmd_compare(const RunManifest& m) {
    LoadedInputs in = load_inputs(m);

    const ComparisonReport rep =
        compare_engines(in.config, in.trajectories, m.runs, m.seed, m.threads);

    fs::create_directories(m.out_dir);
    auto engine_json = [](const EngineComparison& e) {
        return json{
            {"terminal_hvu_survival", e.terminal_hvu_survival},
            {"delta_terminal", e.delta_terminal},
            {"hvu_linf", e.hvu_linf},
            {"attacker_linf", e.attacker_linf},
            {"defender_linf", e.defender_linf},
        };
    };
    json report = base_summary("compare", m, in.config, in.trajectories_label);
    report["runs"] = rep.runs;
    const double se = rep.p0.hvu_destruction_se;
    const double p0_survival = rep.p0.mean_hvu_survival.back();
    report["p0"] = json{
        {"hvu_destruction_frequency", rep.p0.hvu_destruction_frequency},
        {"hvu_destruction_se", se},
        {"terminal_hvu_survival", p0_survival},
        {"terminal_hvu_survival_ci95", {p0_survival - 1.96 * se, p0_survival + 1.96 * se}},
    };
    report["p1"] = engine_json(rep.p1);
    report["p2"] = engine_json(rep.p2);
    report["p3"] = engine_json(rep.p3);
    write_json_file(fs::path(m.out_dir) / "report.json", report);

    auto csv = open_out(fs::path(m.out_dir) / "curves.csv");
    csv << provenance_line(report) << '\n';
    csv << "time,p0_attackers,p0_defenders,p0_hvu"
           ",p1_attackers,p1_defenders,p1_hvu"
           ",p2_attackers,p2_defenders,p2_hvu"
           ",p3_attackers,p3_defenders,p3_hvu\n";
    const double dt = in.config->dt;
    const std::size_t len = rep.p0.mean_hvu_survival.size();
    for (std::size_t k = 0; k < len; ++k) {
        csv << fmt(k * dt);
        csv << ',' << fmt(rep.p0.mean_attacker_survival[k]) << ','
            << fmt(rep.p0.mean_defender_survival[k]) << ',' << fmt(rep.p0.mean_hvu_survival[k]);
        for (const EngineComparison* e : {&rep.p1, &rep.p2, &rep.p3})
            csv << ',' << fmt(e->attacker_curve[k]) << ',' << fmt(e->defender_curve[k]) << ','
                << fmt(e->hvu_curve[k]);
        csv << '\n';
    }
    return 0;
}

}  // namespace aegis
