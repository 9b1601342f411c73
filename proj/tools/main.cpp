#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "aegis/cli_ops.hpp"

namespace {

aegis::EngineKind make_engine(const std::string& name, std::uint64_t seed) {
    if (name == "p0") return aegis::EngineKind::p0(seed);
    if (name == "p1") return aegis::EngineKind::p1();
    if (name == "p2") return aegis::EngineKind::p2();
    return aegis::EngineKind::p3();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swarm-vs-swarm engagement simulation and defender trajectory optimization"};
    app.require_subcommand(1);

    aegis::RunManifest m;
    std::string engine = "p1";

    auto* sim = app.add_subcommand("simulate", "Run one engagement and export per-step state");
    sim->add_option("--config", m.config_path, "Scenario config JSON")->required();
    sim->add_option("--engine", engine, "Engine: p0|p1|p2|p3")
        ->required()
        ->check(CLI::IsMember({"p0", "p1", "p2", "p3"}));
    sim->add_option("--seed", m.seed, "Engine seed (p0)");
    auto* sim_traj = sim->add_option("--trajectories", m.trajectories_path,
                                     "Defender trajectories JSON");
    auto* sim_base = sim->add_flag("--baseline", "Use stationary defenders");
    sim_traj->excludes(sim_base);
    sim->add_option("--stride", m.snapshot_stride, "Snapshot decimation stride");
    sim->add_option("--out", m.out_dir, "Output directory")->required();

    auto* opt = app.add_subcommand("optimize", "Optimize defender trajectories");
    opt->add_option("--config", m.config_path, "Scenario config JSON")->required();
    opt->add_option("--engine", engine, "Engine: p1|p2|p3")
        ->required()
        ->check(CLI::IsMember({"p1", "p2", "p3"}));
    opt->add_option("--budget", m.budget, "Max objective evaluations")->required();
    opt->add_option("--seed", m.seed, "Optimizer seed")->required();
    opt->add_option("--penalty", m.penalty_weight, "Control-bound penalty weight");
    opt->add_option("--out", m.out_dir, "Output directory")->required();

    auto* mc = app.add_subcommand("montecarlo", "P0 ensemble for fixed trajectories");
    mc->add_option("--config", m.config_path, "Scenario config JSON")->required();
    mc->add_option("--trajectories", m.trajectories_path, "Defender trajectories JSON")->required();
    mc->add_option("--runs", m.runs, "Number of realizations")->required();
    mc->add_option("--seed", m.seed, "Master seed")->required();
    mc->add_option("--threads", m.threads, "Worker threads (0 = auto)");
    mc->add_option("--out", m.out_dir, "Output directory")->required();

    auto* cmp = app.add_subcommand("compare", "P1/P2/P3 vs a P0 ensemble on fixed trajectories");
    cmp->add_option("--config", m.config_path, "Scenario config JSON")->required();
    cmp->add_option("--trajectories", m.trajectories_path, "Defender trajectories JSON")->required();
    cmp->add_option("--runs", m.runs, "Number of P0 realizations")->required();
    cmp->add_option("--seed", m.seed, "Master seed")->required();
    cmp->add_option("--threads", m.threads, "Worker threads (0 = auto)");
    cmp->add_option("--out", m.out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            m.engine = make_engine(engine, m.seed);
            m.source = sim_traj->count() ? aegis::RunManifest::TrajectorySource::File
                                         : aegis::RunManifest::TrajectorySource::Baseline;
            return aegis::cmd_simulate(m);
        }
        if (opt->parsed()) {
            m.engine = make_engine(engine, m.seed);
            return aegis::cmd_optimize(m);
        }
        m.source = aegis::RunManifest::TrajectorySource::File;
        if (mc->parsed()) return aegis::cmd_montecarlo(m);
        return aegis::cmd_compare(m);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
