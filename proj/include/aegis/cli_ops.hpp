#pragma once

#include <cstdint>
#include <string>

#include "aegis/engines.hpp"

namespace aegis {

// Everything one CLI invocation needs. Artifacts land in out_dir; every
// summary embeds the resolved config and all seeds.
struct RunManifest {
    std::string config_path;
    EngineKind engine = EngineKind::p1();

    enum class TrajectorySource { Baseline, File };
    TrajectorySource source = TrajectorySource::Baseline;
    std::string trajectories_path;

    std::uint64_t seed = 0;  // engine / optimizer / ensemble master seed
    int runs = 200;
    int budget = 500;
    double penalty_weight = 10.0;
    int snapshot_stride = 1;
    int threads = 0;
    std::string out_dir;
};

// Each writes its artifacts and returns 0 on success; failures throw with a
// message naming the offending input.
int cmd_simulate(const RunManifest& manifest);
int cmd_optimize(const RunManifest& manifest);
int cmd_montecarlo(const RunManifest& manifest);
int cmd_compare(const RunManifest& manifest);

}  // namespace aegis
