#pragma once

#include <cstdint>
#include <vector>

#include "aegis/dynamics.hpp"
#include "aegis/engines.hpp"
#include "aegis/scenario.hpp"

namespace aegis {

// Aggregate of an ensemble of P0 realizations. Curves have n_steps+1
// entries; early-terminated runs hold their last value to t_f.
struct EnsembleSummary {
    int runs = 0;
    double hvu_destruction_frequency = 0.0;
    double hvu_destruction_se = 0.0;  // binomial standard error
    std::vector<double> mean_attacker_survival;
    std::vector<double> mean_defender_survival;
    std::vector<double> mean_hvu_survival;
};

// `runs` independent P0 realizations with per-run seeds derived from
// master_seed (derive_seed counter scheme). Runs execute in parallel;
// aggregation reduces in run-index order, so the summary is independent of
// scheduling. n_threads <= 0 picks a hardware default.
EnsembleSummary run_ensemble(const ValidatedConfig& config, const TrajectoryParams& trajectories,
                             int runs, std::uint64_t master_seed, int n_threads = 0);

// One smooth engine's curves next to the P0 ensemble.
struct EngineComparison {
    std::vector<double> attacker_curve;
    std::vector<double> defender_curve;
    std::vector<double> hvu_curve;
    double terminal_hvu_survival = 1.0;
    double delta_terminal = 0.0;  // |Q_hvu(t_f) - P0 empirical HVU survival|
    double hvu_linf = 0.0;        // max-over-time curve distances to the P0 means
    double attacker_linf = 0.0;
    double defender_linf = 0.0;
};

struct ComparisonReport {
    int runs = 0;
    EnsembleSummary p0;
    EngineComparison p1;
    EngineComparison p2;
    EngineComparison p3;
};

// Runs P1/P2/P3 once each plus a P0 ensemble on the same fixed trajectories.
ComparisonReport compare_engines(const ValidatedConfig& config, const TrajectoryParams& trajectories,
                                 int runs, std::uint64_t master_seed, int n_threads = 0);

}  // namespace aegis
