#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aegis/attrition.hpp"
#include "aegis/dynamics.hpp"
#include "aegis/scenario.hpp"

namespace aegis {

// The four engagement formulations. P1/P2/P3 are deterministic; P0 realizes
// one stochastic engagement from its seed.
struct EngineKind {
    enum class Kind { P0Stochastic, P1Decoupled, P2WeightedForces, P3Threshold };

    Kind kind = Kind::P1Decoupled;
    std::uint64_t seed = 0;  // P0 only

    static EngineKind p0(std::uint64_t seed) { return {Kind::P0Stochastic, seed}; }
    static EngineKind p1() { return {Kind::P1Decoupled, 0}; }
    static EngineKind p2() { return {Kind::P2WeightedForces, 0}; }
    static EngineKind p3() { return {Kind::P3Threshold, 0}; }

    bool is_stochastic() const { return kind == Kind::P0Stochastic; }
    const char* name() const;

    friend bool operator==(const EngineKind&, const EngineKind&) = default;
};

// Canonical within-step sequence shared by all engines. Survival always
// advances from the positions of the step being left; accelerations see the
// already-updated weights/mask.
enum class StepPhase {
    ComputeRates,
    UpdateSurvival,
    UpdateIndexSet,
    ComputeAccelerations,
    IntegrateMotion,
};

std::span<const StepPhase> step_order() noexcept;

struct RunOptions {
    // Keep a state/survival/index snapshot every `snapshot_stride` steps
    // (plus the final step). 0 disables snapshots; the per-step survival
    // curves are always recorded.
    int snapshot_stride = 1;
};

struct SimResult {
    // Per-step curves, entry k at time k*dt (shorter if P0 ended early).
    // P1/P2/P3: mean survival probabilities; P0: alive fractions.
    std::vector<double> times;
    std::vector<double> attacker_curve;
    std::vector<double> defender_curve;
    std::vector<double> hvu_curve;

    // Snapshots per RunOptions; alive_sets filled for P0/P3 only.
    std::vector<int> snapshot_steps;
    std::vector<SwarmState> states;
    std::vector<SurvivalVector> survival;
    std::vector<IndexSet> alive_sets;

    double terminal_cost = 0.0;  // 1 - Q_0(t_f), or the 0/1 outcome for P0
    bool hvu_destroyed = false;  // P0 only
    std::optional<int> step_of_destruction;
    std::uint64_t rng_draws = 0;  // uniform samples consumed (P0 only)
};

// One full engagement under the chosen formulation. Errors from dynamics or
// attrition are rethrown with the step index attached.
SimResult run(const ValidatedConfig& config, const TrajectoryParams& trajectories,
              const EngineKind& engine, const RunOptions& options = {});

}  // namespace aegis
