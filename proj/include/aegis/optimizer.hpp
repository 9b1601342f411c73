#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aegis/dynamics.hpp"
#include "aegis/engines.hpp"
#include "aegis/scenario.hpp"

namespace aegis {

// Fixed defender starts: position and velocity at t=0, enforced by pinning
// the first two control points of every defender trajectory.
struct EndpointConstraint {
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities;
};

struct ObjectiveSpec {
    EngineKind engine = EngineKind::p1();  // P1/P2/P3 only
    double penalty_weight = 10.0;          // control-bound violation weight
    std::optional<EndpointConstraint> endpoint;
};

// Returns params with c0/c1 overwritten so s_k(0) and s'_k(0) match the
// constraint (c1 = c0 + v0 * horizon / degree).
TrajectoryParams apply_endpoint_constraint(TrajectoryParams params,
                                           const EndpointConstraint& constraint);

// Quadratic hinge on per-axis |acceleration| - u_max, summed over the
// simulation time grid (times dt). Zero iff the trajectory is feasible on
// the grid.
double control_penalty(const TrajectoryParams& params, const ValidatedConfig& config);

// Terminal engine cost plus penalty_weight * control_penalty. Engine
// failures surface as +inf with the message in *diagnostic when given.
double objective(const TrajectoryParams& params, const ObjectiveSpec& spec,
                 const ValidatedConfig& config, std::string* diagnostic = nullptr);

struct OptimizationResult {
    TrajectoryParams best_params;
    double best_cost = 0.0;
    std::vector<std::pair<int, double>> history;  // (evaluation count, running best)
    int evaluations = 0;
    bool feasible = true;  // false when every candidate failed to evaluate
};

// Deterministic multi-start pattern search over the free control points
// (everything except the pinned c0/c1). Never returns a candidate worse
// than the best evaluated start; consumes at most `budget` objective
// evaluations. When spec.endpoint is empty, defender starts are pinned to
// the layout's initial deployment with zero velocity.
OptimizationResult optimize(const ObjectiveSpec& spec, const ValidatedConfig& config, int budget,
                            std::uint64_t seed);

// Every control point at the defender's initial position: zero velocity and
// acceleration everywhere.
TrajectoryParams baseline_stationary(const ValidatedConfig& config);

}  // namespace aegis
