#pragma once

#include <functional>
#include <vector>

#include "aegis/attrition.hpp"
#include "aegis/scenario.hpp"

namespace aegis {

// How attacker accelerations weight each interaction source:
//   Unweighted           every source at weight 1 (P1)
//   ProbabilityWeighted  source j scaled by its survival probability (P2)
//   IndexMasked          dead agents excluded entirely; dead attackers also
//                        receive zero acceleration (P0/P3)
struct InteractionMode {
    enum class Kind { Unweighted, ProbabilityWeighted, IndexMasked };

    Kind kind = Kind::Unweighted;
    std::vector<double> weights;  // N+M source weights, attackers first
    IndexSet alive;               // IndexMasked only

    static InteractionMode unweighted() { return {}; }
    static InteractionMode probability_weighted(std::vector<double> w) {
        InteractionMode m;
        m.kind = Kind::ProbabilityWeighted;
        m.weights = std::move(w);
        return m;
    }
    static InteractionMode index_masked(IndexSet alive_set) {
        InteractionMode m;
        m.kind = Kind::IndexMasked;
        m.alive = std::move(alive_set);
        return m;
    }
};

// Signed pair force magnitude between attackers: positive = repulsion along
// x_i - x_j. Zero beyond d1, continuous everywhere on (0, inf).
double pair_force_intra(double r, const ScenarioConfig& config);

// Defender-on-attacker repulsion magnitude: >= 0, zero at and beyond s0.
double pair_force_defender(double r, const ScenarioConfig& config);

// Sum of intra-swarm, defender-repulsion, virtual-leader and damping terms
// for every attacker. Throws on near-coincident interacting pairs.
std::vector<Vec3> attacker_accelerations(const SwarmState& state, const InteractionMode& mode,
                                         const ScenarioConfig& config);

// Defender trajectories as Bernstein control points: coefficient m of axis
// `axis` for defender k lives at [(k*3 + axis) * (degree+1) + m].
struct TrajectoryParams {
    int degree = 0;
    double horizon = 0.0;  // t_f
    std::vector<double> coeffs;

    static TrajectoryParams zeros(int n_defenders, int degree, double horizon);

    int n_defenders() const {
        return degree >= 0 && !coeffs.empty()
                   ? static_cast<int>(coeffs.size() / (3 * (degree + 1)))
                   : 0;
    }
    double& at(int defender, int axis, int m) {
        return coeffs[(static_cast<std::size_t>(defender) * 3 + axis) * (degree + 1) + m];
    }
    double at(int defender, int axis, int m) const {
        return coeffs[(static_cast<std::size_t>(defender) * 3 + axis) * (degree + 1) + m];
    }

    friend bool operator==(const TrajectoryParams&, const TrajectoryParams&) = default;
};

// Bernstein basis polynomial B_{m,n} evaluated at tau in [0,1].
double bernstein_basis(int m, int n, double tau);

// s_k(t), and its exact first/second time derivatives; t in [0, horizon].
Vec3 bernstein_position(const TrajectoryParams& params, int defender, double t);
Vec3 bernstein_velocity(const TrajectoryParams& params, int defender, double t);
Vec3 bernstein_acceleration(const TrajectoryParams& params, int defender, double t);

using AccelProvider = std::function<std::vector<Vec3>(const SwarmState&)>;

// One velocity-Verlet step for the attackers; defenders are advanced by
// evaluating their trajectories analytically at t+dt. The provider is called
// twice: at the current state and at the position-updated state (with
// half-kicked velocities, which is where velocity-dependent damping enters).
SwarmState verlet_step(const SwarmState& state, const AccelProvider& accel,
                       const TrajectoryParams& trajectories, double dt);

}  // namespace aegis
