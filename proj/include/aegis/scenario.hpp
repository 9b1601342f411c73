#pragma once

#include <cstdint>
#include <vector>

#include "aegis/vec3.hpp"

namespace aegis {

enum class AgentKind { Hvu, Attacker, Defender };

// Label of one agent: kind plus ordinal within kind.
struct AgentId {
    AgentKind kind = AgentKind::Hvu;
    int ordinal = 0;
    friend constexpr bool operator==(const AgentId&, const AgentId&) = default;
};

constexpr AgentId hvu_id() { return {AgentKind::Hvu, 0}; }
constexpr AgentId attacker_id(int i) { return {AgentKind::Attacker, i}; }
constexpr AgentId defender_id(int k) { return {AgentKind::Defender, k}; }

// Initial placement: attackers uniform in the spherical shell
// [attacker_radius, attacker_radius + attacker_shell_width] around the HVU,
// defenders on the sphere of radius defender_radius (< attacker_radius),
// rejection-sampled so no two agents start closer than min_separation.
struct LayoutSpec {
    double attacker_radius = 0.0;
    double attacker_shell_width = 0.0;
    double defender_radius = 0.0;
    double min_separation = 0.0;  // <= 0 resolves to 0.1 * d0
    std::uint64_t seed = 0;
};

struct ScenarioConfig {
    int n_attackers = 0;                // N
    int n_defenders = 0;                // M
    double leader_gain = 0.0;           // K, constant pull toward the HVU
    double damping = 0.0;               // b
    double d0 = 0.0;                    // intra repulsion/attraction crossover
    double d1 = 0.0;                    // intra interaction cutoff (> d0)
    double s0 = 0.0;                    // defender repulsion cutoff
    double repulsion_gain_intra = 0.0;  // scale of f_I
    double repulsion_gain_def = 0.0;    // scale of f_d
    double lambda_a = 0.0;              // attacker rate of fire
    double lambda_d = 0.0;              // defender rate of fire
    double sigma_a = 0.0;               // attacker weapon range (squared-distance scale)
    double sigma_d = 0.0;               // defender weapon range
    double u_max = 0.0;                 // per-axis defender acceleration bound
    double dt = 0.0;
    int n_steps = 0;
    double threshold = 0.5;  // P3 removal cutoff tau
    int bernstein_degree = 5;
    LayoutSpec layout;
    Vec3 hvu_position;

    double horizon() const { return dt * n_steps; }
    double min_separation() const {
        return layout.min_separation > 0.0 ? layout.min_separation : 0.1 * d0;
    }
};

// A ScenarioConfig that passed validate(); validate() is the only way to
// mint one, so downstream code can assume every invariant holds.
class ValidatedConfig {
public:
    const ScenarioConfig& get() const { return cfg_; }
    const ScenarioConfig& operator*() const { return cfg_; }
    const ScenarioConfig* operator->() const { return &cfg_; }

private:
    friend ValidatedConfig validate(ScenarioConfig config);
    explicit ValidatedConfig(ScenarioConfig cfg) : cfg_(std::move(cfg)) {}
    ScenarioConfig cfg_;
};

// Throws std::invalid_argument naming the first violated constraint.
ValidatedConfig validate(ScenarioConfig config);

// Positions/velocities of every agent at one instant. Array lengths match
// the config counts; dead agents keep their last position.
struct SwarmState {
    std::vector<Vec3> attacker_pos;
    std::vector<Vec3> attacker_vel;
    std::vector<Vec3> defender_pos;
    std::vector<Vec3> defender_vel;
    Vec3 hvu_pos;
    double time = 0.0;
};

// Deterministic function of (config, layout_seed); zero initial velocities.
// Throws std::runtime_error if the separation constraint cannot be met.
SwarmState initial_state(const ValidatedConfig& config, std::uint64_t layout_seed);

// Uses config.layout.seed.
SwarmState initial_state(const ValidatedConfig& config);

}  // namespace aegis
