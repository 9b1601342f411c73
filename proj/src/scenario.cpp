#include "aegis/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "aegis/rng.hpp"

namespace aegis {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ValidatedConfig validate(ScenarioConfig c) {
    require(c.n_attackers >= 1, "n_attackers must be positive");
    require(c.n_defenders >= 0, "n_defenders must be non-negative");
    require(std::isfinite(c.leader_gain) && c.leader_gain >= 0.0,
            "leader_gain must be non-negative");
    require(std::isfinite(c.damping) && c.damping > 0.0, "damping must be positive");
    require(std::isfinite(c.d0) && c.d0 > 0.0, "d0 must be positive");
    require(std::isfinite(c.d1) && c.d1 > c.d0, "d1 must exceed d0");
    require(std::isfinite(c.s0) && c.s0 > 0.0, "s0 must be positive");
    require(std::isfinite(c.repulsion_gain_intra) && c.repulsion_gain_intra > 0.0,
            "repulsion_gain_intra must be positive");
    require(std::isfinite(c.repulsion_gain_def) && c.repulsion_gain_def > 0.0,
            "repulsion_gain_def must be positive");
    require(std::isfinite(c.lambda_a) && c.lambda_a >= 0.0, "lambda_a must be non-negative");
    require(std::isfinite(c.lambda_d) && c.lambda_d >= 0.0, "lambda_d must be non-negative");
    require(std::isfinite(c.sigma_a) && c.sigma_a > 0.0, "sigma_a must be positive");
    require(std::isfinite(c.sigma_d) && c.sigma_d > 0.0, "sigma_d must be positive");
    require(std::isfinite(c.u_max) && c.u_max > 0.0, "u_max must be positive");
    require(std::isfinite(c.dt) && c.dt > 0.0, "dt must be positive");
    require(c.n_steps >= 1, "n_steps must be positive");
    // Keeps every per-pair survival factor 1 - rate*weight*dt inside (0,1].
    require(c.lambda_a * c.dt < 1.0, "lambda_a * dt must be below 1 (survival-factor bound)");
    require(c.lambda_d * c.dt < 1.0, "lambda_d * dt must be below 1 (survival-factor bound)");
    require(std::isfinite(c.threshold) && c.threshold > 0.0 && c.threshold < 1.0,
            "threshold must lie in (0,1)");
    require(c.bernstein_degree >= 1, "bernstein_degree must be positive");
    require(std::isfinite(c.layout.attacker_radius) && c.layout.attacker_radius > 0.0,
            "layout.attacker_radius must be positive");
    require(std::isfinite(c.layout.attacker_shell_width) && c.layout.attacker_shell_width >= 0.0,
            "layout.attacker_shell_width must be non-negative");
    if (c.n_defenders > 0) {
        require(std::isfinite(c.layout.defender_radius) && c.layout.defender_radius > 0.0,
                "layout.defender_radius must be positive");
        require(c.layout.defender_radius < c.layout.attacker_radius,
                "layout.defender_radius must be smaller than layout.attacker_radius");
    }
    require(std::isfinite(c.layout.min_separation), "layout.min_separation must be finite");
    require(is_finite(c.hvu_position), "hvu_position must be finite");
    return ValidatedConfig(std::move(c));
}

namespace {

Vec3 sample_direction(UniformSampler& rng) {
    const double cz = 2.0 * rng.next() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.next();
    const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    return {sz * std::cos(phi), sz * std::sin(phi), cz};
}

}  // namespace

SwarmState initial_state(const ValidatedConfig& config, std::uint64_t layout_seed) {
    const ScenarioConfig& c = config.get();
    const double eps2 = c.min_separation() * c.min_separation();
    constexpr int kMaxTries = 10000;

    UniformSampler rng(layout_seed);
    SwarmState st;
    st.hvu_pos = c.hvu_position;
    st.time = 0.0;
    st.attacker_vel.assign(c.n_attackers, Vec3{});
    st.defender_vel.assign(c.n_defenders, Vec3{});

    auto separated = [&](const Vec3& p) {
        for (const Vec3& q : st.attacker_pos)
            if ((p - q).squared_norm() < eps2) return false;
        for (const Vec3& q : st.defender_pos)
            if ((p - q).squared_norm() < eps2) return false;
        return true;
    };

    for (int i = 0; i < c.n_attackers; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxTries && !placed; ++attempt) {
            const double r = c.layout.attacker_radius + c.layout.attacker_shell_width * rng.next();
            const Vec3 p = st.hvu_pos + r * sample_direction(rng);
            if (separated(p)) {
                st.attacker_pos.push_back(p);
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("layout infeasible: could not place attacker " +
                                     std::to_string(i) + " with min separation " +
                                     std::to_string(c.min_separation()));
    }

    for (int k = 0; k < c.n_defenders; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxTries && !placed; ++attempt) {
            const Vec3 p = st.hvu_pos + c.layout.defender_radius * sample_direction(rng);
            if (separated(p)) {
                st.defender_pos.push_back(p);
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("layout infeasible: could not place defender " +
                                     std::to_string(k) + " with min separation " +
                                     std::to_string(c.min_separation()));
    }

    return st;
}

SwarmState initial_state(const ValidatedConfig& config) {
    return initial_state(config, config->layout.seed);
}

}  // namespace aegis
