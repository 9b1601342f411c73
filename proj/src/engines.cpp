#include "aegis/engines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aegis/rng.hpp"

namespace aegis {

const char* EngineKind::name() const {
    switch (kind) {
        case Kind::P0Stochastic: return "p0";
        case Kind::P1Decoupled: return "p1";
        case Kind::P2WeightedForces: return "p2";
        case Kind::P3Threshold: return "p3";
    }
    return "?";
}

std::span<const StepPhase> step_order() noexcept {
    static constexpr StepPhase kOrder[] = {
        StepPhase::ComputeRates,    StepPhase::UpdateSurvival, StepPhase::UpdateIndexSet,
        StepPhase::ComputeAccelerations, StepPhase::IntegrateMotion,
    };
    return kOrder;
}

namespace {

std::vector<double> weights_from_q(const SurvivalVector& q) {
    std::vector<double> w;
    w.reserve(q.attackers.size() + q.defenders.size());
    w.insert(w.end(), q.attackers.begin(), q.attackers.end());
    w.insert(w.end(), q.defenders.begin(), q.defenders.end());
    return w;
}

std::vector<double> weights_from_alive(const IndexSet& alive) {
    std::vector<double> w;
    w.reserve(alive.n_attackers() + alive.n_defenders());
    for (int i = 0; i < alive.n_attackers(); ++i) w.push_back(alive.attacker_alive(i) ? 1.0 : 0.0);
    for (int k = 0; k < alive.n_defenders(); ++k) w.push_back(alive.defender_alive(k) ? 1.0 : 0.0);
    return w;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 1.0;  // vacuous: no agents of this kind
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

SimResult run(const ValidatedConfig& config, const TrajectoryParams& trajectories,
              const EngineKind& engine, const RunOptions& options) {
    const ScenarioConfig& c = config.get();
    const int n = c.n_attackers;
    const int m = c.n_defenders;

    if (trajectories.n_defenders() != m)
        throw std::invalid_argument("trajectory params cover " +
                                    std::to_string(trajectories.n_defenders()) +
                                    " defenders, config has " + std::to_string(m));
    if (m > 0 && std::abs(trajectories.horizon - c.horizon()) > 1e-9 * std::max(1.0, c.horizon()))
        throw std::invalid_argument("trajectory horizon does not match config horizon");

    const bool masked =
        engine.kind == EngineKind::Kind::P0Stochastic || engine.kind == EngineKind::Kind::P3Threshold;
    const bool stochastic = engine.is_stochastic();

    SwarmState state = initial_state(config);
    SurvivalVector q = SurvivalVector::ones(n, m);
    IndexSet alive = IndexSet::full(n, m);
    bool hvu_alive = true;

    std::optional<UniformSampler> rng;
    if (stochastic) rng.emplace(engine.seed);

    SimResult res;
    auto record = [&](int step) {
        res.times.push_back(state.time);
        if (stochastic) {
            res.attacker_curve.push_back(n > 0 ? static_cast<double>(alive.alive_attackers()) / n
                                               : 1.0);
            res.defender_curve.push_back(m > 0 ? static_cast<double>(alive.alive_defenders()) / m
                                               : 1.0);
            res.hvu_curve.push_back(hvu_alive ? 1.0 : 0.0);
        } else {
            res.attacker_curve.push_back(mean(q.attackers));
            res.defender_curve.push_back(mean(q.defenders));
            res.hvu_curve.push_back(q.hvu);
        }
        const bool want_snapshot =
            options.snapshot_stride > 0 &&
            (step % options.snapshot_stride == 0 || step == c.n_steps || !hvu_alive);
        if (want_snapshot) {
            res.snapshot_steps.push_back(step);
            res.states.push_back(state);
            res.survival.push_back(q);
            if (masked) res.alive_sets.push_back(alive);
        }
    };

    record(0);

    std::vector<double> omega(n + m);
    for (int step = 0; step < c.n_steps && hvu_alive; ++step) {
        try {
            const AttritionRates rates = attrition_rates(state, c);

            const std::vector<double> shooter_w =
                masked ? weights_from_alive(alive) : weights_from_q(q);
            SurvivalVector q_next = survival_step(q, rates, shooter_w, c.dt);
            if (masked) {
                // Removed agents take no further damage: their Q stays frozen.
                for (int i = 0; i < n; ++i)
                    if (!alive.attacker_alive(i)) q_next.attackers[i] = q.attackers[i];
                for (int k = 0; k < m; ++k)
                    if (!alive.defender_alive(k)) q_next.defenders[k] = q.defenders[k];
            }

            IndexSet alive_next = alive;
            if (engine.kind == EngineKind::Kind::P3Threshold) {
                alive_next = threshold_index_update(alive, q_next, c.threshold);
            } else if (stochastic) {
                // One draw per agent slot and one for the HVU, every step.
                const double omega_hvu = rng->next();
                for (int idx = 0; idx < n + m; ++idx) omega[idx] = rng->next();
                if (!(q.hvu > 0.0))
                    throw std::runtime_error("inconsistent state: HVU alive with zero Q");
                if (omega_hvu >= q_next.hvu / q.hvu) hvu_alive = false;
                alive_next = stochastic_index_update(alive, q, q_next, omega);
            }
            if (masked) {
                // Newly removed attackers freeze in place.
                for (int i = 0; i < n; ++i)
                    if (alive.attacker_alive(i) && !alive_next.attacker_alive(i))
                        state.attacker_vel[i] = Vec3{};
            }

            q = std::move(q_next);
            alive = std::move(alive_next);

            InteractionMode im;
            switch (engine.kind) {
                case EngineKind::Kind::P1Decoupled:
                    im = InteractionMode::unweighted();
                    break;
                case EngineKind::Kind::P2WeightedForces:
                    im = InteractionMode::probability_weighted(weights_from_q(q));
                    break;
                default:
                    im = InteractionMode::index_masked(alive);
                    break;
            }
            auto provider = [&](const SwarmState& s) {
                return attacker_accelerations(s, im, c);
            };
            state = verlet_step(state, provider, trajectories, c.dt);
        } catch (const std::exception& e) {
            throw std::runtime_error("step " + std::to_string(step) + ": " + e.what());
        }

        record(step + 1);
        if (!hvu_alive) {
            res.hvu_destroyed = true;
            res.step_of_destruction = step + 1;
        }
    }

    if (stochastic) {
        res.rng_draws = rng->count();
        res.terminal_cost = res.hvu_destroyed ? 1.0 : 0.0;
    } else {
        res.terminal_cost = 1.0 - q.hvu;
    }
    return res;
}

}  // namespace aegis
