#include "aegis/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "aegis/rng.hpp"

namespace aegis {

TrajectoryParams baseline_stationary(const ValidatedConfig& config) {
    const SwarmState st = initial_state(config);
    TrajectoryParams p =
        TrajectoryParams::zeros(config->n_defenders, config->bernstein_degree, config->horizon());
    for (int k = 0; k < config->n_defenders; ++k)
        for (int axis = 0; axis < 3; ++axis)
            for (int m = 0; m <= p.degree; ++m) p.at(k, axis, m) = st.defender_pos[k][axis];
    return p;
}

TrajectoryParams apply_endpoint_constraint(TrajectoryParams params,
                                           const EndpointConstraint& constraint) {
    const int m = params.n_defenders();
    if (static_cast<int>(constraint.positions.size()) != m ||
        static_cast<int>(constraint.velocities.size()) != m)
        throw std::invalid_argument("endpoint constraint does not match defender count");
    for (int k = 0; k < m; ++k) {
        for (int axis = 0; axis < 3; ++axis) {
            params.at(k, axis, 0) = constraint.positions[k][axis];
            if (params.degree >= 1)
                params.at(k, axis, 1) = constraint.positions[k][axis] +
                                        constraint.velocities[k][axis] * params.horizon /
                                            params.degree;
        }
    }
    return params;
}

double control_penalty(const TrajectoryParams& params, const ValidatedConfig& config) {
    const ScenarioConfig& c = config.get();
    double total = 0.0;
    for (int step = 0; step <= c.n_steps; ++step) {
        const double t = step * c.dt;
        for (int k = 0; k < params.n_defenders(); ++k) {
            const Vec3 a = bernstein_acceleration(params, k, t);
            for (int axis = 0; axis < 3; ++axis) {
                const double excess = std::abs(a[axis]) - c.u_max;
                if (excess > 0.0) total += excess * excess * c.dt;
            }
        }
    }
    return total;
}

double objective(const TrajectoryParams& params, const ObjectiveSpec& spec,
                 const ValidatedConfig& config, std::string* diagnostic) {
    if (spec.engine.is_stochastic())
        throw std::invalid_argument("objective requires a smooth engine (p1/p2/p3)");
    const TrajectoryParams pinned =
        spec.endpoint ? apply_endpoint_constraint(params, *spec.endpoint) : params;
    try {
        RunOptions opts;
        opts.snapshot_stride = 0;
        const SimResult r = run(config, pinned, spec.engine, opts);
        return r.terminal_cost + spec.penalty_weight * control_penalty(pinned, config);
    } catch (const std::exception& e) {
        if (diagnostic) *diagnostic = e.what();
        return std::numeric_limits<double>::infinity();
    }
}

namespace {

// Gaussian from two uniforms; deterministic Box-Muller.
double gaussian(UniformSampler& rng) {
    const double u1 = std::max(rng.next(), 1e-300);
    const double u2 = rng.next();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Defenders head from their start toward the initial attacker centroid.
TrajectoryParams intercept_heuristic(const ValidatedConfig& config, const SwarmState& st) {
    TrajectoryParams p =
        TrajectoryParams::zeros(config->n_defenders, config->bernstein_degree, config->horizon());
    Vec3 centroid{};
    for (const Vec3& x : st.attacker_pos) centroid += x;
    if (!st.attacker_pos.empty()) centroid *= 1.0 / static_cast<double>(st.attacker_pos.size());
    for (int k = 0; k < config->n_defenders; ++k) {
        const Vec3 start = st.defender_pos[k];
        for (int m = 0; m <= p.degree; ++m) {
            const double frac = static_cast<double>(m) / p.degree;
            const Vec3 point = start + frac * (centroid - start);
            for (int axis = 0; axis < 3; ++axis) p.at(k, axis, m) = point[axis];
        }
    }
    return p;
}

}  // namespace

OptimizationResult optimize(const ObjectiveSpec& spec, const ValidatedConfig& config, int budget,
                            std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");

    ObjectiveSpec sp = spec;
    const SwarmState st = initial_state(config);
    if (!sp.endpoint) {
        EndpointConstraint ep;
        ep.positions = st.defender_pos;
        ep.velocities.assign(config->n_defenders, Vec3{});
        sp.endpoint = std::move(ep);
    }

    OptimizationResult result;
    result.best_cost = std::numeric_limits<double>::infinity();

    auto evaluate = [&](const TrajectoryParams& candidate) {
        const double cost = objective(candidate, sp, config);
        ++result.evaluations;
        if (cost < result.best_cost) {
            result.best_cost = cost;
            result.best_params = candidate;
            result.history.emplace_back(result.evaluations, cost);
        }
        return cost;
    };

    // Start set: stationary baseline, intercept heuristic, seeded jitters.
    UniformSampler rng(seed);
    std::vector<TrajectoryParams> starts;
    starts.push_back(baseline_stationary(config));
    if (config->n_defenders > 0 && config->bernstein_degree >= 2) {
        starts.push_back(intercept_heuristic(config, st));
        const double jitter = 0.15 * config->layout.attacker_radius;
        for (int extra = 0; extra < 4; ++extra) {
            TrajectoryParams p = starts[extra % 2];
            for (int k = 0; k < p.n_defenders(); ++k)
                for (int axis = 0; axis < 3; ++axis)
                    for (int m = 2; m <= p.degree; ++m)
                        p.at(k, axis, m) += jitter * gaussian(rng);
            starts.push_back(std::move(p));
        }
    }

    for (const TrajectoryParams& cand : starts) {
        if (result.evaluations >= budget) break;
        evaluate(cand);
    }

    if (!std::isfinite(result.best_cost)) {
        // Every start failed; hand back the baseline flagged infeasible.
        result.best_params = apply_endpoint_constraint(starts.front(), *sp.endpoint);
        result.feasible = false;
        return result;
    }

    // Pattern search over the free coordinates (control points 2..degree).
    const double step0 = 0.2 * config->layout.attacker_radius;
    double step = step0;
    TrajectoryParams current = result.best_params;
    while (result.evaluations < budget && step > 1e-3 * step0 && current.degree >= 2) {
        bool improved = false;
        for (int k = 0; k < current.n_defenders() && result.evaluations < budget; ++k) {
            for (int axis = 0; axis < 3 && result.evaluations < budget; ++axis) {
                for (int m = 2; m <= current.degree && result.evaluations < budget; ++m) {
                    const double base = current.at(k, axis, m);
                    for (const double delta : {step, -step}) {
                        if (result.evaluations >= budget) break;
                        current.at(k, axis, m) = base + delta;
                        const double before = result.best_cost;
                        if (evaluate(current) < before) {
                            improved = true;
                            break;  // keep the move
                        }
                        current.at(k, axis, m) = base;
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }

    result.best_params = apply_endpoint_constraint(result.best_params, *sp.endpoint);
    result.feasible = true;
    return result;
}

}  // namespace aegis
