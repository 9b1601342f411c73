#include "aegis/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aegis {

namespace {

double singular_tolerance(const ScenarioConfig& c) { return 1e-9 * c.d0; }

[[noreturn]] void throw_singular(const char* kind, int i, int j, double r) {
    throw std::runtime_error(std::string("singular pair: ") + kind + " " + std::to_string(i) +
                             "/" + std::to_string(j) + " at distance " + std::to_string(r));
}

}  // namespace

double pair_force_intra(double r, const ScenarioConfig& c) {
    if (r < singular_tolerance(c))
        throw std::runtime_error("singular pair: intra-attacker distance " + std::to_string(r));
    if (r <= c.d0) return c.repulsion_gain_intra * (c.d0 - r);
    if (r <= c.d1)
        return c.repulsion_gain_intra * (c.d0 - r) * (c.d1 - r) / (c.d1 - c.d0);
    return 0.0;
}

double pair_force_defender(double r, const ScenarioConfig& c) {
    if (r < singular_tolerance(c))
        throw std::runtime_error("singular pair: attacker-defender distance " + std::to_string(r));
    if (r >= c.s0) return 0.0;
    return c.repulsion_gain_def * (c.s0 - r);
}

std::vector<Vec3> attacker_accelerations(const SwarmState& state, const InteractionMode& mode,
                                         const ScenarioConfig& config) {
    const int n = static_cast<int>(state.attacker_pos.size());
    const int m = static_cast<int>(state.defender_pos.size());
    const bool masked = mode.kind == InteractionMode::Kind::IndexMasked;
    const bool weighted = mode.kind == InteractionMode::Kind::ProbabilityWeighted;

    if (weighted && static_cast<int>(mode.weights.size()) != n + m)
        throw std::invalid_argument("interaction weights must have N+M entries");
    if (masked && (mode.alive.n_attackers() != n || mode.alive.n_defenders() != m))
        throw std::invalid_argument("index mask does not match agent counts");

    auto weight_att = [&](int j) { return weighted ? mode.weights[j] : 1.0; };
    auto weight_def = [&](int k) { return weighted ? mode.weights[n + k] : 1.0; };
    const double tol2 = singular_tolerance(config) * singular_tolerance(config);

    std::vector<Vec3> acc(n);
    for (int i = 0; i < n; ++i) {
        if (masked && !mode.alive.attacker_alive(i)) continue;  // dead: zero acceleration

        Vec3 a{};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (masked && !mode.alive.attacker_alive(j)) continue;
            const Vec3 d = state.attacker_pos[i] - state.attacker_pos[j];
            const double r2 = d.squared_norm();
            if (r2 > config.d1 * config.d1) continue;
            if (r2 < tol2) throw_singular("attackers", i, j, std::sqrt(r2));
            const double r = std::sqrt(r2);
            a += (weight_att(j) * pair_force_intra(r, config) / r) * d;
        }
        for (int k = 0; k < m; ++k) {
            if (masked && !mode.alive.defender_alive(k)) continue;
            const Vec3 d = state.attacker_pos[i] - state.defender_pos[k];
            const double r2 = d.squared_norm();
            if (r2 >= config.s0 * config.s0) continue;
            if (r2 < tol2) throw_singular("attacker/defender", i, k, std::sqrt(r2));
            const double r = std::sqrt(r2);
            a += (weight_def(k) * pair_force_defender(r, config) / r) * d;
        }
        const Vec3 h = state.hvu_pos - state.attacker_pos[i];
        const double h2 = h.squared_norm();
        if (h2 > 0.0) a += (config.leader_gain / std::sqrt(h2)) * h;  // zero at the HVU itself
        a -= config.damping * state.attacker_vel[i];
        acc[i] = a;
    }
    return acc;
}

TrajectoryParams TrajectoryParams::zeros(int n_defenders, int degree, double horizon) {
    TrajectoryParams p;
    p.degree = degree;
    p.horizon = horizon;
    p.coeffs.assign(static_cast<std::size_t>(n_defenders) * 3 * (degree + 1), 0.0);
    return p;
}

double bernstein_basis(int m, int n, double tau) {
    if (m < 0 || m > n) return 0.0;
    double binom = 1.0;
    for (int i = 1; i <= m; ++i) binom *= static_cast<double>(n - m + i) / i;
    return binom * std::pow(tau, m) * std::pow(1.0 - tau, n - m);
}

namespace {

// De Casteljau evaluation: exact endpoint interpolation at tau = 0 and 1.
double de_casteljau(const double* pts, int count, double tau) {
    if (count == 1) return pts[0];
    constexpr int kStack = 24;
    double buf[kStack];
    std::vector<double> heap;
    double* w = buf;
    if (count > kStack) {
        heap.assign(pts, pts + count);
        w = heap.data();
    } else {
        for (int i = 0; i < count; ++i) w[i] = pts[i];
    }
    const double s = 1.0 - tau;  // convex form keeps tau=0/1 endpoint-exact
    for (int level = count - 1; level > 0; --level)
        for (int i = 0; i < level; ++i) w[i] = s * w[i] + tau * w[i + 1];
    return w[0];
}

double clamp_tau(const TrajectoryParams& p, double t) {
    if (!(p.horizon > 0.0)) throw std::invalid_argument("trajectory horizon must be positive");
    const double tol = 1e-9 * p.horizon;
    if (t < -tol || t > p.horizon + tol)
        throw std::out_of_range("time " + std::to_string(t) + " outside trajectory horizon [0, " +
                                std::to_string(p.horizon) + "]");
    const double tau = t / p.horizon;
    return tau < 0.0 ? 0.0 : tau > 1.0 ? 1.0 : tau;
}

void check_defender(const TrajectoryParams& p, int defender) {
    if (defender < 0 || defender >= p.n_defenders())
        throw std::out_of_range("defender ordinal " + std::to_string(defender) +
                                " outside trajectory params");
}

}  // namespace

Vec3 bernstein_position(const TrajectoryParams& p, int defender, double t) {
    check_defender(p, defender);
    const double tau = clamp_tau(p, t);
    Vec3 out;
    for (int axis = 0; axis < 3; ++axis) {
        const double* c = &p.coeffs[(static_cast<std::size_t>(defender) * 3 + axis) * (p.degree + 1)];
        out[axis] = de_casteljau(c, p.degree + 1, tau);
    }
    return out;
}

Vec3 bernstein_velocity(const TrajectoryParams& p, int defender, double t) {
    check_defender(p, defender);
    const double tau = clamp_tau(p, t);
    if (p.degree < 1) return {};
    const double scale = p.degree / p.horizon;
    Vec3 out;
    std::vector<double> diff(p.degree);
    for (int axis = 0; axis < 3; ++axis) {
        const double* c = &p.coeffs[(static_cast<std::size_t>(defender) * 3 + axis) * (p.degree + 1)];
        for (int i = 0; i < p.degree; ++i) diff[i] = c[i + 1] - c[i];
        out[axis] = scale * de_casteljau(diff.data(), p.degree, tau);
    }
    return out;
}

Vec3 bernstein_acceleration(const TrajectoryParams& p, int defender, double t) {
    check_defender(p, defender);
    const double tau = clamp_tau(p, t);
    if (p.degree < 2) return {};
    const double scale = static_cast<double>(p.degree) * (p.degree - 1) / (p.horizon * p.horizon);
    Vec3 out;
    std::vector<double> diff2(p.degree - 1);
    for (int axis = 0; axis < 3; ++axis) {
        const double* c = &p.coeffs[(static_cast<std::size_t>(defender) * 3 + axis) * (p.degree + 1)];
        for (int i = 0; i < p.degree - 1; ++i) diff2[i] = c[i + 2] - 2.0 * c[i + 1] + c[i];
        out[axis] = scale * de_casteljau(diff2.data(), p.degree - 1, tau);
    }
    return out;
}

namespace {

void check_finite(const std::vector<Vec3>& acc, const char* where) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!is_finite(acc[i]))
            throw std::runtime_error(std::string("integration failure: non-finite acceleration "
                                                 "for attacker ") +
                                     std::to_string(i) + " (" + where + ")");
}

}  // namespace

SwarmState verlet_step(const SwarmState& state, const AccelProvider& accel,
                       const TrajectoryParams& trajectories, double dt) {
    const int n = static_cast<int>(state.attacker_pos.size());
    const int m = static_cast<int>(state.defender_pos.size());

    const std::vector<Vec3> a0 = accel(state);
    check_finite(a0, "initial evaluation");

    SwarmState next = state;
    next.time = state.time + dt;
    for (int i = 0; i < n; ++i) {
        const Vec3 v_half = state.attacker_vel[i] + (0.5 * dt) * a0[i];
        next.attacker_pos[i] = state.attacker_pos[i] + dt * v_half;
        next.attacker_vel[i] = v_half;
    }
    for (int k = 0; k < m; ++k) {
        next.defender_pos[k] = bernstein_position(trajectories, k, next.time);
        next.defender_vel[k] = bernstein_velocity(trajectories, k, next.time);
    }

    const std::vector<Vec3> a1 = accel(next);
    check_finite(a1, "updated evaluation");
    for (int i = 0; i < n; ++i) next.attacker_vel[i] += (0.5 * dt) * a1[i];
    return next;
}

}  // namespace aegis
