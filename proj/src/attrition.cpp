#include "aegis/attrition.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aegis {

double damage_kernel(double sq_dist, double sigma) {
    assert(sq_dist >= 0.0 && sigma > 0.0);
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    return std::erfc((sq_dist / sigma) * inv_sqrt2);
}

AttritionRates attrition_rates(const SwarmState& state, const ScenarioConfig& config) {
    const int n = static_cast<int>(state.attacker_pos.size());
    const int m = static_cast<int>(state.defender_pos.size());
    AttritionRates rates;
    rates.n_attackers = n;
    rates.n_defenders = m;
    rates.att.resize(static_cast<std::size_t>(n) * m);
    rates.def.resize(static_cast<std::size_t>(m) * n);
    rates.hvu.resize(n);

    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) {
            const double sq = (state.attacker_pos[i] - state.defender_pos[k]).squared_norm();
            rates.att[static_cast<std::size_t>(i) * m + k] =
                config.lambda_d * damage_kernel(sq, config.sigma_d);
            rates.def[static_cast<std::size_t>(k) * n + i] =
                config.lambda_a * damage_kernel(sq, config.sigma_a);
        }
        const double sq_hvu = (state.hvu_pos - state.attacker_pos[i]).squared_norm();
        rates.hvu[i] = config.lambda_a * damage_kernel(sq_hvu, config.sigma_a);
    }
    return rates;
}

namespace {

double survival_factor(double rate, double weight, double dt) {
    const double factor = 1.0 - rate * weight * dt;
    if (!(factor > 0.0 && factor <= 1.0))
        throw std::runtime_error("survival factor " + std::to_string(factor) +
                                 " outside (0,1]; rate*weight*dt too large");
    return factor;
}

}  // namespace

SurvivalVector survival_step(const SurvivalVector& q, const AttritionRates& rates,
                             std::span<const double> shooter_weights, double dt) {
    const int n = rates.n_attackers;
    const int m = rates.n_defenders;
    if (static_cast<int>(shooter_weights.size()) != n + m)
        throw std::invalid_argument("shooter_weights must have N+M entries");

    const auto w_att = shooter_weights.first(n);
    const auto w_def = shooter_weights.subspan(n);

    SurvivalVector out = q;
    for (int j = 0; j < n; ++j) {
        double product = 1.0;
        for (int k = 0; k < m; ++k)
            product *= survival_factor(rates.att_rate(j, k), w_def[k], dt);
        out.attackers[j] = q.attackers[j] * product;
    }
    for (int k = 0; k < m; ++k) {
        double product = 1.0;
        for (int j = 0; j < n; ++j)
            product *= survival_factor(rates.def_rate(k, j), w_att[j], dt);
        out.defenders[k] = q.defenders[k] * product;
    }
    {
        double product = 1.0;
        for (int j = 0; j < n; ++j)
            product *= survival_factor(rates.hvu_rate(j), w_att[j], dt);
        out.hvu = q.hvu * product;
    }
    return out;
}

IndexSet stochastic_index_update(const IndexSet& alive, const SurvivalVector& q_before,
                                 const SurvivalVector& q_after, std::span<const double> omega) {
    const int n = alive.n_attackers();
    const int m = alive.n_defenders();
    if (static_cast<int>(omega.size()) != n + m)
        throw std::invalid_argument("omega must have N+M entries");

    IndexSet out = alive;
    for (int i = 0; i < n; ++i) {
        if (!alive.attacker_alive(i)) continue;
        if (!(q_before.attackers[i] > 0.0))
            throw std::runtime_error("inconsistent state: alive attacker " + std::to_string(i) +
                                     " has zero survival probability");
        const double ratio = q_after.attackers[i] / q_before.attackers[i];
        if (omega[i] >= ratio) out.remove(attacker_id(i));
    }
    for (int k = 0; k < m; ++k) {
        if (!alive.defender_alive(k)) continue;
        if (!(q_before.defenders[k] > 0.0))
            throw std::runtime_error("inconsistent state: alive defender " + std::to_string(k) +
                                     " has zero survival probability");
        const double ratio = q_after.defenders[k] / q_before.defenders[k];
        if (omega[n + k] >= ratio) out.remove(defender_id(k));
    }
    return out;
}

IndexSet threshold_index_update(const IndexSet& alive, const SurvivalVector& q, double tau) {
    IndexSet out = alive;
    for (int i = 0; i < alive.n_attackers(); ++i)
        if (alive.attacker_alive(i) && q.attackers[i] < tau) out.remove(attacker_id(i));
    for (int k = 0; k < alive.n_defenders(); ++k)
        if (alive.defender_alive(k) && q.defenders[k] < tau) out.remove(defender_id(k));
    return out;
}

}  // namespace aegis
