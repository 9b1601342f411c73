#pragma once

#include <span>
#include <vector>

#include "aegis/scenario.hpp"

namespace aegis {

// Per-agent survival probabilities Q. Entries live in [0,1] and are
// non-increasing along any engine trajectory.
struct SurvivalVector {
    double hvu = 1.0;
    std::vector<double> attackers;
    std::vector<double> defenders;

    static SurvivalVector ones(int n_attackers, int n_defenders) {
        SurvivalVector q;
        q.attackers.assign(n_attackers, 1.0);
        q.defenders.assign(n_defenders, 1.0);
        return q;
    }

    friend bool operator==(const SurvivalVector&, const SurvivalVector&) = default;
};

// The set of attackers and defenders still alive. Shrinks monotonically;
// the HVU is not a member (its destruction is tracked by the engines).
class IndexSet {
public:
    IndexSet() = default;

    static IndexSet full(int n_attackers, int n_defenders) {
        IndexSet s;
        s.att_.assign(n_attackers, 1);
        s.def_.assign(n_defenders, 1);
        return s;
    }

    int n_attackers() const { return static_cast<int>(att_.size()); }
    int n_defenders() const { return static_cast<int>(def_.size()); }

    bool attacker_alive(int i) const { return att_[i] != 0; }
    bool defender_alive(int k) const { return def_[k] != 0; }

    bool alive(AgentId id) const {
        if (id.kind == AgentKind::Attacker) return attacker_alive(id.ordinal);
        if (id.kind == AgentKind::Defender) return defender_alive(id.ordinal);
        return false;
    }

    void remove(AgentId id) {
        if (id.kind == AgentKind::Attacker) att_[id.ordinal] = 0;
        else if (id.kind == AgentKind::Defender) def_[id.ordinal] = 0;
    }

    int alive_attackers() const { return count(att_); }
    int alive_defenders() const { return count(def_); }

    bool subset_of(const IndexSet& other) const {
        if (att_.size() != other.att_.size() || def_.size() != other.def_.size()) return false;
        for (std::size_t i = 0; i < att_.size(); ++i)
            if (att_[i] && !other.att_[i]) return false;
        for (std::size_t k = 0; k < def_.size(); ++k)
            if (def_[k] && !other.def_[k]) return false;
        return true;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    static int count(const std::vector<char>& v) {
        int n = 0;
        for (char c : v) n += (c != 0);
        return n;
    }

    std::vector<char> att_;
    std::vector<char> def_;
};

// Pairwise destruction rates from the current geometry (1/seconds).
struct AttritionRates {
    int n_attackers = 0;
    int n_defenders = 0;
    std::vector<double> att;  // [i*M + k]: attacker i destroyed by defender k
    std::vector<double> def;  // [k*N + i]: defender k destroyed by attacker i
    std::vector<double> hvu;  // [i]: HVU destroyed by attacker i

    double att_rate(int i, int k) const { return att[static_cast<std::size_t>(i) * n_defenders + k]; }
    double def_rate(int k, int i) const { return def[static_cast<std::size_t>(k) * n_attackers + i]; }
    double hvu_rate(int i) const { return hvu[i]; }
};

// Damage kernel Phi(sq_dist / sigma): 1 at zero distance, strictly
// decreasing, -> 0 at long range. Realized as 2*(1 - N(u)) = erfc(u/sqrt(2))
// with N the standard normal CDF.
double damage_kernel(double sq_dist, double sigma);

AttritionRates attrition_rates(const SwarmState& state, const ScenarioConfig& config);

// One step of the product survival recursions. shooter_weights has N+M
// entries (attackers first, then defenders) and scales each shooter's
// contribution: the engines pass current Q values (P1/P2) or 0/1 aliveness
// indicators (P0/P3). Output is entrywise <= input.
SurvivalVector survival_step(const SurvivalVector& q, const AttritionRates& rates,
                             std::span<const double> shooter_weights, double dt);

// Removes alive agent j iff omega_j >= Q_j(t_{k+1}) / Q_j(t_k), the
// conditional survival ratio. omega has N+M entries in [0,1), attackers
// first. Dead agents stay dead regardless of omega.
IndexSet stochastic_index_update(const IndexSet& alive, const SurvivalVector& q_before,
                                 const SurvivalVector& q_after, std::span<const double> omega);

// Removes every alive agent whose Q dropped strictly below tau.
IndexSet threshold_index_update(const IndexSet& alive, const SurvivalVector& q, double tau);

}  // namespace aegis
