#include "aegis/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "aegis/rng.hpp"

namespace aegis {

namespace {

struct RunCurves {
    std::vector<double> att, def, hvu;
    bool destroyed = false;
};

// Hold the last value out to t_f so early-terminated runs stay aligned.
void extend_held(std::vector<double>& v, std::size_t len) {
    if (v.empty()) v.push_back(1.0);
    while (v.size() < len) v.push_back(v.back());
}

}  // namespace

EnsembleSummary run_ensemble(const ValidatedConfig& config, const TrajectoryParams& trajectories,
                             int runs, std::uint64_t master_seed, int n_threads) {
    if (runs < 1) throw std::invalid_argument("runs must be at least 1");
    const std::size_t len = static_cast<std::size_t>(config->n_steps) + 1;

    std::vector<RunCurves> results(runs);
    std::vector<std::string> errors(runs);
    std::atomic<int> next{0};

    auto worker = [&]() {
        RunOptions opts;
        opts.snapshot_stride = 0;
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= runs) return;
            try {
                SimResult r =
                    run(config, trajectories, EngineKind::p0(derive_seed(master_seed, idx)), opts);
                RunCurves& rc = results[idx];
                rc.att = std::move(r.attacker_curve);
                rc.def = std::move(r.defender_curve);
                rc.hvu = std::move(r.hvu_curve);
                rc.destroyed = r.hvu_destroyed;
                extend_held(rc.att, len);
                extend_held(rc.def, len);
                extend_held(rc.hvu, len);
            } catch (const std::exception& e) {
                errors[idx] = e.what();
            }
        }
    };

    int threads = n_threads > 0 ? n_threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, runs));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (int idx = 0; idx < runs; ++idx)
        if (!errors[idx].empty())
            throw std::runtime_error("run " + std::to_string(idx) + ": " + errors[idx]);

    EnsembleSummary summary;
    summary.runs = runs;
    summary.mean_attacker_survival.assign(len, 0.0);
    summary.mean_defender_survival.assign(len, 0.0);
    summary.mean_hvu_survival.assign(len, 0.0);
    int destroyed = 0;
    for (int idx = 0; idx < runs; ++idx) {  // ordered reduction
        const RunCurves& rc = results[idx];
        for (std::size_t k = 0; k < len; ++k) {
            summary.mean_attacker_survival[k] += rc.att[k];
            summary.mean_defender_survival[k] += rc.def[k];
            summary.mean_hvu_survival[k] += rc.hvu[k];
        }
        destroyed += rc.destroyed ? 1 : 0;
    }
    for (std::size_t k = 0; k < len; ++k) {
        summary.mean_attacker_survival[k] /= runs;
        summary.mean_defender_survival[k] /= runs;
        summary.mean_hvu_survival[k] /= runs;
    }
    const double f = static_cast<double>(destroyed) / runs;
    summary.hvu_destruction_frequency = f;
    summary.hvu_destruction_se = std::sqrt(f * (1.0 - f) / runs);
    return summary;
}

namespace {

double linf(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

EngineComparison compare_one(const ValidatedConfig& config, const TrajectoryParams& trajectories,
                             const EngineKind& engine, const EnsembleSummary& p0) {
    RunOptions opts;
    opts.snapshot_stride = 0;
    SimResult r = run(config, trajectories, engine, opts);
    EngineComparison cmp;
    cmp.attacker_curve = std::move(r.attacker_curve);
    cmp.defender_curve = std::move(r.defender_curve);
    cmp.hvu_curve = std::move(r.hvu_curve);
    cmp.terminal_hvu_survival = cmp.hvu_curve.back();
    cmp.delta_terminal =
        std::abs(cmp.terminal_hvu_survival - p0.mean_hvu_survival.back());
    cmp.hvu_linf = linf(cmp.hvu_curve, p0.mean_hvu_survival);
    cmp.attacker_linf = linf(cmp.attacker_curve, p0.mean_attacker_survival);
    cmp.defender_linf = linf(cmp.defender_curve, p0.mean_defender_survival);
    return cmp;
}

}  // namespace

ComparisonReport compare_engines(const ValidatedConfig& config, const TrajectoryParams& trajectories,
                                 int runs, std::uint64_t master_seed, int n_threads) {
    ComparisonReport report;
    report.runs = runs;
    report.p0 = run_ensemble(config, trajectories, runs, master_seed, n_threads);
    report.p1 = compare_one(config, trajectories, EngineKind::p1(), report.p0);
    report.p2 = compare_one(config, trajectories, EngineKind::p2(), report.p0);
    report.p3 = compare_one(config, trajectories, EngineKind::p3(), report.p0);
    return report;
}

}  // namespace aegis
