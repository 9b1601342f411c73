#include "aegis/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

namespace aegis {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& known, const char* where) {
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw std::invalid_argument(std::string("unknown ") + where + " key: " + item.key());
}

double get_number(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing config key: ") + key);
    if (!j.at(key).is_number())
        throw std::invalid_argument(std::string("config key must be a number: ") + key);
    return j.at(key).get<double>();
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing config key: ") + key);
    if (!j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("config key must be an integer: ") + key);
    return j.at(key).get<int>();
}

Vec3 get_vec3(const json& j, const char* key) {
    const auto& a = j.at(key);
    if (!a.is_array() || a.size() != 3)
        throw std::invalid_argument(std::string(key) + " must be an array of 3 numbers");
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

}  // namespace

ScenarioConfig config_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    reject_unknown_keys(j,
                        {"n_attackers", "n_defenders", "leader_gain", "damping", "d0", "d1", "s0",
                         "repulsion_gain_intra", "repulsion_gain_def", "lambda_a", "lambda_d",
                         "sigma_a", "sigma_d", "u_max", "dt", "n_steps", "threshold",
                         "bernstein_degree", "layout", "hvu_position"},
                        "config");

    ScenarioConfig c;
    c.n_attackers = get_int(j, "n_attackers");
    c.n_defenders = get_int(j, "n_defenders");
    c.leader_gain = get_number(j, "leader_gain");
    c.damping = get_number(j, "damping");
    c.d0 = get_number(j, "d0");
    c.d1 = get_number(j, "d1");
    c.s0 = get_number(j, "s0");
    c.repulsion_gain_intra = get_number(j, "repulsion_gain_intra");
    c.repulsion_gain_def = get_number(j, "repulsion_gain_def");
    c.lambda_a = get_number(j, "lambda_a");
    c.lambda_d = get_number(j, "lambda_d");
    c.sigma_a = get_number(j, "sigma_a");
    c.sigma_d = get_number(j, "sigma_d");
    c.u_max = get_number(j, "u_max");
    c.dt = get_number(j, "dt");
    c.n_steps = get_int(j, "n_steps");
    if (j.contains("threshold")) c.threshold = get_number(j, "threshold");
    if (j.contains("bernstein_degree")) c.bernstein_degree = get_int(j, "bernstein_degree");
    if (j.contains("hvu_position")) c.hvu_position = get_vec3(j, "hvu_position");

    if (!j.contains("layout")) throw std::invalid_argument("missing config key: layout");
    const json& l = j.at("layout");
    if (!l.is_object()) throw std::invalid_argument("layout must be a JSON object");
    reject_unknown_keys(
        l, {"attacker_radius", "attacker_shell_width", "defender_radius", "min_separation", "seed"},
        "layout");
    c.layout.attacker_radius = get_number(l, "attacker_radius");
    if (l.contains("attacker_shell_width"))
        c.layout.attacker_shell_width = get_number(l, "attacker_shell_width");
    if (l.contains("defender_radius")) c.layout.defender_radius = get_number(l, "defender_radius");
    if (l.contains("min_separation")) c.layout.min_separation = get_number(l, "min_separation");
    if (l.contains("seed")) c.layout.seed = l.at("seed").get<std::uint64_t>();
    return c;
}

json config_to_json(const ScenarioConfig& c) {
    return json{
        {"n_attackers", c.n_attackers},
        {"n_defenders", c.n_defenders},
        {"leader_gain", c.leader_gain},
        {"damping", c.damping},
        {"d0", c.d0},
        {"d1", c.d1},
        {"s0", c.s0},
        {"repulsion_gain_intra", c.repulsion_gain_intra},
        {"repulsion_gain_def", c.repulsion_gain_def},
        {"lambda_a", c.lambda_a},
        {"lambda_d", c.lambda_d},
        {"sigma_a", c.sigma_a},
        {"sigma_d", c.sigma_d},
        {"u_max", c.u_max},
        {"dt", c.dt},
        {"n_steps", c.n_steps},
        {"threshold", c.threshold},
        {"bernstein_degree", c.bernstein_degree},
        {"layout",
         {{"attacker_radius", c.layout.attacker_radius},
          {"attacker_shell_width", c.layout.attacker_shell_width},
          {"defender_radius", c.layout.defender_radius},
          {"min_separation", c.layout.min_separation},
          {"seed", c.layout.seed}}},
        {"hvu_position", {c.hvu_position.x, c.hvu_position.y, c.hvu_position.z}},
    };
}

ValidatedConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config file not found: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("failed to parse config " + path + ": " + e.what());
    }
    return validate(config_from_json(j));
}

TrajectoryParams trajectories_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("trajectories must be a JSON object");
    reject_unknown_keys(j, {"bernstein_degree", "horizon", "defenders"}, "trajectories");
    TrajectoryParams p;
    p.degree = get_int(j, "bernstein_degree");
    p.horizon = get_number(j, "horizon");
    if (p.degree < 0) throw std::invalid_argument("bernstein_degree must be non-negative");

    const json& defs = j.at("defenders");
    if (!defs.is_array()) throw std::invalid_argument("defenders must be an array");
    const int m = static_cast<int>(defs.size());
    p.coeffs.assign(static_cast<std::size_t>(m) * 3 * (p.degree + 1),
                    std::numeric_limits<double>::quiet_NaN());

    std::vector<bool> seen(m, false);
    for (const json& d : defs) {
        reject_unknown_keys(d, {"ordinal", "x", "y", "z"}, "trajectory entry");
        const int k = get_int(d, "ordinal");
        if (k < 0 || k >= m || seen[k])
            throw std::invalid_argument("defender ordinals must cover 0..M-1 exactly once");
        seen[k] = true;
        const char* axes[3] = {"x", "y", "z"};
        for (int axis = 0; axis < 3; ++axis) {
            const json& arr = d.at(axes[axis]);
            if (!arr.is_array() || static_cast<int>(arr.size()) != p.degree + 1)
                throw std::invalid_argument("control point arrays must have degree+1 entries");
            for (int c = 0; c <= p.degree; ++c) {
                const double v = arr[c].get<double>();
                if (!std::isfinite(v))
                    throw std::invalid_argument("control points must be finite");
                p.at(k, axis, c) = v;
            }
        }
    }
    return p;
}

json trajectories_to_json(const TrajectoryParams& p) {
    json defs = json::array();
    for (int k = 0; k < p.n_defenders(); ++k) {
        json entry{{"ordinal", k}};
        const char* axes[3] = {"x", "y", "z"};
        for (int axis = 0; axis < 3; ++axis) {
            json arr = json::array();
            for (int c = 0; c <= p.degree; ++c) arr.push_back(p.at(k, axis, c));
            entry[axes[axis]] = std::move(arr);
        }
        defs.push_back(std::move(entry));
    }
    return json{{"bernstein_degree", p.degree}, {"horizon", p.horizon}, {"defenders", std::move(defs)}};
}

TrajectoryParams load_trajectories_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("trajectories file not found: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("failed to parse trajectories " + path + ": " + e.what());
    }
    return trajectories_from_json(j);
}

void save_trajectories_file(const TrajectoryParams& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trajectories file: " + path);
    out << trajectories_to_json(params).dump(2) << '\n';
}

}  // namespace aegis
