#pragma once

// Experiment configuration: which scenario, which agents, which deception
// placements, how many episodes/seeds. JSON format documented in
// docs/config_format.md; named presets reproduce the standard sweeps.

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "honeysim/agents.hpp"
#include "honeysim/deception.hpp"
#include "honeysim/engine.hpp"
#include "honeysim/errors.hpp"
#include "honeysim/scenario_io.hpp"

namespace honeysim {

inline constexpr int kConfigSchemaVersion = 1;

struct ExperimentConfig {
    std::string name = "experiment";
    std::string scenario = "builtin:toyctf"; // builtin:<name> or a file path
    std::vector<AgentKind> agents = {AgentKind::Dql, AgentKind::QTab, AgentKind::Cred,
                                     AgentKind::Rand};
    std::vector<PlacementSpec> grid = {PlacementSpec::frontloaded(DeceptionKind::Decoy, 0)};
    int episodes = 250;
    int step_limit = 5000;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    Goal goal = Goal::combined(1.0);
    int workers = 1;
    AgentConfig agent_config;
    std::string out_dir; // optional; flags and environment can override
};

inline std::string grid_key(const PlacementSpec& spec) {
    return std::string{to_string(spec.kind)} + "-" + to_string(spec.strategy) + "-" +
           std::to_string(spec.count);
}

inline Network resolve_scenario(const ExperimentConfig& cfg) {
    if (cfg.scenario == "builtin:toyctf") return builtin_toyctf();
    if (cfg.scenario.rfind("builtin:", 0) == 0)
        throw ParseError("unknown builtin scenario '" + cfg.scenario + "'");
    return load_network_file(cfg.scenario);
}

// -- JSON ---------------------------------------------------------------------

inline nlohmann::json to_json(const PlacementSpec& p) {
    return nlohmann::json{{"kind", to_string(p.kind)},
                          {"strategy", to_string(p.strategy)},
                          {"count", p.count},
                          {"tokens", p.tokens},
                          {"links", p.links}};
}

inline nlohmann::json to_json(const Goal& g) {
    return nlohmann::json{{"kind", to_string(g.kind)}, {"fraction", g.fraction}};
}

inline nlohmann::json to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["schema_version"] = kConfigSchemaVersion;
    j["name"] = cfg.name;
    j["scenario"] = cfg.scenario;
    j["agents"] = nlohmann::json::array();
    for (auto a : cfg.agents) j["agents"].push_back(to_string(a));
    j["grid"] = nlohmann::json::array();
    for (const auto& p : cfg.grid) j["grid"].push_back(to_json(p));
    j["episodes"] = cfg.episodes;
    j["step_limit"] = cfg.step_limit;
    j["seeds"] = cfg.seeds;
    j["goal"] = to_json(cfg.goal);
    j["workers"] = cfg.workers;
    const AgentConfig d;
    const AgentConfig& a = cfg.agent_config;
    j["agent_config"] = nlohmann::json{
        {"epsilon_start", a.epsilon.start}, {"epsilon_floor", a.epsilon.floor},
        {"epsilon_decay", a.epsilon.decay}, {"alpha", a.alpha},
        {"gamma", a.gamma},                 {"lr", a.lr},
        {"hidden", a.hidden},               {"batch", a.batch},
        {"replay_capacity", a.replay_capacity},
        {"target_sync", a.target_sync},     {"train_period", a.train_period},
        {"reward_scale", a.reward_scale}};
    (void)d;
    if (!cfg.out_dir.empty()) j["out_dir"] = cfg.out_dir;
    return j;
}

inline DeceptionKind deception_kind_from(const std::string& s) {
    if (s == "decoy") return DeceptionKind::Decoy;
    if (s == "honeypot") return DeceptionKind::Honeypot;
    throw ParseError("unknown deception kind '" + s + "'");
}

inline PlacementStrategy strategy_from(const std::string& s) {
    if (s == "frontloaded") return PlacementStrategy::Frontloaded;
    if (s == "backloaded") return PlacementStrategy::Backloaded;
    if (s == "at-path-index") return PlacementStrategy::AtPathIndex;
    throw ParseError("unknown placement strategy '" + s + "'");
}

inline PlacementSpec placement_from_json(const nlohmann::json& j) {
    PlacementSpec p;
    p.kind = deception_kind_from(j.at("kind").get<std::string>());
    p.strategy = strategy_from(j.at("strategy").get<std::string>());
    p.count = j.at("count").get<int>();
    p.tokens = j.value("tokens", 2);
    p.links = j.value("links", 2);
    return p;
}

inline Goal goal_from_json(const nlohmann::json& j) {
    Goal g;
    const std::string kind = j.value("kind", std::string{"combined"});
    if (kind == "network-ownership") g.kind = Goal::Kind::NetworkOwnership;
    else if (kind == "key-terrain") g.kind = Goal::Kind::KeyTerrain;
    else if (kind == "combined") g.kind = Goal::Kind::Combined;
    else throw ParseError("unknown goal kind '" + kind + "'");
    g.fraction = j.value("fraction", 1.0);
    if (g.fraction < 0.0 || g.fraction > 1.0)
        throw ParseError("goal fraction must be within [0, 1]");
    return g;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    try {
        const int version = j.value("schema_version", kConfigSchemaVersion);
        if (version != kConfigSchemaVersion)
            throw ParseError("unsupported config schema_version " + std::to_string(version));

        ExperimentConfig cfg;
        cfg.name = j.value("name", cfg.name);
        cfg.scenario = j.value("scenario", cfg.scenario);
        if (j.contains("agents")) {
            cfg.agents.clear();
            for (const auto& ja : j.at("agents")) {
                auto kind = agent_kind_from(ja.get<std::string>());
                if (!kind) throw ParseError("unknown agent '" + ja.get<std::string>() + "'");
                cfg.agents.push_back(*kind);
            }
        }
        if (j.contains("grid")) {
            cfg.grid.clear();
            for (const auto& jp : j.at("grid")) cfg.grid.push_back(placement_from_json(jp));
        }
        cfg.episodes = j.value("episodes", cfg.episodes);
        cfg.step_limit = j.value("step_limit", cfg.step_limit);
        if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        if (j.contains("goal")) cfg.goal = goal_from_json(j.at("goal"));
        cfg.workers = j.value("workers", cfg.workers);
        if (j.contains("agent_config")) {
            const auto& ja = j.at("agent_config");
            AgentConfig& a = cfg.agent_config;
            a.epsilon.start = ja.value("epsilon_start", a.epsilon.start);
            a.epsilon.floor = ja.value("epsilon_floor", a.epsilon.floor);
            a.epsilon.decay = ja.value("epsilon_decay", a.epsilon.decay);
            a.alpha = ja.value("alpha", a.alpha);
            a.gamma = ja.value("gamma", a.gamma);
            a.lr = ja.value("lr", a.lr);
            a.hidden = ja.value("hidden", a.hidden);
            a.batch = ja.value("batch", a.batch);
            a.replay_capacity = ja.value("replay_capacity", a.replay_capacity);
            a.target_sync = ja.value("target_sync", a.target_sync);
            a.train_period = ja.value("train_period", a.train_period);
            a.reward_scale = ja.value("reward_scale", a.reward_scale);
        }
        cfg.out_dir = j.value("out_dir", cfg.out_dir);

        if (cfg.episodes <= 0) throw ParseError("episodes must be positive");
        if (cfg.step_limit <= 0) throw ParseError("step_limit must be positive");
        if (cfg.seeds.empty()) throw ParseError("seeds must be non-empty");
        if (cfg.agents.empty()) throw ParseError("agents must be non-empty");
        if (cfg.grid.empty()) throw ParseError("grid must be non-empty");
        if (cfg.workers < 1) throw ParseError("workers must be at least 1");
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string{"malformed config: "} + e.what());
    }
}

// Accepts a config file or a manifest file (which embeds one under "config").
inline ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    if (j.contains("config")) return config_from_json(j.at("config"));
    return config_from_json(j);
}

inline void save_config_file(const ExperimentConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw EngineError("cannot write config file '" + path + "'");
    out << to_json(cfg).dump(2) << '\n';
}

// -- presets -------------------------------------------------------------------

inline std::vector<std::string> preset_names() {
    return {"quantity-decoys", "quantity-honeypots", "location-decoys",
            "location-honeypots", "frontback"};
}

inline ExperimentConfig make_preset(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.grid.clear();
    if (name == "quantity-decoys") {
        for (int k = 0; k <= 9; ++k)
            cfg.grid.push_back(PlacementSpec::frontloaded(DeceptionKind::Decoy, k));
    } else if (name == "quantity-honeypots") {
        for (int k = 0; k <= 9; ++k)
            cfg.grid.push_back(PlacementSpec::frontloaded(DeceptionKind::Honeypot, k));
    } else if (name == "location-decoys") {
        for (int i = 1; i <= 9; ++i)
            cfg.grid.push_back(PlacementSpec::at_index(DeceptionKind::Decoy, i));
    } else if (name == "location-honeypots") {
        for (int i = 1; i <= 9; ++i)
            cfg.grid.push_back(PlacementSpec::at_index(DeceptionKind::Honeypot, i));
    } else if (name == "frontback") {
        cfg.grid.push_back(PlacementSpec::frontloaded(DeceptionKind::Decoy, 5));
        cfg.grid.push_back(PlacementSpec::backloaded(DeceptionKind::Decoy, 5));
    } else {
        throw ParseError("unknown preset '" + name + "'");
    }
    return cfg;
}

} // namespace honeysim
