#pragma once

// Serialization of learned policies (Q-table entries, value-net weights) so
// trained agents can be inspected or reloaded for replay.

#include <fstream>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "honeysim/agents.hpp"
#include "honeysim/errors.hpp"

namespace honeysim {

inline constexpr int kPolicySchemaVersion = 1;

// Entries are emitted sorted by key so identical tables serialize to
// identical bytes. Keys stay below 2^48 and survive JSON number round-trips.
inline nlohmann::json policy_to_json(const QTabAgent& agent) {
    std::map<std::uint64_t, double> sorted(agent.table().begin(), agent.table().end());
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : sorted) entries.push_back({k, v});
    return nlohmann::json{{"schema_version", kPolicySchemaVersion},
                          {"policy", "qtable"},
                          {"entries", std::move(entries)}};
}

inline nlohmann::json policy_to_json(const DqlAgent& agent) {
    const Mlp<float>& m = agent.net();
    return nlohmann::json{{"schema_version", kPolicySchemaVersion},
                          {"policy", "valuenet"},
                          {"in", m.in},
                          {"hidden", m.hidden},
                          {"out", m.out},
                          {"w1", m.w1},
                          {"b1", m.b1},
                          {"w2", m.w2},
                          {"b2", m.b2}};
}

namespace detail {

inline nlohmann::json parse_policy(const nlohmann::json& j, const char* expect) {
    if (!j.is_object() || j.value("schema_version", -1) != kPolicySchemaVersion)
        throw ParseError("unsupported policy file schema");
    if (j.value("policy", "") != expect)
        throw ParseError("expected a '" + std::string(expect) + "' policy file");
    return j;
}

} // namespace detail

inline void policy_from_json(const nlohmann::json& j, QTabAgent& agent) {
    try {
        detail::parse_policy(j, "qtable");
        std::unordered_map<std::uint64_t, double> table;
        for (const auto& e : j.at("entries"))
            table.emplace(e.at(0).get<std::uint64_t>(), e.at(1).get<double>());
        agent.set_table(std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad q-table policy: ") + e.what());
    }
}

inline void policy_from_json(const nlohmann::json& j, DqlAgent& agent) {
    try {
        detail::parse_policy(j, "valuenet");
        Mlp<float> m;
        m.in = j.at("in").get<int>();
        m.hidden = j.at("hidden").get<int>();
        m.out = j.at("out").get<int>();
        m.w1 = j.at("w1").get<std::vector<float>>();
        m.b1 = j.at("b1").get<std::vector<float>>();
        m.w2 = j.at("w2").get<std::vector<float>>();
        m.b2 = j.at("b2").get<std::vector<float>>();
        if (m.w1.size() != std::size_t(m.hidden) * std::size_t(m.in) ||
            m.b1.size() != std::size_t(m.hidden) ||
            m.w2.size() != std::size_t(m.out) * std::size_t(m.hidden) ||
            m.b2.size() != std::size_t(m.out))
            throw ParseError("value net arrays do not match the declared shape");
        agent.set_net(std::move(m));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad value net policy: ") + e.what());
    }
}

template <typename AgentT>
void save_policy_file(const std::string& path, const AgentT& agent) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write policy file '" + path + "'");
    out << policy_to_json(agent).dump(2) << '\n';
}

template <typename AgentT>
void load_policy_file(const std::string& path, AgentT& agent) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read policy file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad policy file: ") + e.what());
    }
    policy_from_json(j, agent);
}

} // namespace honeysim
