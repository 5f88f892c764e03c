#pragma once

// JSON serialization for scenario files. Format documented in
// docs/scenario_format.md; schema_version 1.
//
// Loading is parse-only: structural problems (bad JSON, wrong types, unknown
// enum labels) throw ParseError, while semantic problems are left to
// validate() so tools can report all findings instead of the first.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "honeysim/errors.hpp"
#include "honeysim/scenario.hpp"

namespace honeysim {

inline constexpr int kScenarioSchemaVersion = 1;

namespace detail {

inline NodeKind node_kind_from(const std::string& s) {
    if (s == "real") return NodeKind::Real;
    if (s == "decoy") return NodeKind::Decoy;
    if (s == "honeypot") return NodeKind::Honeypot;
    if (s == "dummy") return NodeKind::Dummy;
    throw ParseError("unknown node kind '" + s + "'");
}

inline VulnKind vuln_kind_from(const std::string& s) {
    if (s == "local") return VulnKind::Local;
    if (s == "remote") return VulnKind::Remote;
    throw ParseError("unknown vulnerability kind '" + s + "'");
}

inline Vulnerability::Effect effect_from(const std::string& s) {
    if (s == "reveal_credentials") return Vulnerability::Effect::RevealCredentials;
    if (s == "reveal_nodes") return Vulnerability::Effect::RevealNodes;
    throw ParseError("unknown vulnerability effect '" + s + "'");
}

} // namespace detail

inline nlohmann::json to_json(const Network& net) {
    using nlohmann::json;
    json j;
    j["schema_version"] = kScenarioSchemaVersion;
    j["foothold"] = net.foothold;
    j["key_terrain"] = net.key_terrain;
    j["inferred_path"] = net.inferred_path;

    j["credentials"] = json::array();
    for (const auto& c : net.credentials) {
        json jc{{"id", c.id}, {"target_node", c.target_node}, {"port", c.port}};
        if (c.honey) jc["honey"] = true;
        j["credentials"].push_back(std::move(jc));
    }

    j["nodes"] = json::array();
    for (const auto& n : net.nodes) {
        json jn;
        jn["id"] = n.id;
        jn["kind"] = to_string(n.kind);
        jn["value"] = n.value;
        jn["services"] = json::array();
        for (const auto& s : n.services)
            jn["services"].push_back(json{{"port", s.port}, {"accepts", s.accepts}});
        jn["vulnerabilities"] = json::array();
        for (const auto& v : n.vulnerabilities) {
            jn["vulnerabilities"].push_back(json{
                {"id", v.id},
                {"kind", to_string(v.kind)},
                {"effect", v.effect == Vulnerability::Effect::RevealCredentials
                               ? "reveal_credentials"
                               : "reveal_nodes"},
                {"reveals", v.reveals},
            });
        }
        jn["stored_credentials"] = n.stored_credentials;
        if (n.clone_of) jn["clone_of"] = *n.clone_of;
        j["nodes"].push_back(std::move(jn));
    }
    return j;
}

inline Network network_from_json(const nlohmann::json& j) {
    try {
        const int version = j.at("schema_version").get<int>();
        if (version != kScenarioSchemaVersion)
            throw ParseError("unsupported scenario schema_version " + std::to_string(version));

        Network net;
        net.foothold = j.at("foothold").get<std::string>();
        net.key_terrain = j.value("key_terrain", std::string{});
        if (j.contains("inferred_path"))
            net.inferred_path = j.at("inferred_path").get<std::vector<std::string>>();

        for (const auto& jc : j.value("credentials", nlohmann::json::array())) {
            Credential c;
            c.id = jc.at("id").get<std::string>();
            c.target_node = jc.at("target_node").get<std::string>();
            c.port = jc.at("port").get<std::string>();
            c.honey = jc.value("honey", false);
            net.credentials.push_back(std::move(c));
        }

        for (const auto& jn : j.at("nodes")) {
            Node n;
            n.id = jn.at("id").get<std::string>();
            n.kind = detail::node_kind_from(jn.value("kind", std::string{"real"}));
            n.value = jn.value("value", std::int64_t{0});
            for (const auto& js : jn.value("services", nlohmann::json::array())) {
                Service s;
                s.port = js.at("port").get<std::string>();
                s.accepts = js.value("accepts", std::vector<std::string>{});
                n.services.push_back(std::move(s));
            }
            for (const auto& jv : jn.value("vulnerabilities", nlohmann::json::array())) {
                Vulnerability v;
                v.id = jv.at("id").get<std::string>();
                v.kind = detail::vuln_kind_from(jv.at("kind").get<std::string>());
                v.effect = detail::effect_from(jv.at("effect").get<std::string>());
                v.reveals = jv.value("reveals", std::vector<std::string>{});
                n.vulnerabilities.push_back(std::move(v));
            }
            n.stored_credentials = jn.value("stored_credentials", std::vector<std::string>{});
            if (jn.contains("clone_of")) n.clone_of = jn.at("clone_of").get<std::string>();
            net.nodes.push_back(std::move(n));
        }
        return net;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string{"malformed scenario: "} + e.what());
    }
}

inline Network load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return network_from_json(j);
}

inline void save_network_file(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw EngineError("cannot write scenario file '" + path + "'");
    out << to_json(net).dump(2) << '\n';
}

} // namespace honeysim
