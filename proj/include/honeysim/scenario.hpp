#pragma once

// Network scenario model: nodes, services, vulnerabilities, credentials.
//
// A scenario is a directed graph of computing elements. Real nodes carry the
// services and vulnerabilities that let an attacker move laterally; decoy,
// honeypot, and dummy nodes are deceptive additions (see deception.hpp).
// Networks are immutable after construction and safe to share read-only
// across concurrent episode runners.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "honeysim/errors.hpp"

namespace honeysim {

enum class NodeKind : std::uint8_t { Real, Decoy, Honeypot, Dummy };

enum class VulnKind : std::uint8_t { Local, Remote };

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Real: return "real";
        case NodeKind::Decoy: return "decoy";
        case NodeKind::Honeypot: return "honeypot";
        case NodeKind::Dummy: return "dummy";
    }
    return "?";
}

inline const char* to_string(VulnKind k) {
    return k == VulnKind::Local ? "local" : "remote";
}

// A listening service. Connect-and-control succeeds only against a service
// whose accepted set contains the presented credential.
struct Service {
    std::string port;                         // service label, e.g. "HTTPS"
    std::vector<std::string> accepts;         // credential ids

    bool operator==(const Service&) const = default;
};

// What firing a vulnerability yields. Exactly one of the two sets is used,
// selected by `effect`.
struct Vulnerability {
    enum class Effect : std::uint8_t { RevealCredentials, RevealNodes };

    std::string id;
    VulnKind kind = VulnKind::Local;
    Effect effect = Effect::RevealNodes;
    std::vector<std::string> reveals;         // credential ids or node ids

    bool operator==(const Vulnerability&) const = default;
};

// A credential token. target/port is what the token claims to open; whether
// any service actually accepts it is a property of the network. Honey
// credentials are never accepted by a real node.
struct Credential {
    std::string id;
    std::string target_node;
    std::string port;
    bool honey = false;

    bool operator==(const Credential&) const = default;
};

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Real;
    std::int64_t value = 0;                   // ownership reward weight
    std::vector<Service> services;
    std::vector<Vulnerability> vulnerabilities;
    std::vector<std::string> stored_credentials;
    std::optional<std::string> clone_of;      // set for decoys/honeypots

    bool operator==(const Node&) const = default;
};

struct Network {
    std::vector<Node> nodes;                  // order is significant (stable ids)
    std::vector<Credential> credentials;
    std::string foothold;                     // attacker start, always owned
    std::string key_terrain;                  // most valuable asset
    std::vector<std::string> inferred_path;   // ownership order foothold -> key terrain

    bool operator==(const Network&) const = default;

    const Node* find_node(const std::string& id) const {
        for (const auto& n : nodes)
            if (n.id == id) return &n;
        return nullptr;
    }

    Node* find_node(const std::string& id) {
        for (auto& n : nodes)
            if (n.id == id) return &n;
        return nullptr;
    }

    const Credential* find_credential(const std::string& id) const {
        for (const auto& c : credentials)
            if (c.id == id) return &c;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

// One invariant violation. Findings are data, not failures; loaders decide
// whether to treat them as fatal.
struct Finding {
    std::string entity;   // offending node/credential/vulnerability id
    std::string rule;     // stable rule slug, documented in docs/scenario_format.md
    std::string detail;

    bool operator==(const Finding&) const = default;
};

inline std::vector<Finding> validate(const Network& net) {
    std::vector<Finding> out;
    auto flag = [&](const std::string& entity, const char* rule, std::string detail) {
        out.push_back(Finding{entity, rule, std::move(detail)});
    };

    std::unordered_map<std::string, const Node*> node_by_id;
    std::unordered_map<std::string, const Credential*> cred_by_id;

    for (const auto& n : net.nodes) {
        if (n.id.empty()) flag("<node>", "empty-node-name", "node with empty id");
        if (!node_by_id.emplace(n.id, &n).second)
            flag(n.id, "duplicate-node-id", "node id declared more than once");
    }
    for (const auto& c : net.credentials) {
        if (c.id.empty()) flag("<credential>", "empty-credential-id", "credential with empty id");
        if (!cred_by_id.emplace(c.id, &c).second)
            flag(c.id, "duplicate-credential-id", "credential id declared more than once");
    }

    if (net.foothold.empty() || !node_by_id.count(net.foothold)) {
        flag(net.foothold.empty() ? "<network>" : net.foothold, "no-foothold",
             "no foothold: network must name an existing start node");
    } else if (node_by_id.at(net.foothold)->kind != NodeKind::Real) {
        flag(net.foothold, "foothold-not-real", "foothold must be a real node");
    }

    if (!net.key_terrain.empty() && !node_by_id.count(net.key_terrain))
        flag(net.key_terrain, "dangling-reference", "key_terrain names unknown node");
    if (!net.inferred_path.empty() && net.key_terrain != net.inferred_path.back())
        flag(net.key_terrain, "key-terrain-not-last",
             "key terrain must be the last inferred_path entry");
    for (const auto& id : net.inferred_path) {
        auto it = node_by_id.find(id);
        if (it == node_by_id.end())
            flag(id, "dangling-reference", "inferred_path names unknown node");
        else if (it->second->kind != NodeKind::Real)
            flag(id, "path-node-not-real", "inferred_path entries must be real nodes");
    }

    for (const auto& c : net.credentials) {
        if (!node_by_id.count(c.target_node))
            flag(c.id, "dangling-reference",
                 "credential targets unknown node '" + c.target_node + "'");
    }

    // Acceptance counts: a valid credential opens exactly one (node, service)
    // pair; a honey credential opens no real one.
    std::unordered_map<std::string, int> accept_count;
    for (const auto& n : net.nodes) {
        for (const auto& s : n.services) {
            if (s.port.empty()) flag(n.id, "empty-port-label", "service with empty port label");
            for (const auto& cid : s.accepts) {
                auto it = cred_by_id.find(cid);
                if (it == cred_by_id.end()) {
                    flag(n.id, "dangling-reference",
                         "service accepts unknown credential '" + cid + "'");
                    continue;
                }
                ++accept_count[cid];
                if (it->second->honey && n.kind == NodeKind::Real)
                    flag(cid, "honey-credential-accepted-by-real",
                         "honey credential accepted by real node '" + n.id + "'");
            }
        }
        for (const auto& v : n.vulnerabilities) {
            for (const auto& id : v.reveals) {
                const bool known = v.effect == Vulnerability::Effect::RevealCredentials
                                       ? cred_by_id.count(id) > 0
                                       : node_by_id.count(id) > 0;
                if (!known)
                    flag(v.id, "dangling-reference",
                         "vulnerability on '" + n.id + "' reveals unknown id '" + id + "'");
                else if (v.effect == Vulnerability::Effect::RevealNodes &&
                         node_by_id.at(id)->kind == NodeKind::Dummy &&
                         n.kind != NodeKind::Honeypot)
                    flag(v.id, "dummy-not-honeylinked",
                         "dummy node '" + id + "' revealed outside a honeypot");
            }
            if (n.kind == NodeKind::Decoy && v.kind == VulnKind::Local)
                flag(n.id, "decoy-has-local-vuln", "no local actions are available on decoys");
        }
        for (const auto& cid : n.stored_credentials) {
            auto it = cred_by_id.find(cid);
            if (it == cred_by_id.end())
                flag(n.id, "dangling-reference", "stores unknown credential '" + cid + "'");
            else if (n.kind == NodeKind::Honeypot && !it->second->honey)
                flag(n.id, "honeypot-real-credential",
                     "honeypot stores valid credential '" + cid + "'");
        }
        if (n.clone_of && !node_by_id.count(*n.clone_of))
            flag(n.id, "dangling-reference", "clone_of names unknown node '" + *n.clone_of + "'");
        if ((n.kind == NodeKind::Decoy || n.kind == NodeKind::Honeypot) && !n.clone_of)
            flag(n.id, "clone-missing-origin", "decoy/honeypot must record its original");
        if (n.kind == NodeKind::Dummy &&
            !(n.services.empty() && n.vulnerabilities.empty() && n.stored_credentials.empty()))
            flag(n.id, "dummy-not-inert", "dummy nodes carry no services, vulnerabilities or credentials");
        if (n.kind != NodeKind::Real && n.value != 0)
            flag(n.id, "deceptive-node-nonzero-value", "deceptive nodes must have value 0");
    }

    for (const auto& c : net.credentials) {
        const int count = accept_count.count(c.id) ? accept_count.at(c.id) : 0;
        if (!c.honey && count != 1)
            flag(c.id, "valid-credential-acceptance-count",
                 "valid credential accepted by " + std::to_string(count) +
                     " services, expected exactly 1");
    }

    return out;
}

// Throws ValidationError naming the first finding if the network is invalid.
inline void require_valid(const Network& net) {
    auto findings = validate(net);
    if (findings.empty()) return;
    std::string msg = "invalid scenario: ";
    msg += findings.front().rule + " [" + findings.front().entity + "]: " + findings.front().detail;
    if (findings.size() > 1)
        msg += " (+" + std::to_string(findings.size() - 1) + " more)";
    throw ValidationError(msg);
}

// ---------------------------------------------------------------------------
// Built-in capture-the-flag scenario
// ---------------------------------------------------------------------------

// Nine-node CTF network. The attacker starts with a foothold on Client and
// can own the remaining nodes in the inferred order below; each step exposes,
// on the previous node, a scan revealing the next node, and on the node
// itself a remote flaw leaking its own access credential. The two
// [user=monitor] entries are distinct logical nodes modelling privilege
// escalation on Website and AzureResourceManager.
inline Network builtin_toyctf() {
    struct Stage {
        const char* node;
        const char* port;
        const char* cred;
        const char* cred_vuln;   // remote, on the node itself
        const char* scan_vuln;   // local, on the previous node (foothold for stage 1)
    };
    static const Stage stages[] = {
        {"Website", "HTTPS", "website-session", "leaked-session-cookie", "browser-history"},
        {"GitHubProject", "GIT", "github-token", "public-commit-token", "content-scan"},
        {"AzureStorage", "HTTPS", "storage-sas-key", "anonymous-share-listing", "repo-history"},
        {"Website.Directory", "HTTPS", "directory-login", "exposed-backup-file", "blob-manifest"},
        {"Sharepoint", "HTTPS", "sharepoint-service-account", "misconfigured-webpart", "directory-index"},
        {"AzureResourceManager", "HTTPS", "arm-service-principal", "instance-metadata-leak", "site-link-crawl"},
        {"Website[user=monitor]", "SSH", "monitor-ssh-key", "stale-authorized-keys", "resource-inventory"},
        {"AzureResourceManager[user=monitor]", "HTTPS", "arm-monitor-token", "audit-log-token-leak", "monitor-config-audit"},
        {"AzureVM", "SSH", "azurevm-ssh-key", "vm-snapshot-secrets", "deployment-template-scan"},
    };

    Network net;
    net.foothold = "Client";
    net.key_terrain = "AzureVM";

    Node client;
    client.id = "Client";
    client.kind = NodeKind::Real;
    client.value = 1000;
    net.nodes.push_back(client);

    for (const auto& st : stages) {
        net.inferred_path.push_back(st.node);
        net.credentials.push_back(Credential{st.cred, st.node, st.port, false});

        Node n;
        n.id = st.node;
        n.kind = NodeKind::Real;
        n.value = 1000;
        n.services.push_back(Service{st.port, {st.cred}});
        n.vulnerabilities.push_back(Vulnerability{
            st.cred_vuln, VulnKind::Remote, Vulnerability::Effect::RevealCredentials, {st.cred}});
        n.stored_credentials.push_back(st.cred);
        net.nodes.push_back(std::move(n));
    }

    // Scan vulnerability for stage i lives on the previous node.
    for (std::size_t i = 0; i < std::size(stages); ++i) {
        Node* prev = net.find_node(i == 0 ? "Client" : stages[i - 1].node);
        prev->vulnerabilities.push_back(Vulnerability{
            stages[i].scan_vuln, VulnKind::Local, Vulnerability::Effect::RevealNodes,
            {stages[i].node}});
    }

    return net;
}

} // namespace honeysim
