#pragma once

// Deception augmentor: grows a base scenario with decoys, honeypots,
// honeytokens and honeylinks without touching the real topology's semantics.
//
// A decoy clones a real node's service surface. It cannot be owned and
// carries no vulnerabilities; its planted honey credential leaks through the
// same channels that leak the original's credential, so an attacker who found
// the real credential has usually found the bait too.
//
// A honeypot is an ownable decoy: its mirrored service accepts the planted
// honey credential, owning it is worth nothing, and its only local actions
// are bait (a credential harvest yielding honeytokens that claim to open
// real nodes, and share links leading to inert dummy machines).

#include <string>
#include <vector>

#include "honeysim/errors.hpp"
#include "honeysim/scenario.hpp"

namespace honeysim {

enum class DeceptionKind : std::uint8_t { Decoy, Honeypot };

enum class PlacementStrategy : std::uint8_t { Frontloaded, Backloaded, AtPathIndex };

inline const char* to_string(DeceptionKind k) {
    return k == DeceptionKind::Decoy ? "decoy" : "honeypot";
}

inline const char* to_string(PlacementStrategy s) {
    switch (s) {
        case PlacementStrategy::Frontloaded: return "frontloaded";
        case PlacementStrategy::Backloaded: return "backloaded";
        case PlacementStrategy::AtPathIndex: return "at-path-index";
    }
    return "?";
}

struct PlacementSpec {
    DeceptionKind kind = DeceptionKind::Decoy;
    PlacementStrategy strategy = PlacementStrategy::Frontloaded;
    int count = 0;    // quantity for front/backloaded; 1-based path index otherwise
    int tokens = 2;   // honeytokens stocked per honeypot
    int links = 2;    // honeylinks (dummy machines) per honeypot

    static PlacementSpec frontloaded(DeceptionKind k, int quantity) {
        return {k, PlacementStrategy::Frontloaded, quantity, 2, 2};
    }
    static PlacementSpec backloaded(DeceptionKind k, int quantity) {
        return {k, PlacementStrategy::Backloaded, quantity, 2, 2};
    }
    static PlacementSpec at_index(DeceptionKind k, int index) {
        return {k, PlacementStrategy::AtPathIndex, index, 2, 2};
    }
};

namespace detail {

inline std::string free_node_id(const Network& net, const std::string& base) {
    if (!net.find_node(base)) return base;
    for (int i = 2;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!net.find_node(candidate)) return candidate;
    }
}

inline std::string first_port(const Node& n, const std::string& fallback) {
    return n.services.empty() ? fallback : n.services.front().port;
}

// Leaks `honey_id` through every channel that leaks a credential opening
// `target`: reveal lists of credential vulnerabilities and stored-credential
// lists. Lateral-movement channels and bait stay aligned.
inline void plant_alongside(Network& net, const std::string& target, const std::string& honey_id) {
    std::vector<std::string> target_creds;
    for (const auto& c : net.credentials)
        if (c.target_node == target) target_creds.push_back(c.id);
    auto matches = [&](const std::string& id) {
        for (const auto& tc : target_creds)
            if (tc == id) return true;
        return false;
    };
    for (auto& n : net.nodes) {
        for (auto& v : n.vulnerabilities) {
            if (v.effect != Vulnerability::Effect::RevealCredentials) continue;
            bool hit = false;
            for (const auto& id : v.reveals)
                if (matches(id)) { hit = true; break; }
            if (hit) v.reveals.push_back(honey_id);
        }
        bool stored = false;
        for (const auto& id : n.stored_credentials)
            if (matches(id)) { stored = true; break; }
        if (stored) n.stored_credentials.push_back(honey_id);
    }
}

// Makes the clone discoverable wherever the original is: every reveal list
// naming `target` also names `clone`.
inline void mirror_discovery(Network& net, const std::string& target, const std::string& clone) {
    for (auto& n : net.nodes)
        for (auto& v : n.vulnerabilities) {
            if (v.effect != Vulnerability::Effect::RevealNodes) continue;
            bool hit = false;
            for (const auto& id : v.reveals)
                if (id == target) { hit = true; break; }
            if (hit) v.reveals.push_back(clone);
        }
}

} // namespace detail

// Adds a decoy cloning `target`. Returns the decoy's id.
inline std::string add_decoy(Network& net, const std::string& target) {
    const Node* orig = net.find_node(target);
    if (!orig) throw ValidationError("cannot clone unknown node '" + target + "'");

    const std::string id = detail::free_node_id(net, target + ".decoy");
    Credential honey{id + "-cred", id, detail::first_port(*orig, "HTTPS"), true};

    Node decoy;
    decoy.id = id;
    decoy.kind = NodeKind::Decoy;
    decoy.value = 0;
    decoy.clone_of = target;
    for (const auto& s : orig->services)
        decoy.services.push_back(Service{s.port, {honey.id}});
    decoy.stored_credentials = {honey.id};

    net.credentials.push_back(honey);
    net.nodes.push_back(std::move(decoy));
    detail::plant_alongside(net, target, honey.id);
    detail::mirror_discovery(net, target, id);
    return id;
}

// Adds a honeypot cloning `target`, stocked with `tokens` honeytokens and
// `links` honeylinks. Token j claims to open the real node `tokens_claim[j]`;
// claims rotate through the inferred path so bait points at machines the
// attacker actually wants. Returns the honeypot's id.
inline std::string add_honeypot(Network& net, const std::string& target, int tokens = 2,
                                int links = 2) {
    const Node* orig = net.find_node(target);
    if (!orig) throw ValidationError("cannot clone unknown node '" + target + "'");
    if (tokens < 0 || links < 0) throw ValidationError("honeypot loadout must be non-negative");

    const std::string id = detail::free_node_id(net, target + ".honeypot");
    Credential access{id + "-cred", id, detail::first_port(*orig, "HTTPS"), true};

    Node hp;
    hp.id = id;
    hp.kind = NodeKind::Honeypot;
    hp.value = 0;
    hp.clone_of = target;
    for (const auto& s : orig->services)
        hp.services.push_back(Service{s.port, {access.id}});
    hp.stored_credentials = {access.id};

    // Where the original sits on the inferred path, so token claims can
    // rotate through later path entries.
    int path_pos = -1;
    for (std::size_t i = 0; i < net.inferred_path.size(); ++i)
        if (net.inferred_path[i] == target) { path_pos = int(i); break; }

    std::vector<Credential> minted{access};
    if (tokens > 0) {
        Vulnerability harvest{"credential-harvest", VulnKind::Local,
                              Vulnerability::Effect::RevealCredentials, {}};
        for (int j = 1; j <= tokens; ++j) {
            std::string claim = target;
            if (path_pos >= 0 && !net.inferred_path.empty())
                claim = net.inferred_path[(path_pos + j) % net.inferred_path.size()];
            const Node* claimed = net.find_node(claim);
            Credential token{id + "-token-" + std::to_string(j), claim,
                             detail::first_port(*claimed, "HTTPS"), true};
            harvest.reveals.push_back(token.id);
            hp.stored_credentials.push_back(token.id);
            minted.push_back(std::move(token));
        }
        hp.vulnerabilities.push_back(std::move(harvest));
    }

    // Honeylinks are visible from outside the honeypot (remote), luring the
    // attacker toward dummy nodes before it ever controls the box.
    std::vector<Node> dummies;
    for (int j = 1; j <= links; ++j) {
        Node dummy;
        dummy.id = id + "-dummy-" + std::to_string(j);
        dummy.kind = NodeKind::Dummy;
        dummy.value = 0;
        hp.vulnerabilities.push_back(Vulnerability{"share-link-" + std::to_string(j),
                                                   VulnKind::Remote,
                                                   Vulnerability::Effect::RevealNodes,
                                                   {dummy.id}});
        dummies.push_back(std::move(dummy));
    }

    for (auto& c : minted) net.credentials.push_back(std::move(c));
    net.nodes.push_back(std::move(hp));
    for (auto& d : dummies) net.nodes.push_back(std::move(d));
    detail::plant_alongside(net, target, access.id);
    detail::mirror_discovery(net, target, id);
    return id;
}

// Which path entries a placement covers, as 0-based indices into
// inferred_path, in ascending order.
inline std::vector<int> placement_indices(const Network& net, const PlacementSpec& spec) {
    const int n = int(net.inferred_path.size());
    switch (spec.strategy) {
        case PlacementStrategy::Frontloaded: {
            if (spec.count < 0 || spec.count > n)
                throw ValidationError("placement quantity out of range");
            std::vector<int> out;
            for (int i = 0; i < spec.count; ++i) out.push_back(i);
            return out;
        }
        case PlacementStrategy::Backloaded: {
            if (spec.count < 0 || spec.count > n)
                throw ValidationError("placement quantity out of range");
            std::vector<int> out;
            for (int i = n - spec.count; i < n; ++i) out.push_back(i);
            return out;
        }
        case PlacementStrategy::AtPathIndex: {
            if (spec.count < 1 || spec.count > n)
                throw ValidationError("placement index out of range");
            return {spec.count - 1};
        }
    }
    return {};
}

// Returns an augmented copy of `base`; the input is never modified.
inline Network apply_placement(const Network& base, const PlacementSpec& spec) {
    Network net = base;
    for (int idx : placement_indices(net, spec)) {
        const std::string& target = net.inferred_path[std::size_t(idx)];
        if (spec.kind == DeceptionKind::Decoy)
            add_decoy(net, target);
        else
            add_honeypot(net, target, spec.tokens, spec.links);
    }
    return net;
}

} // namespace honeysim
