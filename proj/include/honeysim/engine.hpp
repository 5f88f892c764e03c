#pragma once

// Episode engine: compiles a validated Network into an integer-indexed form
// and steps attacker actions over a copyable SimState.
//
// Action model (attacker view):
//   Local    run a vulnerability on an owned node
//   Remote   run a vulnerability on a discovered, non-owned node from any
//            owned node
//   Connect  present a cached credential to a service port on any
//            discovered node, from anywhere
//
// Reward schedule, applied per step:
//   exploit use            -1     every local/remote exploit action
//   exploit worked        +50     first firing that reveals something new
//   repeated action        -1     exact action key seen before (total)
//   wrong password        -10     rejected non-honey credential
//   honeytoken use        -10     honey credential, then -1 per reuse
//   decoy/honeypot touch -100     first contact per node, then -1
//   control of node       +node.value (real), 0 (honeypot)
//   win                 +5000
//
// The engine is immutable and safe to share across threads; each episode
// owns its SimState.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "honeysim/errors.hpp"
#include "honeysim/scenario.hpp"

namespace honeysim {

namespace reward {
inline constexpr std::int64_t kExploitUse = -1;
inline constexpr std::int64_t kExploitWorked = 50;
inline constexpr std::int64_t kRepeatedAction = -1;
inline constexpr std::int64_t kWrongPassword = -10;
inline constexpr std::int64_t kHoneytokenUse = -10;
inline constexpr std::int64_t kDeceptionTouch = -100;
inline constexpr std::int64_t kReuse = -1;
inline constexpr std::int64_t kWin = 5000;
} // namespace reward

enum class ActionKind : std::uint8_t { Local, Remote, Connect };

// Field meaning by kind:
//   Local:   a = node, b = vulnerability, c unused
//   Remote:  a = source node, b = target node, c = vulnerability
//   Connect: a = target node, b = port, c = credential
struct Action {
    ActionKind kind = ActionKind::Local;
    std::uint16_t a = 0;
    std::uint16_t b = 0;
    std::uint16_t c = 0;

    bool operator==(const Action&) const = default;
};

enum class EventKind : std::uint8_t {
    ExploitUse,          // entity: vulnerability index
    NodesRevealed,       // entity: count of newly discovered nodes
    CredentialsRevealed, // entity: count of newly cached credentials
    ExploitFailed,       // entity: vulnerability index (fired, nothing new)
    RepeatedAction,      // entity: -1
    WrongPassword,       // entity: credential index
    HoneytokenUsed,      // entity: credential index
    DecoyTouched,        // entity: node index
    HoneypotTouched,     // entity: node index
    HoneypotOwned,       // entity: node index
    HoneylinkFollowed,   // entity: count of newly discovered dummies
    NodeOwned,           // entity: node index
    Win,                 // entity: -1
};

inline const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::ExploitUse: return "exploit-use";
        case EventKind::NodesRevealed: return "nodes-revealed";
        case EventKind::CredentialsRevealed: return "credentials-revealed";
        case EventKind::ExploitFailed: return "exploit-failed";
        case EventKind::RepeatedAction: return "repeated-action";
        case EventKind::WrongPassword: return "wrong-password";
        case EventKind::HoneytokenUsed: return "honeytoken-used";
        case EventKind::DecoyTouched: return "decoy-touched";
        case EventKind::HoneypotTouched: return "honeypot-touched";
        case EventKind::HoneypotOwned: return "honeypot-owned";
        case EventKind::HoneylinkFollowed: return "honeylink-followed";
        case EventKind::NodeOwned: return "node-owned";
        case EventKind::Win: return "win";
    }
    return "?";
}

inline std::optional<EventKind> event_kind_from(const std::string& s) {
    for (int i = 0; i <= int(EventKind::Win); ++i)
        if (s == to_string(EventKind(i))) return EventKind(i);
    return std::nullopt;
}

// High-confidence defender alerts. Honeylink follows and dummy probes waste
// attacker effort but do not alert anyone.
inline bool is_detection(EventKind k) {
    return k == EventKind::DecoyTouched || k == EventKind::HoneypotTouched ||
           k == EventKind::HoneytokenUsed;
}

// Where a step's effort went: forward progress, fumbling against real
// infrastructure, or interaction with a deceptive element (deceptive target
// node, or a honey credential presented anywhere).
enum class StepClass { Productive, WastedReal, WastedDeceptive };

struct StepEvent {
    EventKind kind = EventKind::ExploitUse;
    std::int32_t entity = -1;
    std::int64_t delta = 0;
};

// A step raises at most three events (e.g. exploit use + reveal, or node
// owned + win).
struct StepResult {
    std::int64_t delta = 0;
    bool done = false;
    bool win = false;
    std::uint8_t n = 0;
    StepEvent events[3];

    void push(EventKind k, std::int32_t entity, std::int64_t d) {
        events[n++] = StepEvent{k, entity, d};
        delta += d;
    }
    // The step's outcome is its last event; earlier ones are bookkeeping.
    EventKind outcome() const { return events[n - 1].kind; }
};

struct Goal {
    enum class Kind : std::uint8_t { NetworkOwnership, KeyTerrain, Combined };
    Kind kind = Kind::Combined;
    double fraction = 1.0; // of real non-foothold nodes, for ownership goals

    static Goal ownership(double f) { return {Kind::NetworkOwnership, f}; }
    static Goal key_terrain() { return {Kind::KeyTerrain, 1.0}; }
    static Goal combined(double f = 1.0) { return {Kind::Combined, f}; }

    bool operator==(const Goal&) const = default;
};

inline const char* to_string(Goal::Kind k) {
    switch (k) {
        case Goal::Kind::NetworkOwnership: return "network-ownership";
        case Goal::Kind::KeyTerrain: return "key-terrain";
        case Goal::Kind::Combined: return "combined";
    }
    return "?";
}

// Per-episode mutable state. Plain data, cheap to copy, one owner per
// episode.
struct SimState {
    std::vector<std::uint8_t> owned;
    std::vector<std::uint8_t> discovered;
    std::vector<std::uint8_t> touched;        // decoy/honeypot first-contact done
    std::vector<std::uint8_t> cred_cached;
    std::vector<std::uint8_t> cred_used_real; // credential opened a real node
    std::vector<std::uint8_t> token_used;     // honey credential presented somewhere
    std::unordered_set<std::uint64_t> memo;   // canonical keys of past actions

    std::int32_t owned_real = 0;              // non-foothold real nodes owned
    std::int64_t cumulative_reward = 0;
    std::int32_t steps = 0;
    std::int32_t step_limit = 0;
    std::uint64_t seed = 0;                   // episode label, not used by the engine
    bool done = false;
    bool win = false;

    std::int32_t detections = 0;              // actions touching deceptive elements
    std::int32_t first_detection_step = -1;
    std::int32_t wasted_real = 0;             // unproductive actions on real nodes
    std::int32_t wasted_deceptive = 0;        // actions spent on deceptive elements
};

class Engine {
  public:
    explicit Engine(const Network& net, Goal goal = Goal::combined())
        : goal_(goal) {
        compile(net);
    }

    // -- network accessors ---------------------------------------------------

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t credential_count() const { return creds_.size(); }
    std::size_t port_count() const { return port_names_.size(); }
    std::size_t vulnerability_count() const { return vulns_.size(); }
    const std::string& vulnerability_id(std::size_t i) const { return vulns_[i].id; }
    NodeKind node_kind(std::size_t i) const { return nodes_[i].kind; }
    const std::string& node_id(std::size_t i) const { return nodes_[i].id; }
    const std::string& credential_id(std::size_t i) const { return creds_[i].id; }
    bool credential_honey(std::size_t i) const { return creds_[i].honey; }
    std::uint16_t credential_claim_target(std::size_t i) const { return creds_[i].target; }
    std::uint16_t credential_claim_port(std::size_t i) const { return creds_[i].port; }
    const std::string& port_name(std::size_t i) const { return port_names_[i]; }
    std::uint16_t foothold() const { return foothold_; }
    Goal goal() const { return goal_; }
    std::size_t path_size() const { return path_.size(); }
    std::uint16_t path_node(std::size_t i) const { return path_[i]; }
    std::int32_t real_non_foothold() const { return real_non_foothold_; }

    // Path slot of a node: 0 for the foothold, 1..P for inferred path
    // entries, -1 otherwise (deceptive or off-path).
    int path_slot(std::size_t node) const { return slot_[node]; }

    StepClass classify(const Action& act, EventKind outcome) const {
        const std::uint16_t target = act.kind == ActionKind::Remote ? act.b : act.a;
        const bool deceptive = nodes_[target].kind != NodeKind::Real ||
                               (act.kind == ActionKind::Connect && creds_[act.c].honey);
        if (deceptive) return StepClass::WastedDeceptive;
        switch (outcome) {
            case EventKind::RepeatedAction:
            case EventKind::WrongPassword:
            case EventKind::ExploitFailed:
                return StepClass::WastedReal;
            default:
                return StepClass::Productive;
        }
    }

    // -- episode lifecycle ---------------------------------------------------

    SimState initial_state(std::int32_t step_limit = 5000, std::uint64_t seed = 0) const {
        SimState st;
        st.owned.assign(nodes_.size(), 0);
        st.discovered.assign(nodes_.size(), 0);
        st.touched.assign(nodes_.size(), 0);
        st.cred_cached.assign(creds_.size(), 0);
        st.cred_used_real.assign(creds_.size(), 0);
        st.token_used.assign(creds_.size(), 0);
        st.memo.reserve(256);
        st.step_limit = step_limit;
        st.seed = seed;
        st.owned[foothold_] = 1;
        st.discovered[foothold_] = 1;
        if (goal_met(st)) st.win = true; // degenerate goals are met at reset
        if (st.win || step_limit <= 0) st.done = true;
        return st;
    }

    // Emitted in sorted canonical-key order (connect < local < remote, then
    // key components by name), so "first valid action" is a stable notion.
    void valid_actions(const SimState& st, std::vector<Action>& out) const {
        out.clear();
        if (st.done) return;

        // Connects target any discovered node, owned ones included; pointless
        // retries are the attacker's problem, not the action model's.
        for (std::uint16_t tgt : node_rank_) {
            if (!st.discovered[tgt]) continue;
            for (const auto& svc : nodes_[tgt].services)
                for (std::uint16_t c : cred_rank_)
                    if (st.cred_cached[c])
                        out.push_back(Action{ActionKind::Connect, tgt, svc.port, c});
        }
        for (std::uint16_t node : node_rank_) {
            if (!st.owned[node]) continue;
            for (std::uint16_t v : nodes_[node].local_vulns)
                out.push_back(Action{ActionKind::Local, node, v, 0});
        }
        for (std::uint16_t src : node_rank_) {
            if (!st.owned[src]) continue;
            for (std::uint16_t tgt : node_rank_) {
                if (st.owned[tgt] || !st.discovered[tgt]) continue;
                for (std::uint16_t v : nodes_[tgt].remote_vulns)
                    out.push_back(Action{ActionKind::Remote, src, tgt, v});
            }
        }
    }

    std::vector<Action> valid_actions(const SimState& st) const {
        std::vector<Action> out;
        valid_actions(st, out);
        return out;
    }

    StepResult step(SimState& st, const Action& act) const {
        if (st.done) throw EngineError("step on finished episode");
        st.steps += 1;

        StepResult r;
        const std::uint64_t key = pack(act);
        if (!st.memo.insert(key).second) {
            r.push(EventKind::RepeatedAction, -1, reward::kRepeatedAction);
        } else {
            switch (act.kind) {
                case ActionKind::Local: apply_exploit(st, act.a, act.b, r); break;
                case ActionKind::Remote: apply_exploit(st, act.b, act.c, r); break;
                case ActionKind::Connect: apply_connect(st, act, r); break;
            }
        }

        account(st, act, r);
        st.cumulative_reward += r.delta;
        if (r.win) {
            st.win = true;
            st.done = true;
        } else if (st.steps >= st.step_limit) {
            st.done = true;
        }
        r.done = st.done;
        return r;
    }

    bool goal_met(const SimState& st) const {
        const bool own_ok =
            double(st.owned_real) + 1e-9 >= goal_.fraction * double(real_non_foothold_);
        const bool key_ok = key_terrain_ < 0 || st.owned[std::size_t(key_terrain_)];
        switch (goal_.kind) {
            case Goal::Kind::NetworkOwnership: return own_ok;
            case Goal::Kind::KeyTerrain: return key_ok;
            case Goal::Kind::Combined: return own_ok && key_ok;
        }
        return false;
    }

    // -- serialization -------------------------------------------------------

    std::string action_key(const Action& act) const {
        switch (act.kind) {
            case ActionKind::Local:
                return "local:" + nodes_[act.a].id + ":" + vulns_[act.b].id;
            case ActionKind::Remote:
                return "remote:" + nodes_[act.a].id + ":" + nodes_[act.b].id + ":" +
                       vulns_[act.c].id;
            case ActionKind::Connect:
                return "connect:" + nodes_[act.a].id + ":" + port_names_[act.b] + ":" +
                       creds_[act.c].id;
        }
        return "?";
    }

    // Inverse of action_key. Vulnerability ids resolve within their node, so
    // keys stay unambiguous even when two nodes reuse a vulnerability name.
    std::optional<Action> action_from_key(const std::string& key) const {
        auto split = [](const std::string& s) {
            std::vector<std::string> parts;
            std::size_t start = 0;
            for (std::size_t i = 0; i <= s.size(); ++i)
                if (i == s.size() || s[i] == ':') {
                    parts.push_back(s.substr(start, i - start));
                    start = i + 1;
                }
            return parts;
        };
        const auto parts = split(key);
        auto node_idx = [&](const std::string& id) -> int {
            auto it = node_index_.find(id);
            return it == node_index_.end() ? -1 : int(it->second);
        };
        if (parts.size() == 3 && parts[0] == "local") {
            int n = node_idx(parts[1]);
            if (n < 0) return std::nullopt;
            for (std::uint16_t v : nodes_[std::size_t(n)].local_vulns)
                if (vulns_[v].id == parts[2])
                    return Action{ActionKind::Local, std::uint16_t(n), v, 0};
        } else if (parts.size() == 4 && parts[0] == "remote") {
            int src = node_idx(parts[1]), tgt = node_idx(parts[2]);
            if (src < 0 || tgt < 0) return std::nullopt;
            for (std::uint16_t v : nodes_[std::size_t(tgt)].remote_vulns)
                if (vulns_[v].id == parts[3])
                    return Action{ActionKind::Remote, std::uint16_t(src), std::uint16_t(tgt), v};
        } else if (parts.size() == 4 && parts[0] == "connect") {
            int tgt = node_idx(parts[1]);
            auto pit = port_index_.find(parts[2]);
            auto cit = cred_index_.find(parts[3]);
            if (tgt < 0 || pit == port_index_.end() || cit == cred_index_.end())
                return std::nullopt;
            return Action{ActionKind::Connect, std::uint16_t(tgt), pit->second, cit->second};
        }
        return std::nullopt;
    }

  private:
    struct CompiledService {
        std::uint16_t port = 0;
        std::vector<std::uint16_t> accepts;
    };
    struct CompiledVuln {
        std::string id;
        Vulnerability::Effect effect = Vulnerability::Effect::RevealNodes;
        bool all_dummy = false;              // honeylink: reveals only dummy nodes
        std::vector<std::uint16_t> reveals;  // node or credential indices
    };
    struct CompiledNode {
        std::string id;
        NodeKind kind = NodeKind::Real;
        std::int64_t value = 0;
        std::vector<CompiledService> services;
        std::vector<std::uint16_t> local_vulns;
        std::vector<std::uint16_t> remote_vulns;
    };
    struct CompiledCred {
        std::string id;
        std::uint16_t target = 0;
        std::uint16_t port = 0;
        bool honey = false;
    };

    static std::uint64_t pack(const Action& a) {
        return (std::uint64_t(a.kind) << 48) | (std::uint64_t(a.a) << 32) |
               (std::uint64_t(a.b) << 16) | std::uint64_t(a.c);
    }

    void apply_exploit(SimState& st, std::uint16_t node, std::uint16_t vuln_idx,
                       StepResult& r) const {
        const CompiledVuln& v = vulns_[vuln_idx];
        if (v.all_dummy) {
            std::int32_t fresh = 0;
            for (std::uint16_t t : v.reveals)
                if (!st.discovered[t]) {
                    st.discovered[t] = 1;
                    ++fresh;
                }
            r.push(EventKind::HoneylinkFollowed, fresh, 0);
            return;
        }
        r.push(EventKind::ExploitUse, vuln_idx, reward::kExploitUse);
        std::int32_t fresh = 0;
        if (v.effect == Vulnerability::Effect::RevealNodes) {
            for (std::uint16_t t : v.reveals)
                if (!st.discovered[t]) {
                    st.discovered[t] = 1;
                    ++fresh;
                }
            if (fresh)
                r.push(EventKind::NodesRevealed, fresh, reward::kExploitWorked);
        } else {
            for (std::uint16_t c : v.reveals)
                if (!st.cred_cached[c]) {
                    st.cred_cached[c] = 1;
                    ++fresh;
                }
            if (fresh)
                r.push(EventKind::CredentialsRevealed, fresh, reward::kExploitWorked);
        }
        if (!fresh) r.push(EventKind::ExploitFailed, vuln_idx, 0);
        (void)node;
    }

    void apply_connect(SimState& st, const Action& act, StepResult& r) const {
        const std::uint16_t tgt = act.a;
        const std::uint16_t cred = act.c;
        const CompiledNode& node = nodes_[tgt];

        if (node.kind == NodeKind::Decoy) {
            const std::int64_t d = st.touched[tgt] ? reward::kReuse : reward::kDeceptionTouch;
            st.touched[tgt] = 1;
            r.push(EventKind::DecoyTouched, tgt, d);
            return;
        }

        bool accepted = false;
        for (const auto& svc : node.services) {
            if (svc.port != act.b) continue;
            for (std::uint16_t c : svc.accepts)
                if (c == cred) {
                    accepted = true;
                    break;
                }
            if (accepted) break;
        }

        if (accepted) {
            if (st.owned[tgt]) {
                // Unreachable on validated networks (the owning key is in the
                // memo and acceptance is unique), kept for custom scenarios.
                r.push(EventKind::RepeatedAction, -1, reward::kRepeatedAction);
                return;
            }
            st.owned[tgt] = 1;
            if (node.kind == NodeKind::Honeypot) {
                const std::int64_t d =
                    st.touched[tgt] ? reward::kReuse : reward::kDeceptionTouch;
                st.touched[tgt] = 1;
                r.push(EventKind::HoneypotTouched, tgt, d);
                r.push(EventKind::HoneypotOwned, tgt, 0);
            } else {
                st.owned_real += tgt != foothold_;
                st.cred_used_real[cred] = 1;
                r.push(EventKind::NodeOwned, tgt, node.value);
                if (goal_met(st)) {
                    r.push(EventKind::Win, -1, reward::kWin);
                    r.win = true;
                }
            }
            return;
        }

        if (creds_[cred].honey) {
            const std::int64_t d = st.token_used[cred] ? reward::kReuse : reward::kHoneytokenUse;
            st.token_used[cred] = 1;
            r.push(EventKind::HoneytokenUsed, cred, d);
        } else {
            r.push(EventKind::WrongPassword, cred, reward::kWrongPassword);
        }
    }

    void account(SimState& st, const Action& act, const StepResult& r) const {
        switch (classify(act, r.outcome())) {
            case StepClass::WastedDeceptive: st.wasted_deceptive += 1; break;
            case StepClass::WastedReal: st.wasted_real += 1; break;
            case StepClass::Productive: break;
        }
        for (std::size_t i = 0; i < r.n; ++i)
            if (is_detection(r.events[i].kind)) {
                st.detections += 1;
                if (st.first_detection_step < 0) st.first_detection_step = st.steps;
            }
    }

    void compile(const Network& net) {
        auto fail = [](const std::string& msg) { throw ValidationError(msg); };
        if (net.nodes.empty()) fail("invalid scenario: no foothold (empty network)");

        for (const auto& n : net.nodes) {
            if (!node_index_.emplace(n.id, std::uint16_t(nodes_.size())).second)
                fail("duplicate node id '" + n.id + "'");
            CompiledNode cn;
            cn.id = n.id;
            cn.kind = n.kind;
            cn.value = n.value;
            nodes_.push_back(std::move(cn));
        }
        for (const auto& c : net.credentials) {
            if (!cred_index_.emplace(c.id, std::uint16_t(creds_.size())).second)
                fail("duplicate credential id '" + c.id + "'");
            creds_.push_back(CompiledCred{c.id, 0, 0, c.honey});
        }

        auto node_of = [&](const std::string& id) {
            auto it = node_index_.find(id);
            if (it == node_index_.end())
                throw ValidationError("dangling reference to node '" + id + "'");
            return it->second;
        };
        auto cred_of = [&](const std::string& id) {
            auto it = cred_index_.find(id);
            if (it == cred_index_.end())
                throw ValidationError("dangling reference to credential '" + id + "'");
            return it->second;
        };
        auto port_of = [&](const std::string& label) {
            auto it = port_index_.find(label);
            if (it != port_index_.end()) return it->second;
            const auto idx = std::uint16_t(port_names_.size());
            port_names_.push_back(label);
            port_index_.emplace(label, idx);
            return idx;
        };

        for (std::size_t i = 0; i < net.credentials.size(); ++i) {
            creds_[i].target = node_of(net.credentials[i].target_node);
            creds_[i].port = port_of(net.credentials[i].port);
        }

        for (std::size_t i = 0; i < net.nodes.size(); ++i) {
            const Node& n = net.nodes[i];
            CompiledNode& cn = nodes_[i];
            for (const auto& s : n.services) {
                CompiledService cs;
                cs.port = port_of(s.port);
                for (const auto& cid : s.accepts) cs.accepts.push_back(cred_of(cid));
                cn.services.push_back(std::move(cs));
            }
            for (const auto& v : n.vulnerabilities) {
                CompiledVuln cv;
                cv.id = v.id;
                cv.effect = v.effect;
                if (v.effect == Vulnerability::Effect::RevealNodes) {
                    cv.all_dummy = !v.reveals.empty();
                    for (const auto& id : v.reveals) {
                        const std::uint16_t t = node_of(id);
                        cv.reveals.push_back(t);
                        if (nodes_[t].kind != NodeKind::Dummy) cv.all_dummy = false;
                    }
                } else {
                    for (const auto& id : v.reveals) cv.reveals.push_back(cred_of(id));
                }
                const auto idx = std::uint16_t(vulns_.size());
                vulns_.push_back(std::move(cv));
                (v.kind == VulnKind::Local ? cn.local_vulns : cn.remote_vulns).push_back(idx);
            }
        }

        foothold_ = node_of(net.foothold);
        if (nodes_[foothold_].kind != NodeKind::Real) fail("foothold must be a real node");
        key_terrain_ = net.key_terrain.empty() ? -1 : int(node_of(net.key_terrain));

        slot_.assign(nodes_.size(), -1);
        slot_[foothold_] = 0;
        for (const auto& id : net.inferred_path) {
            path_.push_back(node_of(id));
            slot_[path_.back()] = int(path_.size());
        }

        for (std::size_t i = 0; i < nodes_.size(); ++i)
            real_non_foothold_ +=
                nodes_[i].kind == NodeKind::Real && std::uint16_t(i) != foothold_;

        // Rank tables for canonical-key emission order.
        node_rank_.resize(nodes_.size());
        std::iota(node_rank_.begin(), node_rank_.end(), std::uint16_t(0));
        std::sort(node_rank_.begin(), node_rank_.end(),
                  [&](std::uint16_t a, std::uint16_t b) { return nodes_[a].id < nodes_[b].id; });
        cred_rank_.resize(creds_.size());
        std::iota(cred_rank_.begin(), cred_rank_.end(), std::uint16_t(0));
        std::sort(cred_rank_.begin(), cred_rank_.end(),
                  [&](std::uint16_t a, std::uint16_t b) { return creds_[a].id < creds_[b].id; });
        for (auto& cn : nodes_) {
            auto by_vuln_id = [&](std::uint16_t a, std::uint16_t b) {
                return vulns_[a].id < vulns_[b].id;
            };
            std::sort(cn.local_vulns.begin(), cn.local_vulns.end(), by_vuln_id);
            std::sort(cn.remote_vulns.begin(), cn.remote_vulns.end(), by_vuln_id);
            std::sort(cn.services.begin(), cn.services.end(),
                      [&](const CompiledService& a, const CompiledService& b) {
                          return port_names_[a.port] < port_names_[b.port];
                      });
        }
    }

    Goal goal_;
    std::vector<CompiledNode> nodes_;
    std::vector<CompiledCred> creds_;
    std::vector<CompiledVuln> vulns_;
    std::vector<std::uint16_t> node_rank_;
    std::vector<std::uint16_t> cred_rank_;
    std::vector<std::string> port_names_;
    std::unordered_map<std::string, std::uint16_t> node_index_;
    std::unordered_map<std::string, std::uint16_t> cred_index_;
    std::unordered_map<std::string, std::uint16_t> port_index_;
    std::vector<std::uint16_t> path_;
    std::vector<int> slot_;
    std::uint16_t foothold_ = 0;
    int key_terrain_ = -1;
    std::int32_t real_non_foothold_ = 0;
};

} // namespace honeysim
