// Simulation engine semantics on the full CTF network: reward values, event
// kinds, deception outcomes, waste/detection accounting, goals, termination.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "honeysim/deception.hpp"
#include "honeysim/engine.hpp"
#include "honeysim/scenario.hpp"

using namespace honeysim;

namespace {

Action act(const Engine& eng, const std::string& key) {
    auto a = eng.action_from_key(key);
    REQUIRE(a.has_value());
    return *a;
}

int node(const Engine& eng, const std::string& id) {
    for (std::size_t i = 0; i < eng.node_count(); ++i)
        if (eng.node_id(i) == id) return int(i);
    return -1;
}

// The hand-scripted optimal walk: scan, leak the next credential, connect,
// repeat down the path. 27 actions, no waste.
std::vector<std::string> optimal_walk() {
    const std::vector<std::pair<std::string, std::string>> chain = {
        {"Website", "leaked-session-cookie"},
        {"GitHubProject", "public-commit-token"},
        {"AzureStorage", "anonymous-share-listing"},
        {"Website.Directory", "exposed-backup-file"},
        {"Sharepoint", "misconfigured-webpart"},
        {"AzureResourceManager", "instance-metadata-leak"},
        {"Website[user=monitor]", "stale-authorized-keys"},
        {"AzureResourceManager[user=monitor]", "audit-log-token-leak"},
        {"AzureVM", "vm-snapshot-secrets"},
    };
    const std::vector<std::pair<std::string, std::string>> scans = {
        {"Client", "browser-history"},
        {"Website", "content-scan"},
        {"GitHubProject", "repo-history"},
        {"AzureStorage", "blob-manifest"},
        {"Website.Directory", "directory-index"},
        {"Sharepoint", "site-link-crawl"},
        {"AzureResourceManager", "resource-inventory"},
        {"Website[user=monitor]", "monitor-config-audit"},
        {"AzureResourceManager[user=monitor]", "deployment-template-scan"},
    };
    const std::vector<std::pair<std::string, std::string>> connects = {
        {"Website", "HTTPS:website-session"},
        {"GitHubProject", "GIT:github-token"},
        {"AzureStorage", "HTTPS:storage-sas-key"},
        {"Website.Directory", "HTTPS:directory-login"},
        {"Sharepoint", "HTTPS:sharepoint-service-account"},
        {"AzureResourceManager", "HTTPS:arm-service-principal"},
        {"Website[user=monitor]", "SSH:monitor-ssh-key"},
        {"AzureResourceManager[user=monitor]", "HTTPS:arm-monitor-token"},
        {"AzureVM", "SSH:azurevm-ssh-key"},
    };
    std::vector<std::string> keys;
    keys.push_back("local:Client:browser-history");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        keys.push_back("remote:Client:" + chain[i].first + ":" + chain[i].second);
        keys.push_back("connect:" + connects[i].first + ":" + connects[i].second);
        if (i + 1 < chain.size())
            keys.push_back("local:" + scans[i + 1].first + ":" + scans[i + 1].second);
    }
    return keys;
}

} // namespace

TEST_CASE("initial state owns exactly the foothold") {
    Engine eng(builtin_toyctf());
    SimState st = eng.initial_state();

    int owned = 0, discovered = 0;
    for (std::size_t i = 0; i < eng.node_count(); ++i) {
        owned += st.owned[i];
        discovered += st.discovered[i];
    }
    CHECK(owned == 1);
    CHECK(discovered == 1);
    CHECK(st.owned[eng.foothold()]);
    CHECK_FALSE(st.done);
    CHECK(st.cumulative_reward == 0);

    // Nothing cached yet, so the only valid actions are the foothold's locals.
    for (const auto& a : eng.valid_actions(st)) CHECK(a.kind == ActionKind::Local);
}

TEST_CASE("scripted optimal walk wins with the exact derived reward") {
    Engine eng(builtin_toyctf());
    SimState st = eng.initial_state();

    std::int64_t sum = 0;
    for (const auto& key : optimal_walk()) {
        REQUIRE_FALSE(st.done);
        const StepResult r = eng.step(st, act(eng, key));
        sum += r.delta;
    }
    // 18 exploits at +49 net, 9 nodes at +1000, the win bonus, free connects.
    CHECK(st.win);
    CHECK(st.done);
    CHECK(st.steps == 27);
    CHECK(st.cumulative_reward == 18 * 49 + 9 * 1000 + 5000);
    CHECK(st.cumulative_reward == sum);
    CHECK(st.wasted_real == 0);
    CHECK(st.wasted_deceptive == 0);
    CHECK(st.detections == 0);
    CHECK(st.first_detection_step == -1);
}

TEST_CASE("exploit reward: worked nets +49, dry refire -1, repeat -1") {
    Engine eng(builtin_toyctf());
    SimState st = eng.initial_state();

    const StepResult scan = eng.step(st, act(eng, "local:Client:browser-history"));
    REQUIRE(scan.n == 2);
    CHECK(scan.events[0].kind == EventKind::ExploitUse);
    CHECK(scan.events[0].delta == -1);
    CHECK(scan.events[1].kind == EventKind::NodesRevealed);
    CHECK(scan.events[1].delta == 50);
    CHECK(scan.delta == 49);

    // Same action again: memoized, flat penalty, no event spam.
    const StepResult again = eng.step(st, act(eng, "local:Client:browser-history"));
    REQUIRE(again.n == 1);
    CHECK(again.outcome() == EventKind::RepeatedAction);
    CHECK(again.delta == -1);

    // A fresh key whose effects all landed already: exploit fires, nothing new.
    eng.step(st, act(eng, "remote:Client:Website:leaked-session-cookie"));
    eng.step(st, act(eng, "connect:Website:HTTPS:website-session"));
    const StepResult dry = eng.step(st, act(eng, "remote:Client:GitHubProject:public-commit-token"));
    CHECK(dry.delta == 49); // leak still fresh here
    const StepResult dry2 = eng.step(st, act(eng, "remote:Website:GitHubProject:public-commit-token"));
    REQUIRE(dry2.n == 2);
    CHECK(dry2.events[1].kind == EventKind::ExploitFailed);
    CHECK(dry2.delta == -1);
}

TEST_CASE("connect outcomes on real nodes") {
    Engine eng(builtin_toyctf());
    SimState st = eng.initial_state();
    eng.step(st, act(eng, "local:Client:browser-history"));
    eng.step(st, act(eng, "remote:Client:Website:leaked-session-cookie"));

    SECTION("wrong real credential costs -10") {
        eng.step(st, act(eng, "remote:Client:GitHubProject:public-commit-token"));
        // github-token is real but does not open the website service.
        const StepResult r = eng.step(st, act(eng, "connect:Website:HTTPS:github-token"));
        REQUIRE(r.n == 1);
        CHECK(r.outcome() == EventKind::WrongPassword);
        CHECK(r.delta == -10);
        CHECK(st.wasted_real == 1);
        CHECK(st.detections == 0);
    }

    SECTION("matching credential takes the node for its value") {
        const StepResult r = eng.step(st, act(eng, "connect:Website:HTTPS:website-session"));
        REQUIRE(r.n == 1);
        CHECK(r.outcome() == EventKind::NodeOwned);
        CHECK(r.delta == 1000);
        CHECK(st.owned[std::size_t(node(eng, "Website"))]);
        CHECK(st.owned_real == 1);
    }
}

TEST_CASE("decoys soak connects and are never owned") {
    Network net = builtin_toyctf();
    add_decoy(net, "Website");
    Engine eng(net);
    SimState st = eng.initial_state();
    eng.step(st, act(eng, "local:Client:browser-history")); // reveals decoy too
    eng.step(st, act(eng, "remote:Client:Website:leaked-session-cookie"));
    const int decoy = node(eng, "Website.decoy");
    REQUIRE(decoy >= 0);
    CHECK(st.discovered[std::size_t(decoy)]);

    // First touch is the expensive one; later probes with other credentials
    // cost -1; exact repeats fall under the repeat penalty instead.
    const StepResult first =
        eng.step(st, act(eng, "connect:Website.decoy:HTTPS:website-session"));
    REQUIRE(first.n == 1);
    CHECK(first.outcome() == EventKind::DecoyTouched);
    CHECK(first.delta == -100);
    CHECK(st.detections == 1);
    CHECK(st.first_detection_step == st.steps);

    const StepResult other =
        eng.step(st, act(eng, "connect:Website.decoy:HTTPS:Website.decoy-cred"));
    CHECK(other.outcome() == EventKind::DecoyTouched);
    CHECK(other.delta == -1);
    CHECK(st.detections == 2);

    const StepResult repeat =
        eng.step(st, act(eng, "connect:Website.decoy:HTTPS:website-session"));
    CHECK(repeat.outcome() == EventKind::RepeatedAction);
    CHECK(repeat.delta == -1);
    CHECK(st.detections == 2); // repeats do not re-alert

    CHECK_FALSE(st.owned[std::size_t(decoy)]);
    CHECK(st.wasted_deceptive == 3);
}

TEST_CASE("honeypots are ownable for zero value and alert on contact") {
    Network net = builtin_toyctf();
    add_honeypot(net, "Website", /*tokens=*/2, /*links=*/1);
    Engine eng(net);
    SimState st = eng.initial_state();
    eng.step(st, act(eng, "local:Client:browser-history"));
    eng.step(st, act(eng, "remote:Client:Website:leaked-session-cookie"));
    const std::string hp = "Website.honeypot";

    // The pot's access credential is planted alongside the real one.
    const StepResult grab = eng.step(st, act(eng, "remote:Client:Website:leaked-session-cookie"));
    CHECK(grab.outcome() == EventKind::RepeatedAction); // already fired above
    bool cached = false;
    for (std::size_t c = 0; c < eng.credential_count(); ++c)
        if (eng.credential_id(c) == hp + "-cred") cached = st.cred_cached[c];
    CHECK(cached);

    const StepResult own = eng.step(st, act(eng, "connect:" + hp + ":HTTPS:" + hp + "-cred"));
    REQUIRE(own.n == 2);
    CHECK(own.events[0].kind == EventKind::HoneypotTouched);
    CHECK(own.events[0].delta == -100);
    CHECK(own.events[1].kind == EventKind::HoneypotOwned);
    CHECK(own.events[1].delta == 0);
    CHECK(st.owned[std::size_t(node(eng, hp))]);
    CHECK(st.owned_real == 0);   // fake ownership counts for nothing
    CHECK(st.detections == 1);
    CHECK_FALSE(st.win);

    SECTION("harvesting the pot pays like an exploit but is classified wasted") {
        const StepResult harvest =
            eng.step(st, act(eng, "local:" + hp + ":credential-harvest"));
        CHECK(harvest.delta == 49);
        CHECK(st.wasted_deceptive >= 2);

        // Spending a honeytoken on a real service alerts, twice alerts twice.
        const StepResult spend =
            eng.step(st, act(eng, "connect:GitHubProject:GIT:" + hp + "-token-1"));
        REQUIRE(spend.n == 1);
        CHECK(spend.outcome() == EventKind::HoneytokenUsed);
        CHECK(spend.delta == -10);
        const int det = st.detections;
        const StepResult respend =
            eng.step(st, act(eng, "connect:AzureStorage:HTTPS:" + hp + "-token-1"));
        CHECK(respend.outcome() == EventKind::HoneytokenUsed);
        CHECK(respend.delta == -1);
        CHECK(st.detections == det + 1);
    }

    SECTION("honeylinks reveal dummies for free and never alert") {
        const int det = st.detections;
        const StepResult follow =
            eng.step(st, act(eng, "remote:Client:" + hp + ":share-link-1"));
        REQUIRE(follow.n == 1);
        CHECK(follow.outcome() == EventKind::HoneylinkFollowed);
        CHECK(follow.delta == 0);
        CHECK(st.detections == det);
        CHECK(st.discovered[std::size_t(node(eng, hp + "-dummy-1"))]);

        // Dummies expose nothing: no service, no vulnerability, no actions.
        for (const auto& a : eng.valid_actions(st)) {
            if (a.kind == ActionKind::Connect)
                CHECK(int(a.a) != node(eng, hp + "-dummy-1"));
            if (a.kind == ActionKind::Remote)
                CHECK(int(a.b) != node(eng, hp + "-dummy-1"));
        }
    }
}

TEST_CASE("goal variants") {
    const Network net = builtin_toyctf();

    SECTION("zero-fraction ownership is met at reset") {
        Engine eng(net, Goal::ownership(0.0));
        SimState st = eng.initial_state();
        CHECK(st.win);
        CHECK(st.done);
        CHECK(eng.valid_actions(st).empty());
    }

    SECTION("partial ownership wins mid-walk") {
        Engine eng(net, Goal::ownership(0.4)); // 4 of 9 real non-foothold nodes
        SimState st = eng.initial_state();
        for (const auto& key : optimal_walk()) {
            if (st.done) break;
            eng.step(st, act(eng, key));
        }
        CHECK(st.win);
        CHECK(st.owned_real == 4);
    }

    SECTION("key terrain goal needs the final node only") {
        Engine eng(net, Goal::key_terrain());
        SimState st = eng.initial_state();
        StepResult last;
        for (const auto& key : optimal_walk()) {
            REQUIRE_FALSE(st.done);
            last = eng.step(st, act(eng, key));
        }
        CHECK(st.win);
        CHECK(last.win);
    }
}

TEST_CASE("episode termination") {
    Engine eng(builtin_toyctf());

    SECTION("step limit finishes the episode") {
        SimState st = eng.initial_state(/*step_limit=*/2);
        eng.step(st, act(eng, "local:Client:browser-history"));
        CHECK_FALSE(st.done);
        eng.step(st, act(eng, "local:Client:browser-history"));
        CHECK(st.done);
        CHECK_FALSE(st.win);
        CHECK_THROWS_AS(eng.step(st, act(eng, "local:Client:browser-history")), EngineError);
    }

    SECTION("valid actions vanish once done") {
        SimState st = eng.initial_state(1);
        eng.step(st, act(eng, "local:Client:browser-history"));
        CHECK(st.done);
        CHECK(eng.valid_actions(st).empty());
    }
}

TEST_CASE("valid actions come out in canonical key order, complete") {
    Network net = builtin_toyctf();
    add_decoy(net, "Website");
    Engine eng(net);
    SimState st = eng.initial_state();
    eng.step(st, act(eng, "local:Client:browser-history"));
    eng.step(st, act(eng, "remote:Client:Website:leaked-session-cookie"));
    eng.step(st, act(eng, "connect:Website:HTTPS:website-session"));

    const auto valid = eng.valid_actions(st);
    REQUIRE_FALSE(valid.empty());

    // Canonical order: connect < local < remote, then component-wise by
    // entity name. Component-wise matters: "Website" sorts before
    // "Website.decoy" even though the joined key strings disagree.
    auto components = [&](const Action& a) {
        std::vector<std::string> c;
        c.push_back(a.kind == ActionKind::Connect ? "0" : a.kind == ActionKind::Local ? "1" : "2");
        switch (a.kind) {
            case ActionKind::Connect:
                c.insert(c.end(), {eng.node_id(a.a), eng.port_name(a.b), eng.credential_id(a.c)});
                break;
            case ActionKind::Local:
                c.insert(c.end(), {eng.node_id(a.a), eng.vulnerability_id(a.b)});
                break;
            case ActionKind::Remote:
                c.insert(c.end(), {eng.node_id(a.a), eng.node_id(a.b), eng.vulnerability_id(a.c)});
                break;
        }
        return c;
    };
    std::vector<Action> sorted = valid;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Action& p, const Action& q) { return components(p) < components(q); });
    CHECK(sorted == valid);

    // Connect completeness: every (discovered node, service, cached credential)
    // triple appears exactly once, owned targets included.
    std::size_t cached = 0;
    for (std::size_t c = 0; c < eng.credential_count(); ++c) cached += st.cred_cached[c];
    std::size_t services_discovered = 0;
    for (std::size_t n = 0; n < eng.node_count(); ++n) {
        if (!st.discovered[n]) continue;
        for (const auto& a : valid)
            if (a.kind == ActionKind::Connect && a.a == n) ++services_discovered;
    }
    std::size_t connects = 0;
    for (const auto& a : valid) connects += a.kind == ActionKind::Connect;
    CHECK(connects == services_discovered);
    CHECK(connects % cached == 0);
}

TEST_CASE("waste classification partitions every step") {
    Network net = builtin_toyctf();
    add_honeypot(net, "Website", 2, 1);
    Engine eng(net);
    SimState st = eng.initial_state();

    // Drive a fixed mixed walk and check the running identity.
    const std::vector<std::string> walk = {
        "local:Client:browser-history",
        "local:Client:browser-history",                       // repeat: wasted-real
        "remote:Client:Website:leaked-session-cookie",
        "connect:Website:HTTPS:Website.honeypot-cred",        // honey cred: deceptive
        "connect:Website:HTTPS:website-session",
        "remote:Client:Website.honeypot:share-link-1",        // honeylink: deceptive
        "local:Website:content-scan",
    };
    int productive = 0;
    for (const auto& key : walk) {
        const Action a = act(eng, key);
        const StepResult r = eng.step(st, a);
        if (eng.classify(a, r.outcome()) == StepClass::Productive) ++productive;
    }
    CHECK(st.steps == int(walk.size()));
    CHECK(productive + st.wasted_real + st.wasted_deceptive == st.steps);
    CHECK(st.wasted_real == 1);
    CHECK(st.wasted_deceptive == 2);
}
