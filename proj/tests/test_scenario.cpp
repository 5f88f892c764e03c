// Scenario model: the built-in CTF network, the validator rules, and JSON
// round-tripping.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "honeysim/scenario.hpp"
#include "honeysim/scenario_io.hpp"

using namespace honeysim;

namespace {

bool has_finding(const std::vector<Finding>& fs, const std::string& rule,
                 const std::string& entity) {
    for (const auto& f : fs)
        if (f.rule == rule && f.entity == entity) return true;
    return false;
}

} // namespace

TEST_CASE("built-in CTF network has the documented shape") {
    Network net = builtin_toyctf();

    CHECK(validate(net).empty());
    CHECK(net.nodes.size() == 10);
    CHECK(net.credentials.size() == 9);
    CHECK(net.foothold == "Client");
    CHECK(net.key_terrain == "AzureVM");

    const std::vector<std::string> path = {
        "Website",
        "GitHubProject",
        "AzureStorage",
        "Website.Directory",
        "Sharepoint",
        "AzureResourceManager",
        "Website[user=monitor]",
        "AzureResourceManager[user=monitor]",
        "AzureVM",
    };
    CHECK(net.inferred_path == path);

    // Foothold exposes no service; every path node accepts exactly its own
    // credential on exactly one service.
    CHECK(net.find_node("Client")->services.empty());
    for (const auto& id : path) {
        const Node* n = net.find_node(id);
        REQUIRE(n != nullptr);
        CHECK(n->kind == NodeKind::Real);
        CHECK(n->value == 1000);
        REQUIRE(n->services.size() == 1);
        REQUIRE(n->services[0].accepts.size() == 1);
        const Credential* c = net.find_credential(n->services[0].accepts[0]);
        REQUIRE(c != nullptr);
        CHECK(c->target_node == id);
        CHECK(c->port == n->services[0].port);
        CHECK_FALSE(c->honey);
    }

    // Each path node is revealed by a local scan on its predecessor and
    // leaks its own credential through a remote flaw.
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Node* prev = net.find_node(i == 0 ? "Client" : path[i - 1]);
        bool scan_found = false;
        for (const auto& v : prev->vulnerabilities)
            if (v.kind == VulnKind::Local && v.effect == Vulnerability::Effect::RevealNodes &&
                v.reveals == std::vector<std::string>{path[i]})
                scan_found = true;
        CHECK(scan_found);

        const Node* n = net.find_node(path[i]);
        bool leak_found = false;
        for (const auto& v : n->vulnerabilities)
            if (v.kind == VulnKind::Remote &&
                v.effect == Vulnerability::Effect::RevealCredentials)
                leak_found = true;
        CHECK(leak_found);
    }
}

TEST_CASE("validator pinpoints broken networks") {
    SECTION("empty network has no foothold") {
        Network net;
        auto fs = validate(net);
        REQUIRE_FALSE(fs.empty());
        CHECK(has_finding(fs, "no-foothold", "<network>"));
    }

    SECTION("credential referencing a missing node is named") {
        Network net = builtin_toyctf();
        net.credentials.push_back(Credential{"ghost-key", "NoSuchHost", "SSH", false});
        auto fs = validate(net);
        CHECK(has_finding(fs, "dangling-reference", "ghost-key"));
    }

    SECTION("honey credential accepted by a real node") {
        Network net = builtin_toyctf();
        net.credentials.push_back(Credential{"bait", "Website", "HTTPS", true});
        net.find_node("Website")->services[0].accepts.push_back("bait");
        CHECK(has_finding(validate(net), "honey-credential-accepted-by-real", "bait"));
    }

    SECTION("valid credential must open exactly one service") {
        Network net = builtin_toyctf();
        net.find_node("Sharepoint")->services[0].accepts.push_back("website-session");
        CHECK(has_finding(validate(net), "valid-credential-acceptance-count",
                          "website-session"));

        Network net2 = builtin_toyctf();
        net2.find_node("Website")->services[0].accepts.clear();
        CHECK(has_finding(validate(net2), "valid-credential-acceptance-count",
                          "website-session"));
    }

    SECTION("decoys carry no local vulnerabilities") {
        Network net = builtin_toyctf();
        Node d;
        d.id = "Website.decoy";
        d.kind = NodeKind::Decoy;
        d.clone_of = "Website";
        d.vulnerabilities.push_back(Vulnerability{
            "oops", VulnKind::Local, Vulnerability::Effect::RevealNodes, {"Website"}});
        net.nodes.push_back(d);
        CHECK(has_finding(validate(net), "decoy-has-local-vuln", "Website.decoy"));
    }

    SECTION("honeypots never store valid credentials") {
        Network net = builtin_toyctf();
        Node h;
        h.id = "Website.honeypot";
        h.kind = NodeKind::Honeypot;
        h.clone_of = "Website";
        h.stored_credentials = {"website-session"};
        net.nodes.push_back(h);
        CHECK(has_finding(validate(net), "honeypot-real-credential", "Website.honeypot"));
    }

    SECTION("dummies are inert and only reachable from honeypots") {
        Network net = builtin_toyctf();
        Node dummy;
        dummy.id = "ghost";
        dummy.kind = NodeKind::Dummy;
        dummy.services.push_back(Service{"SSH", {}});
        net.nodes.push_back(dummy);
        net.find_node("Client")->vulnerabilities.push_back(Vulnerability{
            "bad-link", VulnKind::Local, Vulnerability::Effect::RevealNodes, {"ghost"}});
        auto fs = validate(net);
        CHECK(has_finding(fs, "dummy-not-inert", "ghost"));
        CHECK(has_finding(fs, "dummy-not-honeylinked", "bad-link"));
    }

    SECTION("structural odds and ends") {
        Network net = builtin_toyctf();
        net.find_node("Website")->kind = NodeKind::Decoy; // on the path, nonzero value
        auto fs = validate(net);
        CHECK(has_finding(fs, "path-node-not-real", "Website"));
        CHECK(has_finding(fs, "clone-missing-origin", "Website"));
        CHECK(has_finding(fs, "deceptive-node-nonzero-value", "Website"));

        Network net2 = builtin_toyctf();
        net2.key_terrain = "Sharepoint";
        CHECK(has_finding(validate(net2), "key-terrain-not-last", "Sharepoint"));

        Network net3 = builtin_toyctf();
        net3.foothold = "nowhere";
        CHECK(has_finding(validate(net3), "no-foothold", "nowhere"));
    }
}

TEST_CASE("scenario JSON round-trips exactly") {
    Network net = builtin_toyctf();
    Network back = network_from_json(to_json(net));
    CHECK(back == net);

    const std::string path = "roundtrip_scenario.json";
    save_network_file(net, path);
    Network loaded = load_network_file(path);
    CHECK(loaded == net);
    std::remove(path.c_str());
}

TEST_CASE("scenario loading rejects malformed input") {
    CHECK_THROWS_AS(load_network_file("does_not_exist.json"), ParseError);

    const std::string path = "malformed_scenario.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_network_file(path), ParseError);
    std::remove(path.c_str());

    nlohmann::json j = to_json(builtin_toyctf());
    j["schema_version"] = 999;
    CHECK_THROWS_AS(network_from_json(j), ParseError);

    nlohmann::json bad_kind = to_json(builtin_toyctf());
    bad_kind["nodes"][0]["kind"] = "mainframe";
    CHECK_THROWS_AS(network_from_json(bad_kind), ParseError);

    nlohmann::json missing = to_json(builtin_toyctf());
    missing.erase("foothold");
    CHECK_THROWS_AS(network_from_json(missing), ParseError);
}
