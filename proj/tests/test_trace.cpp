// Trace serialization and replay: text round-trips losslessly, identical
// seeds reproduce byte-identical traces, and replay flags any divergence.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "honeysim/agents.hpp"
#include "honeysim/deception.hpp"
#include "honeysim/engine.hpp"
#include "honeysim/errors.hpp"
#include "honeysim/harness.hpp"
#include "honeysim/scenario.hpp"
#include "honeysim/trace.hpp"

using namespace honeysim;

namespace {

Network traced_net() {
    return apply_placement(builtin_toyctf(),
                           PlacementSpec::frontloaded(DeceptionKind::Decoy, 2));
}

EpisodeTrace record(const Engine& eng, std::uint64_t agent_seed, int step_limit = 400) {
    RandAgent agent(eng, agent_seed);
    EpisodeTrace tr;
    run_episode(eng, agent, 0, step_limit, agent_seed, &tr);
    return tr;
}

} // namespace

TEST_CASE("text round-trip preserves every field") {
    const Network net = traced_net();
    const Engine eng(net);
    const EpisodeTrace tr = record(eng, 21);
    REQUIRE_FALSE(tr.lines.empty());

    const std::string text = trace_to_string(tr);
    const EpisodeTrace back = parse_trace(text);
    CHECK(back == tr);
    CHECK(back.agent == "RAND");
    CHECK(back.seed == 21);
    CHECK(trace_to_string(back) == text);
}

TEST_CASE("identical seeds record byte-identical traces") {
    const Network net = traced_net();
    const Engine eng(net);
    CHECK(trace_to_string(record(eng, 5)) == trace_to_string(record(eng, 5)));
    CHECK(trace_to_string(record(eng, 5)) != trace_to_string(record(eng, 6)));
}

TEST_CASE("replay accepts its own recording, on a fresh engine too") {
    const Network net = traced_net();
    const Engine eng(net);
    const EpisodeTrace tr = record(eng, 9);

    const SimState st = replay_trace(eng, tr, 400);
    CHECK(st.cumulative_reward == tr.cumulative_reward);
    CHECK(st.win == tr.win);
    CHECK(st.steps == int(tr.lines.size()));

    // Engine compilation is deterministic, so a second engine built from the
    // same network accepts the same script.
    const Engine again(net);
    CHECK_NOTHROW(replay_trace(again, tr, 400));
}

TEST_CASE("replay rejects any tampering") {
    const Network net = traced_net();
    const Engine eng(net);
    EpisodeTrace tr = record(eng, 33);
    REQUIRE(tr.lines.size() >= 3);

    SECTION("altered reward") {
        tr.lines[2].delta += 1;
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
    SECTION("altered outcome") {
        tr.lines[1].events = {tr.lines[1].outcome() == EventKind::RepeatedAction
                                  ? EventKind::WrongPassword
                                  : EventKind::RepeatedAction};
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
    SECTION("dropped bookkeeping event") {
        // Find a multi-event step (exploit-use + reveal) and truncate it.
        bool truncated = false;
        for (auto& l : tr.lines)
            if (!truncated && l.events.size() > 1) {
                l.events.pop_back();
                truncated = true;
            }
        REQUIRE(truncated);
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
    SECTION("unknown action") {
        tr.lines[0].action_key = "local:Nowhere:no-vuln";
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
    SECTION("wrong total") {
        tr.cumulative_reward -= 7;
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
    SECTION("wrong win flag") {
        tr.win = !tr.win;
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
    SECTION("reordered steps break the counter check") {
        std::swap(tr.lines[0], tr.lines[1]);
        CHECK_THROWS_AS(replay_trace(eng, tr, 400), EngineError);
    }
}

TEST_CASE("parser flags malformed input") {
    CHECK_THROWS_AS(parse_trace("1\tlocal:A:v\tExploitUse"), ParseError);        // 3 fields
    CHECK_THROWS_AS(parse_trace("x\tlocal:A:v\tExploitUse\t-1"), ParseError);    // bad step
    CHECK_THROWS_AS(parse_trace("1\tlocal:A:v\tExploitUse\tzz"), ParseError);    // bad delta
    CHECK_THROWS_AS(parse_trace("1\tlocal:A:v\tNotAnEvent\t-1"), ParseError);    // bad event

    CHECK_THROWS_AS(parse_trace("1\tlocal:A:v\texploit-use+mystery\t-1"), ParseError);

    // Headers, blank lines and a trailing newline are all tolerated.
    const EpisodeTrace tr = parse_trace(
        "# agent\tRAND\n# seed\t44\n# episode\t7\n# win\t1\n# cumulative_reward\t123\n"
        "\n1\tlocal:Client:browser-history\texploit-use+nodes-revealed\t49\n");
    CHECK(tr.agent == "RAND");
    CHECK(tr.seed == 44);
    CHECK(tr.episode == 7);
    CHECK(tr.win);
    CHECK(tr.cumulative_reward == 123);
    REQUIRE(tr.lines.size() == 1);
    CHECK(tr.lines[0] ==
          TraceLine{1,
                    "local:Client:browser-history",
                    {EventKind::ExploitUse, EventKind::NodesRevealed},
                    49});
}
