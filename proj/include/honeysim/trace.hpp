#pragma once

// Episode traces: one line per step, tab separated:
//
//   <step>\t<action key>\t<events joined by '+'>\t<reward delta>
//
// preceded by '#'-prefixed metadata lines. A step's full event sequence is
// kept (e.g. "exploit-use+nodes-revealed") because detection counting needs
// every event, not just the final outcome. The action key and the engine's
// determinism make a trace a complete replay script; replay_trace() verifies
// one against an engine line by line.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "honeysim/engine.hpp"
#include "honeysim/errors.hpp"

namespace honeysim {

struct TraceLine {
    std::int32_t step = 0;
    std::string action_key;
    std::vector<EventKind> events; // never empty; the last one is the outcome
    std::int64_t delta = 0;

    EventKind outcome() const { return events.back(); }

    bool operator==(const TraceLine&) const = default;
};

struct EpisodeTrace {
    std::string agent;
    std::uint64_t seed = 0;
    std::int32_t episode = 0;
    bool win = false;
    std::int64_t cumulative_reward = 0;
    std::vector<TraceLine> lines;

    bool operator==(const EpisodeTrace&) const = default;
};

inline void write_trace(const EpisodeTrace& tr, std::ostream& out) {
    out << "# agent\t" << tr.agent << '\n';
    out << "# seed\t" << tr.seed << '\n';
    out << "# episode\t" << tr.episode << '\n';
    out << "# win\t" << (tr.win ? 1 : 0) << '\n';
    out << "# cumulative_reward\t" << tr.cumulative_reward << '\n';
    for (const auto& l : tr.lines) {
        out << l.step << '\t' << l.action_key << '\t';
        for (std::size_t i = 0; i < l.events.size(); ++i)
            out << (i ? "+" : "") << to_string(l.events[i]);
        out << '\t' << l.delta << '\n';
    }
}

inline std::string trace_to_string(const EpisodeTrace& tr) {
    std::ostringstream os;
    write_trace(tr, os);
    return os.str();
}

inline EpisodeTrace parse_trace(std::istream& in) {
    EpisodeTrace tr;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key, value;
            hs >> key;
            hs >> std::ws;
            std::getline(hs, value);
            if (key == "agent") tr.agent = value;
            else if (key == "seed") tr.seed = std::stoull(value);
            else if (key == "episode") tr.episode = std::stoi(value);
            else if (key == "win") tr.win = value == "1";
            else if (key == "cumulative_reward") tr.cumulative_reward = std::stoll(value);
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == '\t') {
                cells.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        if (cells.size() != 4)
            throw ParseError("trace line " + std::to_string(lineno) + ": expected 4 fields");
        TraceLine tl;
        try {
            tl.step = std::stoi(cells[0]);
            tl.delta = std::stoll(cells[3]);
        } catch (const std::exception&) {
            throw ParseError("trace line " + std::to_string(lineno) + ": bad number");
        }
        tl.action_key = cells[1];
        std::size_t estart = 0;
        for (std::size_t i = 0; i <= cells[2].size(); ++i)
            if (i == cells[2].size() || cells[2][i] == '+') {
                const std::string name = cells[2].substr(estart, i - estart);
                estart = i + 1;
                auto kind = event_kind_from(name);
                if (!kind)
                    throw ParseError("trace line " + std::to_string(lineno) +
                                     ": unknown event '" + name + "'");
                tl.events.push_back(*kind);
            }
        tr.lines.push_back(std::move(tl));
    }
    return tr;
}

inline EpisodeTrace parse_trace(const std::string& text) {
    std::istringstream is(text);
    return parse_trace(is);
}

// Replays a trace against a fresh episode, verifying every line. Returns the
// final state; throws EngineError on the first divergence.
inline SimState replay_trace(const Engine& eng, const EpisodeTrace& tr,
                             std::int32_t step_limit = 5000) {
    SimState st = eng.initial_state(step_limit, tr.seed);
    for (const auto& l : tr.lines) {
        auto act = eng.action_from_key(l.action_key);
        if (!act) throw EngineError("replay: unknown action '" + l.action_key + "'");
        StepResult r = eng.step(st, *act);
        if (st.steps != l.step)
            throw EngineError("replay: step counter diverged at '" + l.action_key + "'");
        bool same = r.delta == l.delta && std::size_t(r.n) == l.events.size();
        for (std::size_t i = 0; same && i < l.events.size(); ++i)
            same = r.events[i].kind == l.events[i];
        if (!same)
            throw EngineError("replay: outcome diverged at step " + std::to_string(l.step) +
                              " ('" + l.action_key + "')");
    }
    if (st.cumulative_reward != tr.cumulative_reward)
        throw EngineError("replay: cumulative reward mismatch");
    if (st.win != tr.win) throw EngineError("replay: win flag mismatch");
    return st;
}

} // namespace honeysim
