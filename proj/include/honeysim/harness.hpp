#pragma once

// Experiment harness: runs episodes, cells and whole grids.
//
// Work splits into units of (grid cell, agent, seed); episodes inside a unit
// run sequentially because learning state carries across them. Units are
// independent and run on a small thread pool; results merge in config order,
// so output is identical no matter how many workers ran.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "honeysim/agents.hpp"
#include "honeysim/config.hpp"
#include "honeysim/deception.hpp"
#include "honeysim/engine.hpp"
#include "honeysim/metrics.hpp"
#include "honeysim/rng.hpp"
#include "honeysim/trace.hpp"

namespace honeysim {

struct EpisodeOutcome {
    bool win = false;
    int steps = 0;
    int steps_to_win = -1;
    std::int64_t cumulative_reward = 0;
    int wasted_real = 0;
    int wasted_deceptive = 0;
    int detections = 0;
    int first_detection_step = -1;
};

// Runs one episode to completion (win, step limit, or no valid actions
// left). Optionally records a full trace.
inline EpisodeOutcome run_episode(const Engine& eng, Agent& agent, int episode,
                                  int step_limit, std::uint64_t seed_label = 0,
                                  EpisodeTrace* trace = nullptr) {
    agent.begin_episode(episode);
    SimState st = eng.initial_state(step_limit, seed_label);
    if (trace) {
        trace->agent = agent.name();
        trace->seed = seed_label;
        trace->episode = episode;
        trace->lines.clear();
    }

    std::vector<Action> valid, next_valid;
    eng.valid_actions(st, valid);
    while (!st.done && !valid.empty()) {
        const Action act = agent.choose(st, valid);
        const StepResult r = eng.step(st, act);
        eng.valid_actions(st, next_valid);
        agent.observe(r, st, next_valid);
        if (trace) {
            TraceLine line{st.steps, eng.action_key(act), {}, r.delta};
            for (std::size_t e = 0; e < r.n; ++e) line.events.push_back(r.events[e].kind);
            trace->lines.push_back(std::move(line));
        }
        valid.swap(next_valid);
    }

    EpisodeOutcome out;
    out.win = st.win;
    out.steps = st.steps;
    out.steps_to_win = st.win ? st.steps : -1;
    out.cumulative_reward = st.cumulative_reward;
    out.wasted_real = st.wasted_real;
    out.wasted_deceptive = st.wasted_deceptive;
    out.detections = st.detections;
    out.first_detection_step = st.first_detection_step;
    if (trace) {
        trace->win = st.win;
        trace->cumulative_reward = st.cumulative_reward;
    }
    return out;
}

struct ExperimentResult {
    std::vector<EpisodeRow> rows;
    std::vector<SummaryRow> summary;
    std::vector<std::string> errors; // failed units; the rest of the run continues
    double wall_seconds = 0.0;
};

namespace detail {

// One (cell, agent, seed) unit: a fresh agent trained through all episodes.
inline std::vector<EpisodeRow> run_unit(const Network& net, const PlacementSpec& spec,
                                        const std::string& key, std::size_t cell_idx,
                                        AgentKind agent_kind, std::uint64_t seed,
                                        const ExperimentConfig& cfg) {
    Engine eng(net, cfg.goal);
    auto agent = make_agent(agent_kind, eng,
                            mix_seed(seed, cell_idx + 1, std::uint64_t(agent_kind) + 1),
                            cfg.agent_config);

    std::vector<EpisodeRow> rows;
    rows.reserve(std::size_t(cfg.episodes));
    for (int ep = 0; ep < cfg.episodes; ++ep) {
        const EpisodeOutcome o = run_episode(eng, *agent, ep, cfg.step_limit, seed);
        EpisodeRow row;
        row.grid_key = key;
        row.agent = agent_kind;
        row.kind = spec.kind;
        row.strategy = spec.strategy;
        row.quantity_or_index = spec.count;
        row.seed = seed;
        row.episode = ep;
        row.win = o.win;
        row.steps_to_win = o.steps_to_win;
        row.cumulative_reward = o.cumulative_reward;
        row.wasted_real_pct = o.steps ? 100.0 * o.wasted_real / o.steps : 0.0;
        row.wasted_deceptive_pct = o.steps ? 100.0 * o.wasted_deceptive / o.steps : 0.0;
        row.detections = o.detections;
        row.first_detection_step = o.first_detection_step;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

// Runs the full grid. progress, when given, is called once per finished unit
// with (finished, total); it may be called from worker threads.
inline ExperimentResult run_experiment(
    const ExperimentConfig& cfg,
    const std::function<void(std::size_t, std::size_t)>& progress = {}) {
    const auto t0 = std::chrono::steady_clock::now();

    const Network base = resolve_scenario(cfg);
    require_valid(base);

    std::vector<Network> cells;
    std::vector<std::string> keys;
    for (const auto& spec : cfg.grid) {
        cells.push_back(apply_placement(base, spec));
        require_valid(cells.back());
        keys.push_back(grid_key(spec));
    }

    struct Unit {
        std::size_t cell, agent, seed;
    };
    std::vector<Unit> units;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t a = 0; a < cfg.agents.size(); ++a)
            for (std::size_t s = 0; s < cfg.seeds.size(); ++s)
                units.push_back(Unit{c, a, s});

    std::vector<std::vector<EpisodeRow>> unit_rows(units.size());
    std::vector<std::string> unit_errors(units.size());
    std::atomic<std::size_t> next{0}, finished{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= units.size()) return;
            const Unit& u = units[i];
            try {
                unit_rows[i] =
                    detail::run_unit(cells[u.cell], cfg.grid[u.cell], keys[u.cell], u.cell,
                                     cfg.agents[u.agent], cfg.seeds[u.seed], cfg);
            } catch (const std::exception& e) {
                // A bad unit loses its own rows only; everything else still runs.
                unit_errors[i] = keys[u.cell] + "/" + to_string(cfg.agents[u.agent]) +
                                 "/seed-" + std::to_string(cfg.seeds[u.seed]) + ": " + e.what();
            }
            const std::size_t done = finished.fetch_add(1) + 1;
            if (progress) progress(done, units.size());
        }
    };

    const int workers = std::min<int>(cfg.workers, int(units.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentResult result;
    for (auto& rows : unit_rows)
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    for (auto& err : unit_errors)
        if (!err.empty()) result.errors.push_back(err);
    result.summary = aggregate(result.rows);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace honeysim
