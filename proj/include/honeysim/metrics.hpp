#pragma once

// Experiment measurements. One EpisodeRow per (grid cell, agent, seed,
// episode); summaries group rows per (grid cell, agent).
//
// Metrics follow the experiment design:
//   attacker wins        percentage of episodes reaching the goal
//   steps to win         defined on winning episodes only, absent otherwise
//   wasted resources     percentage of episode actions spent unproductively,
//                        split between real and deceptive targets
//   defender detections  count of actions that touched a deceptive element

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "honeysim/agents.hpp"
#include "honeysim/deception.hpp"
#include "honeysim/trace.hpp"

namespace honeysim {

struct EpisodeRow {
    std::string grid_key;
    AgentKind agent = AgentKind::Rand;
    DeceptionKind kind = DeceptionKind::Decoy;
    PlacementStrategy strategy = PlacementStrategy::Frontloaded;
    int quantity_or_index = 0;
    std::uint64_t seed = 0;
    int episode = 0;
    bool win = false;
    int steps_to_win = -1; // -1 when the episode was not won
    std::int64_t cumulative_reward = 0;
    double wasted_real_pct = 0.0;
    double wasted_deceptive_pct = 0.0;
    int detections = 0;
    int first_detection_step = -1; // -1 when nothing was detected
};

inline constexpr const char* kDetailHeader =
    "grid_key,agent,kind,strategy,quantity_or_index,seed,episode,win,steps_to_win,"
    "cumulative_reward,wasted_real_pct,wasted_deceptive_pct,detections,first_detection_step";

namespace detail {

inline std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace detail

inline void write_detail_csv(const std::vector<EpisodeRow>& rows, std::ostream& out) {
    out << kDetailHeader << '\n';
    for (const auto& r : rows) {
        out << r.grid_key << ',' << to_string(r.agent) << ',' << to_string(r.kind) << ','
            << to_string(r.strategy) << ',' << r.quantity_or_index << ',' << r.seed << ','
            << r.episode << ',' << (r.win ? 1 : 0) << ',';
        if (r.steps_to_win >= 0) out << r.steps_to_win;
        out << ',' << r.cumulative_reward << ',' << detail::fixed4(r.wasted_real_pct) << ','
            << detail::fixed4(r.wasted_deceptive_pct) << ',' << r.detections << ',';
        if (r.first_detection_step >= 0) out << r.first_detection_step;
        out << '\n';
    }
}

inline double mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / double(xs.size());
}

inline double sample_std(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / double(xs.size() - 1));
}

// Percentage of winning episodes across the given rows.
inline double attacker_wins(const std::vector<EpisodeRow>& rows) {
    if (rows.empty()) return 0.0;
    int wins = 0;
    for (const auto& r : rows) wins += r.win;
    return 100.0 * double(wins) / double(rows.size());
}

inline double attacker_wins(const std::vector<EpisodeTrace>& traces) {
    if (traces.empty()) throw EngineError("attacker_wins over an empty trace set");
    int wins = 0;
    for (const auto& t : traces) wins += t.win;
    return 100.0 * double(wins) / double(traces.size());
}

// Per-step effort breakdown of one episode, split by action kind.
struct WasteBreakdown {
    // counts[action kind][step class], indexed by the enums' integer values
    int counts[3][3] = {};
    int total = 0;

    int count(ActionKind k, StepClass c) const { return counts[int(k)][int(c)]; }
    double pct(ActionKind k, StepClass c) const {
        return total ? 100.0 * double(count(k, c)) / double(total) : 0.0;
    }
    int class_total(StepClass c) const {
        return counts[0][int(c)] + counts[1][int(c)] + counts[2][int(c)];
    }
    double class_pct(StepClass c) const {
        return total ? 100.0 * double(class_total(c)) / double(total) : 0.0;
    }
};

inline WasteBreakdown wasted_resources(const Engine& eng, const EpisodeTrace& trace) {
    if (trace.lines.empty()) throw EngineError("wasted_resources over an empty trace");
    WasteBreakdown out;
    for (const auto& line : trace.lines) {
        const auto act = eng.action_from_key(line.action_key);
        if (!act) throw EngineError("trace action '" + line.action_key + "' is not in this scenario");
        out.counts[int(act->kind)][int(eng.classify(*act, line.outcome()))] += 1;
        out.total += 1;
    }
    return out;
}

struct DetectionSummary {
    int count = 0;
    int first_step = -1; // -1 when nothing was detected
};

inline DetectionSummary defender_detections(const EpisodeTrace& trace) {
    DetectionSummary out;
    for (const auto& line : trace.lines)
        for (EventKind ev : line.events)
            if (is_detection(ev)) {
                out.count += 1;
                if (out.first_step < 0) out.first_step = line.step;
            }
    return out;
}

struct SummaryRow {
    std::string grid_key;
    AgentKind agent = AgentKind::Rand;
    DeceptionKind kind = DeceptionKind::Decoy;
    PlacementStrategy strategy = PlacementStrategy::Frontloaded;
    int quantity_or_index = 0;
    int episodes = 0;
    int wins = 0;
    double win_pct = 0.0;
    double std_win_pct = 0.0; // sample std of the 0/100 win indicator
    double mean_reward = 0.0;
    double std_reward = 0.0;
    double mean_steps_to_win = 0.0; // over wins; meaningless when wins == 0
    double std_steps_to_win = 0.0;
    double mean_wasted_real_pct = 0.0;
    double std_wasted_real_pct = 0.0;
    double mean_wasted_deceptive_pct = 0.0;
    double std_wasted_deceptive_pct = 0.0;
    double mean_detections = 0.0;
    int detected_episodes = 0;
    double mean_first_detection_step = 0.0; // over detected episodes
};

inline constexpr const char* kSummaryHeader =
    "grid_key,agent,kind,strategy,quantity_or_index,episodes,wins,win_pct,std_win_pct,"
    "mean_reward,std_reward,mean_steps_to_win,std_steps_to_win,mean_wasted_real_pct,"
    "std_wasted_real_pct,mean_wasted_deceptive_pct,std_wasted_deceptive_pct,"
    "mean_detections,detected_episodes,mean_first_detection_step";

// Groups rows by (grid cell, agent) in first-appearance order.
inline std::vector<SummaryRow> aggregate(const std::vector<EpisodeRow>& rows) {
    std::vector<SummaryRow> out;
    std::map<std::pair<std::string, int>, std::size_t> index;
    std::vector<std::vector<double>> wins, rewards, win_steps, wasted_r, wasted_d, detections,
        first_det;

    for (const auto& r : rows) {
        const auto key = std::make_pair(r.grid_key, int(r.agent));
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            SummaryRow s;
            s.grid_key = r.grid_key;
            s.agent = r.agent;
            s.kind = r.kind;
            s.strategy = r.strategy;
            s.quantity_or_index = r.quantity_or_index;
            out.push_back(s);
            wins.emplace_back();
            rewards.emplace_back();
            win_steps.emplace_back();
            wasted_r.emplace_back();
            wasted_d.emplace_back();
            detections.emplace_back();
            first_det.emplace_back();
        }
        const std::size_t i = it->second;
        SummaryRow& s = out[i];
        s.episodes += 1;
        s.wins += r.win;
        wins[i].push_back(r.win ? 100.0 : 0.0);
        rewards[i].push_back(double(r.cumulative_reward));
        if (r.win && r.steps_to_win >= 0) win_steps[i].push_back(double(r.steps_to_win));
        wasted_r[i].push_back(r.wasted_real_pct);
        wasted_d[i].push_back(r.wasted_deceptive_pct);
        detections[i].push_back(double(r.detections));
        if (r.first_detection_step >= 0) {
            s.detected_episodes += 1;
            first_det[i].push_back(double(r.first_detection_step));
        }
    }

    for (std::size_t i = 0; i < out.size(); ++i) {
        SummaryRow& s = out[i];
        s.win_pct = s.episodes ? 100.0 * double(s.wins) / double(s.episodes) : 0.0;
        s.std_win_pct = sample_std(wins[i]);
        s.mean_reward = mean(rewards[i]);
        s.std_reward = sample_std(rewards[i]);
        s.mean_steps_to_win = mean(win_steps[i]);
        s.std_steps_to_win = sample_std(win_steps[i]);
        s.mean_wasted_real_pct = mean(wasted_r[i]);
        s.std_wasted_real_pct = sample_std(wasted_r[i]);
        s.mean_wasted_deceptive_pct = mean(wasted_d[i]);
        s.std_wasted_deceptive_pct = sample_std(wasted_d[i]);
        s.mean_detections = mean(detections[i]);
        s.mean_first_detection_step = mean(first_det[i]);
    }
    return out;
}

inline void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << kSummaryHeader << '\n';
    for (const auto& s : rows) {
        out << s.grid_key << ',' << to_string(s.agent) << ',' << to_string(s.kind) << ','
            << to_string(s.strategy) << ',' << s.quantity_or_index << ',' << s.episodes << ','
            << s.wins << ',' << detail::fixed4(s.win_pct) << ','
            << detail::fixed4(s.std_win_pct) << ','
            << detail::fixed4(s.mean_reward) << ',' << detail::fixed4(s.std_reward) << ',';
        if (s.wins > 0)
            out << detail::fixed4(s.mean_steps_to_win) << ','
                << detail::fixed4(s.std_steps_to_win);
        else
            out << ',';
        out << ',' << detail::fixed4(s.mean_wasted_real_pct) << ','
            << detail::fixed4(s.std_wasted_real_pct) << ','
            << detail::fixed4(s.mean_wasted_deceptive_pct) << ','
            << detail::fixed4(s.std_wasted_deceptive_pct) << ','
            << detail::fixed4(s.mean_detections) << ',' << s.detected_episodes << ',';
        if (s.detected_episodes > 0) out << detail::fixed4(s.mean_first_detection_step);
        out << '\n';
    }
}

} // namespace honeysim
