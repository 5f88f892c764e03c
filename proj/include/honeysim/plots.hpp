#pragma once

// Plot emission: self-contained SVG files, one per figure family per agent.
//
// Families mirror the experiment summaries:
//   reward_vs_quantity    mean cumulative reward as deception count grows
//   wins_vs_quantity      win percentage as deception count grows
//   steps_vs_quantity     mean steps-to-win (winning episodes only)
//   reward_vs_location    mean reward by single-element path position
//   wasted_actions        stacked productive / wasted-real / wasted-deceptive
//
// Lines carry a +/- one-standard-deviation band. A family is only written
// when the summary actually contains rows for it, so a quantity sweep does
// not produce empty location plots.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "honeysim/errors.hpp"
#include "honeysim/metrics.hpp"

namespace honeysim {

namespace svgplot {

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s{buf};
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

inline std::string esc(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

// Series palette; indexes wrap.
inline const char* color(std::size_t i) {
    static const char* kPalette[] = {"#2563eb", "#dc2626", "#059669",
                                     "#d97706", "#7c3aed", "#0891b2"};
    return kPalette[i % 6];
}

struct Point {
    double x = 0, y = 0, lo = 0, hi = 0;
};

struct Series {
    std::string label;
    std::vector<Point> points; // sorted by x; gaps allowed via separate runs
};

// Tick positions at a 1/2/5 step covering [lo, hi].
inline std::vector<double> ticks(double lo, double hi, int target = 6) {
    if (!(hi > lo)) hi = lo + 1.0;
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
        out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    return out;
}

// One x/y chart with banded line series. Categorical x labels may replace
// numeric ticks (location plots label path steps by node name).
class Chart {
public:
    Chart(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void add(Series s) { series_.push_back(std::move(s)); }
    void x_tick_label(double x, const std::string& label) { xnames_[x] = label; }

    std::string render() const {
        double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
        bool any = false;
        for (const auto& s : series_)
            for (const auto& p : s.points) {
                if (!any) {
                    xlo = xhi = p.x;
                    ylo = p.lo;
                    yhi = p.hi;
                    any = true;
                }
                xlo = std::min(xlo, p.x);
                xhi = std::max(xhi, p.x);
                ylo = std::min(ylo, p.lo);
                yhi = std::max(yhi, p.hi);
            }
        if (!any) { xhi = ylo = 0; yhi = 1; }
        if (xhi == xlo) xhi = xlo + 1;
        const double ypad = (yhi - ylo) == 0 ? 1.0 : (yhi - ylo) * 0.08;
        ylo -= ypad;
        yhi += ypad;

        const double W = 720, H = 480, L = 78, R = 24, T = 46, B = xnames_.empty() ? 58 : 96;
        auto X = [&](double x) { return L + (x - xlo) / (xhi - xlo) * (W - L - R); };
        auto Y = [&](double y) { return H - B - (y - ylo) / (yhi - ylo) * (H - T - B); };

        std::ostringstream o;
        o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
          << "\" viewBox=\"0 0 " << W << " " << H << "\" font-family=\"sans-serif\">\n";
        o << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
        o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
          << esc(title_) << "</text>\n";

        for (double t : ticks(ylo + ypad, yhi - ypad)) {
            o << "<line x1=\"" << L << "\" y1=\"" << num(Y(t)) << "\" x2=\"" << W - R
              << "\" y2=\"" << num(Y(t)) << "\" stroke=\"#e5e7eb\"/>\n";
            o << "<text x=\"" << L - 8 << "\" y=\"" << num(Y(t) + 4)
              << "\" text-anchor=\"end\" font-size=\"11\">" << num(t) << "</text>\n";
        }
        if (xnames_.empty()) {
            for (double t : ticks(xlo, xhi)) {
                if (t < xlo - 1e-9 || t > xhi + 1e-9) continue;
                o << "<line x1=\"" << num(X(t)) << "\" y1=\"" << H - B << "\" x2=\""
                  << num(X(t)) << "\" y2=\"" << H - B + 5 << "\" stroke=\"#374151\"/>\n";
                o << "<text x=\"" << num(X(t)) << "\" y=\"" << H - B + 20
                  << "\" text-anchor=\"middle\" font-size=\"11\">" << num(t) << "</text>\n";
            }
        } else {
            for (const auto& [x, name] : xnames_) {
                o << "<line x1=\"" << num(X(x)) << "\" y1=\"" << H - B << "\" x2=\""
                  << num(X(x)) << "\" y2=\"" << H - B + 5 << "\" stroke=\"#374151\"/>\n";
                o << "<text x=\"" << num(X(x)) << "\" y=\"" << H - B + 18
                  << "\" text-anchor=\"middle\" font-size=\"11\">" << num(x) << "</text>\n";
                o << "<text font-size=\"9\" text-anchor=\"end\" transform=\"rotate(-35 "
                  << num(X(x)) << " " << H - B + 30 << ")\" x=\"" << num(X(x)) << "\" y=\""
                  << H - B + 30 << "\">" << esc(name) << "</text>\n";
            }
        }
        o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
          << "\" stroke=\"#374151\"/>\n";
        o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\""
          << H - B << "\" stroke=\"#374151\"/>\n";
        o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10
          << "\" text-anchor=\"middle\" font-size=\"12\">" << esc(xlabel_) << "</text>\n";
        o << "<text x=\"18\" y=\"" << (T + H - B) / 2
          << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
          << (T + H - B) / 2 << ")\">" << esc(ylabel_) << "</text>\n";

        for (std::size_t i = 0; i < series_.size(); ++i) {
            const auto& s = series_[i];
            if (s.points.size() > 1) {
                std::ostringstream band;
                band << "<path d=\"M";
                for (const auto& p : s.points) band << " " << num(X(p.x)) << " " << num(Y(p.hi));
                for (auto it = s.points.rbegin(); it != s.points.rend(); ++it)
                    band << " L " << num(X(it->x)) << " " << num(Y(it->lo));
                band << " Z\" fill=\"" << color(i) << "\" fill-opacity=\"0.15\"/>\n";
                o << band.str();
                o << "<polyline fill=\"none\" stroke=\"" << color(i)
                  << "\" stroke-width=\"2\" points=\"";
                for (const auto& p : s.points) o << num(X(p.x)) << "," << num(Y(p.y)) << " ";
                o << "\"/>\n";
            }
            for (const auto& p : s.points)
                o << "<circle cx=\"" << num(X(p.x)) << "\" cy=\"" << num(Y(p.y))
                  << "\" r=\"3\" fill=\"" << color(i) << "\"/>\n";
            const double ly = T + 16 + 16 * double(i);
            o << "<rect x=\"" << W - R - 150 << "\" y=\"" << ly - 9
              << "\" width=\"12\" height=\"12\" fill=\"" << color(i) << "\"/>\n";
            o << "<text x=\"" << W - R - 133 << "\" y=\"" << ly + 1 << "\" font-size=\"11\">"
              << esc(s.label) << "</text>\n";
        }
        o << "</svg>\n";
        return o.str();
    }

private:
    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
    std::map<double, std::string> xnames_;
};

// Stacked percentage bars, one bar per grid point.
struct StackBar {
    std::string label;
    double productive = 0, wasted_real = 0, wasted_deceptive = 0;
};

inline std::string render_stacks(const std::string& title, const std::vector<StackBar>& bars) {
    const double W = 720, H = 480, L = 78, R = 24, T = 46, B = 110;
    const double n = double(bars.size());
    const double slot = (W - L - R) / std::max(1.0, n);
    const double bw = slot * 0.6;
    auto Y = [&](double pct) { return H - B - pct / 100.0 * (H - T - B); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\" font-family=\"sans-serif\">\n";
    o << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << esc(title) << "</text>\n";
    for (int t = 0; t <= 100; t += 20) {
        o << "<line x1=\"" << L << "\" y1=\"" << num(Y(t)) << "\" x2=\"" << W - R << "\" y2=\""
          << num(Y(t)) << "\" stroke=\"#e5e7eb\"/>\n";
        o << "<text x=\"" << L - 8 << "\" y=\"" << num(Y(t) + 4)
          << "\" text-anchor=\"end\" font-size=\"11\">" << t << "</text>\n";
    }
    const char* kFill[] = {"#059669", "#d97706", "#dc2626"};
    const char* kName[] = {"productive", "wasted (real)", "wasted (deceptive)"};
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double x = L + slot * (double(i) + 0.5) - bw / 2;
        const double segs[3] = {bars[i].productive, bars[i].wasted_real,
                                bars[i].wasted_deceptive};
        double acc = 0;
        for (int s = 0; s < 3; ++s) {
            if (segs[s] <= 0) continue;
            o << "<rect x=\"" << num(x) << "\" y=\"" << num(Y(acc + segs[s])) << "\" width=\""
              << num(bw) << "\" height=\"" << num(Y(acc) - Y(acc + segs[s])) << "\" fill=\""
              << kFill[s] << "\"/>\n";
            acc += segs[s];
        }
        o << "<text font-size=\"10\" text-anchor=\"end\" transform=\"rotate(-35 "
          << num(x + bw / 2) << " " << H - B + 14 << ")\" x=\"" << num(x + bw / 2) << "\" y=\""
          << H - B + 14 << "\">" << esc(bars[i].label) << "</text>\n";
    }
    o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"#374151\"/>\n";
    o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"#374151\"/>\n";
    o << "<text x=\"18\" y=\"" << (T + H - B) / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
      << (T + H - B) / 2 << ")\">share of episode actions (%)</text>\n";
    for (int s = 0; s < 3; ++s) {
        const double ly = T + 16 + 16 * s;
        o << "<rect x=\"" << W - R - 150 << "\" y=\"" << ly - 9
          << "\" width=\"12\" height=\"12\" fill=\"" << kFill[s] << "\"/>\n";
        o << "<text x=\"" << W - R - 133 << "\" y=\"" << ly + 1 << "\" font-size=\"11\">"
          << kName[s] << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace svgplot

namespace detail {

inline void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw EngineError("cannot write plot file '" + path + "'");
    out << body;
    if (!out) throw EngineError("short write on plot file '" + path + "'");
}

inline std::string series_label(const SummaryRow& s) {
    return std::string{to_string(s.kind)} + " " + to_string(s.strategy);
}

} // namespace detail

// Renders every applicable figure family for every agent present in the
// summary. Files land in out_dir (created by the caller) and the returned
// list names them in write order. path_names, when given, label location-plot
// ticks with the path node at each step.
inline std::vector<std::string> emit_plots(const std::vector<SummaryRow>& summary,
                                           const std::string& out_dir,
                                           const std::vector<std::string>& path_names = {}) {
    std::vector<std::string> written;
    std::vector<AgentKind> agents;
    for (const auto& s : summary)
        if (std::find(agents.begin(), agents.end(), s.agent) == agents.end())
            agents.push_back(s.agent);

    for (AgentKind agent : agents) {
        std::vector<const SummaryRow*> quantity, location;
        for (const auto& s : summary) {
            if (s.agent != agent) continue;
            if (s.strategy == PlacementStrategy::AtPathIndex) location.push_back(&s);
            else quantity.push_back(&s);
        }
        auto by_x = [](const SummaryRow* a, const SummaryRow* b) {
            if (a->kind != b->kind) return a->kind < b->kind;
            if (a->strategy != b->strategy) return a->strategy < b->strategy;
            return a->quantity_or_index < b->quantity_or_index;
        };
        std::sort(quantity.begin(), quantity.end(), by_x);
        std::sort(location.begin(), location.end(), by_x);

        // Rows sharing (kind, strategy) form one line; x is count or index.
        auto lines = [&](const std::vector<const SummaryRow*>& rows, auto value, auto spread,
                         bool wins_only) {
            std::vector<svgplot::Series> out;
            for (const SummaryRow* s : rows) {
                if (wins_only && s->wins == 0) continue;
                const std::string label = detail::series_label(*s);
                if (out.empty() || out.back().label != label)
                    out.push_back(svgplot::Series{label, {}});
                svgplot::Point p;
                p.x = s->quantity_or_index;
                p.y = value(*s);
                p.lo = p.y - spread(*s);
                p.hi = p.y + spread(*s);
                out.back().points.push_back(p);
            }
            return out;
        };
        const std::string who = to_string(agent);
        auto emit_chart = [&](const std::string& family, const std::string& title,
                              const std::string& xlabel, const std::string& ylabel,
                              std::vector<svgplot::Series> series, bool label_path) {
            if (series.empty()) return;
            bool any = false;
            for (const auto& s : series) any = any || !s.points.empty();
            if (!any) return;
            svgplot::Chart chart(title + " (" + who + ")", xlabel, ylabel);
            if (label_path && !path_names.empty())
                for (const auto& s : series)
                    for (const auto& p : s.points) {
                        const std::size_t i = std::size_t(p.x); // path step, 1-based
                        if (i >= 1 && i <= path_names.size())
                            chart.x_tick_label(p.x, path_names[i - 1]);
                    }
            for (auto& s : series) chart.add(std::move(s));
            const std::string file = family + "_" + who + ".svg";
            detail::write_text_file(out_dir + "/" + file, chart.render());
            written.push_back(file);
        };

        emit_chart("reward_vs_quantity", "Mean cumulative reward vs deception count",
                   "deceptive elements", "mean cumulative reward",
                   lines(quantity, [](const SummaryRow& s) { return s.mean_reward; },
                         [](const SummaryRow& s) { return s.std_reward; }, false),
                   false);
        emit_chart("wins_vs_quantity", "Attacker wins vs deception count",
                   "deceptive elements", "episodes won (%)",
                   lines(quantity, [](const SummaryRow& s) { return s.win_pct; },
                         [](const SummaryRow& s) { return s.std_win_pct; }, false),
                   false);
        emit_chart("steps_vs_quantity", "Mean steps to win vs deception count",
                   "deceptive elements", "steps to win (winning episodes)",
                   lines(quantity, [](const SummaryRow& s) { return s.mean_steps_to_win; },
                         [](const SummaryRow& s) { return s.std_steps_to_win; }, true),
                   false);
        emit_chart("reward_vs_location", "Mean cumulative reward vs element location",
                   "path step of the deceptive element", "mean cumulative reward",
                   lines(location, [](const SummaryRow& s) { return s.mean_reward; },
                         [](const SummaryRow& s) { return s.std_reward; }, false),
                   true);

        const auto& stack_rows = quantity.empty() ? location : quantity;
        if (!stack_rows.empty()) {
            std::vector<svgplot::StackBar> bars;
            for (const SummaryRow* s : stack_rows) {
                svgplot::StackBar b;
                b.label = s->grid_key;
                b.wasted_real = s->mean_wasted_real_pct;
                b.wasted_deceptive = s->mean_wasted_deceptive_pct;
                b.productive = std::max(0.0, 100.0 - b.wasted_real - b.wasted_deceptive);
                bars.push_back(b);
            }
            const std::string file = "wasted_actions_" + who + ".svg";
            detail::write_text_file(
                out_dir + "/" + file,
                svgplot::render_stacks("Action effort split (" + who + ")", bars));
            written.push_back(file);
        }
    }
    return written;
}

} // namespace honeysim
