// honeysim command line: validate scenarios, run experiment configs, expand
// sweep presets. Exit codes are a stable contract:
//   0  success (validate: no findings)
//   1  semantic error: findings, bad config values, unknown agent/preset,
//      or units that failed mid-run (partial outputs are still written)
//   2  I/O error: unreadable or corrupted files, unwritable outputs
//
// Output directory precedence: --out flag, then HONEYSIM_OUT_DIR, then the
// config's out_dir, then runs/<config name>. Nothing is written until the
// whole run has finished; the manifest is published last, atomically.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "honeysim/config.hpp"
#include "honeysim/harness.hpp"
#include "honeysim/outputs.hpp"
#include "honeysim/scenario_io.hpp"
#include "honeysim/version.hpp"

namespace {

using namespace honeysim;

constexpr int kOk = 0;
constexpr int kSemanticError = 1;
constexpr int kIoError = 2;

// Reads and parses JSON; failures here are I/O-class (exit 2).
nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

int cmd_validate(const std::string& path) {
    Network net;
    try {
        if (path == "builtin:toyctf") {
            net = builtin_toyctf();
        } else if (path.rfind("builtin:", 0) == 0) {
            std::fprintf(stderr, "unknown builtin scenario '%s'\n", path.c_str());
            return kSemanticError;
        } else {
            net = network_from_json(read_json_file(path));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIoError;
    }

    const auto findings = validate(net);
    for (const auto& f : findings)
        std::printf("%s: %s (%s)\n", f.rule.c_str(), f.detail.c_str(), f.entity.c_str());
    if (findings.empty())
        std::printf("ok: %zu nodes, %zu credentials, no findings\n", net.nodes.size(),
                    net.credentials.size());
    return findings.empty() ? kOk : kSemanticError;
}

struct Overrides {
    std::string out_dir;
    std::vector<std::string> agents;
    std::vector<std::uint64_t> seeds;
    int episodes = -1;
    int steps = -1;
    int workers = -1;
};

// Flag > environment > config file. Throws ValidationError on bad values.
void apply_overrides(ExperimentConfig& cfg, const Overrides& ov) {
    if (!ov.agents.empty()) {
        cfg.agents.clear();
        for (const auto& name : ov.agents) {
            const auto kind = agent_kind_from(name);
            if (!kind) throw ValidationError("unknown agent '" + name + "'");
            cfg.agents.push_back(*kind);
        }
    }
    if (!ov.seeds.empty()) cfg.seeds = ov.seeds;
    if (ov.episodes > 0) cfg.episodes = ov.episodes;
    if (ov.steps > 0) cfg.step_limit = ov.steps;
    if (ov.workers > 0) cfg.workers = ov.workers;

    if (!ov.out_dir.empty()) {
        cfg.out_dir = ov.out_dir;
    } else if (const char* env = std::getenv("HONEYSIM_OUT_DIR"); env && *env) {
        cfg.out_dir = env;
    }
    if (cfg.out_dir.empty()) cfg.out_dir = "runs/" + cfg.name;
}

int execute(ExperimentConfig cfg, const Overrides& ov) {
    try {
        apply_overrides(cfg, ov);

        // Everything the run needs is checked before any episode executes and
        // before any output path is touched.
        const Network base = resolve_scenario(cfg);
        require_valid(base);
        for (const auto& spec : cfg.grid) require_valid(apply_placement(base, spec));

        const std::size_t units = cfg.grid.size() * cfg.agents.size() * cfg.seeds.size();
        std::fprintf(stderr, "running '%s': %zu cells x %zu agents x %zu seeds (%zu units)\n",
                     cfg.name.c_str(), cfg.grid.size(), cfg.agents.size(), cfg.seeds.size(),
                     units);

        const std::size_t tick = units >= 20 ? units / 20 : 1;
        const ExperimentResult result = run_experiment(cfg, [&](std::size_t done, std::size_t total) {
            if (done % tick == 0 || done == total)
                std::fprintf(stderr, "  %zu/%zu units done\n", done, total);
        });

        const RunManifest manifest =
            write_run_outputs(cfg.out_dir, cfg, result, base.inferred_path);
        std::printf("wrote %zu files to %s (%.1fs)\n", manifest.outputs.size(),
                    cfg.out_dir.c_str(), result.wall_seconds);
        for (const auto& err : result.errors)
            std::fprintf(stderr, "unit failed: %s\n", err.c_str());
        return result.errors.empty() ? kOk : kSemanticError;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kSemanticError;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kSemanticError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIoError;
    }
}

int cmd_run(const std::string& config_path, const Overrides& ov) {
    nlohmann::json j;
    try {
        j = read_json_file(config_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIoError;
    }
    ExperimentConfig cfg;
    try {
        // A manifest embeds its config snapshot; accept either file directly.
        cfg = config_from_json(j.contains("config") ? j.at("config") : j);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kSemanticError;
    }
    return execute(std::move(cfg), ov);
}

int cmd_sweep(const std::string& preset, const Overrides& ov) {
    ExperimentConfig cfg;
    try {
        cfg = make_preset(preset);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kSemanticError;
    }
    return execute(std::move(cfg), ov);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deception-aware attack simulation experiments"};
    app.set_version_flag("--version", HONEYSIM_VERSION);
    app.require_subcommand(1);

    auto* validate_cmd =
        app.add_subcommand("validate", "check a scenario file and list findings");
    std::string scenario_path;
    validate_cmd->add_option("scenario", scenario_path,
                             "scenario JSON path or builtin:<name>")
        ->required();

    Overrides ov;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", ov.out_dir, "output directory (beats HONEYSIM_OUT_DIR)");
        cmd->add_option("--agent", ov.agents, "agents to run (rand, cred, qtab, dql)")
            ->delimiter(',');
        cmd->add_option("--seeds", ov.seeds, "seed list")->delimiter(',');
        cmd->add_option("--episodes", ov.episodes, "episodes per (cell, agent, seed)");
        cmd->add_option("--steps", ov.steps, "step limit per episode");
        cmd->add_option("--workers", ov.workers, "parallel units (default 1)");
    };

    auto* run_cmd = app.add_subcommand("run", "run an experiment config or manifest");
    std::string config_path;
    run_cmd->add_option("--config", config_path, "experiment config or manifest JSON")
        ->required();
    add_common(run_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "run a named experiment family");
    std::string preset;
    sweep_cmd
        ->add_option("--preset", preset,
                     "one of: quantity-decoys, quantity-honeypots, location-decoys, "
                     "location-honeypots, frontback")
        ->required();
    add_common(sweep_cmd);

    CLI11_PARSE(app, argc, argv);

    if (validate_cmd->parsed()) return cmd_validate(scenario_path);
    if (run_cmd->parsed()) return cmd_run(config_path, ov);
    return cmd_sweep(preset, ov);
}
