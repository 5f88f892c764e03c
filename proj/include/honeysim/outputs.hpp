#pragma once

// Run directory writer. A finished experiment lands on disk as:
//
//   <out_dir>/config.json    resolved configuration snapshot
//   <out_dir>/details.csv    one row per (grid cell, agent, seed, episode)
//   <out_dir>/summary.csv    mean/std per (grid cell, agent)
//   <out_dir>/plots/*.svg    one figure family per agent
//   <out_dir>/manifest.json  written last, atomically (tmp + rename)
//
// The manifest embeds the config snapshot, so feeding it back as --config
// reproduces the CSVs byte for byte. Nothing is written until the run has
// already succeeded; validation failures leave no partial directories.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "honeysim/config.hpp"
#include "honeysim/errors.hpp"
#include "honeysim/harness.hpp"
#include "honeysim/metrics.hpp"
#include "honeysim/plots.hpp"
#include "honeysim/version.hpp"

namespace honeysim {

inline constexpr int kManifestSchemaVersion = 1;

struct RunManifest {
    ExperimentConfig config;
    std::string code_version = HONEYSIM_VERSION;
    std::vector<std::string> outputs; // paths relative to the run directory
    std::vector<std::string> errors;  // units that failed, if any
    double wall_seconds = 0.0;
};

inline nlohmann::json to_json(const RunManifest& m) {
    nlohmann::json j;
    j["schema_version"] = kManifestSchemaVersion;
    j["code_version"] = m.code_version;
    j["config"] = to_json(m.config);
    j["seeds"] = m.config.seeds;
    j["outputs"] = m.outputs;
    if (!m.errors.empty()) j["errors"] = m.errors;
    j["wall_seconds"] = m.wall_seconds;
    return j;
}

namespace detail {

inline void write_file_or_throw(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw EngineError("cannot write '" + path + "'");
    out << body;
    out.flush();
    if (!out) throw EngineError("short write on '" + path + "'");
}

// Atomic publish: the manifest only ever exists complete.
inline void write_atomically(const std::string& path, const std::string& body) {
    const std::string tmp = path + ".tmp";
    write_file_or_throw(tmp, body);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw EngineError("cannot publish '" + path + "': " + ec.message());
    }
}

} // namespace detail

// Writes every artifact of a finished run and returns the manifest.
// path_names labels location-plot ticks (pass the scenario's inferred path).
inline RunManifest write_run_outputs(const std::string& out_dir, const ExperimentConfig& cfg,
                                     const ExperimentResult& result,
                                     const std::vector<std::string>& path_names = {}) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir + "/plots", ec);
    if (ec) throw EngineError("cannot create output directory '" + out_dir + "': " + ec.message());

    RunManifest manifest;
    manifest.config = cfg;
    manifest.errors = result.errors;
    manifest.wall_seconds = result.wall_seconds;

    detail::write_file_or_throw(out_dir + "/config.json", to_json(cfg).dump(2) + "\n");
    manifest.outputs.push_back("config.json");

    {
        std::ofstream out(out_dir + "/details.csv", std::ios::binary);
        if (!out) throw EngineError("cannot write '" + out_dir + "/details.csv'");
        write_detail_csv(result.rows, out);
        if (!out) throw EngineError("short write on '" + out_dir + "/details.csv'");
    }
    manifest.outputs.push_back("details.csv");

    {
        std::ofstream out(out_dir + "/summary.csv", std::ios::binary);
        if (!out) throw EngineError("cannot write '" + out_dir + "/summary.csv'");
        write_summary_csv(result.summary, out);
        if (!out) throw EngineError("short write on '" + out_dir + "/summary.csv'");
    }
    manifest.outputs.push_back("summary.csv");

    for (const std::string& file : emit_plots(result.summary, out_dir + "/plots", path_names))
        manifest.outputs.push_back("plots/" + file);

    detail::write_atomically(out_dir + "/manifest.json", to_json(manifest).dump(2) + "\n");
    manifest.outputs.push_back("manifest.json");
    return manifest;
}

} // namespace honeysim
