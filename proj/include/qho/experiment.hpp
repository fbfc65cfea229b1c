#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qho/circuit.hpp"
#include "qho/drive.hpp"
#include "qho/sampling.hpp"
#include "qho/simulator.hpp"
#include "qho/tables.hpp"

namespace qho {

/// One sweep description. drive.drive_freq is ignored; the sweep takes its
/// drive frequencies from drive_freqs.
struct RunConfig {
    RunMode mode = RunMode::single;
    OscillatorParams osc{};
    DriveParams drive{};
    std::vector<double> drive_freqs{1.0};
    std::vector<double> times{1.0, 2.0, 3.0, 4.0, 5.0};
    std::uint64_t shots = 1024;
    std::uint64_t seed = 1;
    /// Single-qubit mode: nullopt = single-shot circuit, n = n-step circuit
    /// with midpoint drive sampling. Ignored in two-qubit mode.
    std::optional<int> trotter_steps{};
    /// Two-qubit mode: fixes theta instead of binding it from t.
    std::optional<double> theta_override{};
    bool allow_theta_out_of_range = false;
    /// Steps for the exact-propagator reference column.
    int oracle_steps = 4096;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Results for one (omega, t) sweep point. Optional fields are two-qubit-mode
/// diagnostics (reported, never asserted).
struct PointResult {
    double drive_freq = 0.0;
    double time = 0.0;
    std::uint64_t seed = 0;
    Distribution ideal;
    ShotCounts counts;
    Distribution oracle;
    /// Circuit vs exact propagator: state_distance in single mode,
    /// reduced_state_distance in two mode.
    double state_distance = 0.0;
    std::optional<double> tvd_vs_ref{};
    double theta = 0.0;
    bool theta_clamped = false;
    std::optional<double> first_order_distance{};  // circuit vs normalized first-order state
    std::optional<double> first_order_vs_exact{};
    std::optional<double> first_order_norm{};
    std::optional<double> first_order_unitarity_dev{};
};

struct RunReport {
    RunConfig config;
    std::string config_hash;
    std::string version;
    std::vector<PointResult> points;
};

/// Runs every (omega, t) point: build circuit, simulate, sample shots with
/// seed = derive_seed(config.seed, omega, t), attach the exact-propagator
/// reference and distances, and fill tvd_vs_ref where a bundled reference
/// table covers (mode, omega, t). Points are independent jobs and run in
/// parallel; output order and all values are deterministic.
RunReport run_sweep(const RunConfig& cfg);

/// The bundled table matching (mode, omega), if any.
std::optional<std::string> reference_table_for(RunMode mode, double omega);

struct CompareRow {
    double time = 0.0;
    double omega = 0.0;
    double tvd = 0.0;
};
struct CompareResult {
    std::string table_id;
    std::vector<CompareRow> rows;
    double mean_tvd = 0.0;
    double max_tvd = 0.0;
    std::vector<double> skipped_times;  // table rows with no matching sweep point
};

/// TVD per time between the report's ideal distributions (at the table's
/// drive frequency) and the table rows. Throws std::invalid_argument when the
/// modes differ or no row matches.
CompareResult compare_to_reference(const RunReport& report, const ReferenceTable& table);

struct OutputPaths {
    std::filesystem::path results_csv;
    std::filesystem::path metadata_json;
};

/// Writes results.csv (one row per point and label; header mode,omega0,omega,
/// time,label,ideal_prob,shot_freq,oracle_prob,state_distance,tvd_vs_ref,seed)
/// and run_meta.json (config echo, config hash, version, per-point seeds and
/// diagnostics). Both files are byte-deterministic for a given report.
OutputPaths write_results(const RunReport& report, const std::filesystem::path& out_dir);

/// Grid syntax: comma list "1,2,5" or range "start:stop:step" (stop inclusive
/// within 1e-9). Throws std::invalid_argument naming `field`.
std::vector<double> parse_grid(const std::string& text, const std::string& field);

/// Canonical key=value form of the config (also valid --config file content).
std::string config_canonical(const RunConfig& cfg);

/// FNV-1a 64 of config_canonical, as 16 hex digits.
std::string config_hash_hex(const RunConfig& cfg);

}  // namespace qho
