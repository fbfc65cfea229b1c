#include "qho/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qho/circuit.hpp"
#include "qho/experiment.hpp"
#include "qho/oracle.hpp"
#include "qho/qasm.hpp"
#include "qho/tables.hpp"
#include "qho/version.hpp"

namespace qho {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Options shared by the run-style subcommands. They live on the top-level app
// (subcommands reach them via fallthrough) so that a flat key=value --config
// file can set any of them; --omega is always a grid string, and the
// point-style subcommands require it to hold exactly one frequency.
struct Opts {
    std::string mode = "single";
    double omega0 = 1.0;
    double amplitude = std::numbers::sqrt2;
    double mass = 1.0;
    double phase = 0.0;
    std::string omega_grid = "1";
    std::string times_grid = "1,2,3,4,5";
    double time = 1.0;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 1;
    std::string trotter = "single-shot";
    std::optional<double> theta{};
    bool allow_theta = false;
    int oracle_steps = 4096;
};

std::optional<int> parse_trotter(const std::string& text) {
    if (text == "single-shot") return std::nullopt;
    char* end = nullptr;
    long n = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || text.empty())
        throw std::invalid_argument("trotter-steps: expected an integer or \"single-shot\", got \"" +
                                    text + "\"");
    return static_cast<int>(n);
}

void add_shared_options(CLI::App& app, Opts& o) {
    app.add_option("--mode", o.mode, "single (one qubit) or two (two qubits + ancillas)")
        ->check(CLI::IsMember({"single", "two"}));
    app.add_option("--omega0", o.omega0, "oscillator frequency");
    app.add_option("--amplitude", o.amplitude, "drive amplitude");
    app.add_option("--mass", o.mass, "oscillator mass");
    app.add_option("--phase", o.phase, "drive phase");
    app.add_option("--omega", o.omega_grid,
                   "drive frequencies: comma list or start:stop:step "
                   "(simulate and emit-qasm take exactly one)");
    app.add_option("--times", o.times_grid, "sweep times: comma list or start:stop:step");
    app.add_option("--time", o.time, "evolution time (simulate and emit-qasm)");
    app.add_option("--shots", o.shots, "shots per point");
    app.add_option("--seed", o.seed, "base seed (per-point seeds are derived from it)");
    app.add_option("--trotter-steps", o.trotter,
                   "single mode: step count for the stepped circuit, or single-shot");
    app.add_option("--theta", o.theta, "two mode: fix theta instead of binding it from time");
    app.add_flag("--allow-theta-out-of-range", o.allow_theta,
                 "accept --theta outside [0, 0.5]");
    app.add_option("--oracle-steps", o.oracle_steps, "steps for the exact-propagator reference");
    app.set_config("--config", "", "key=value file with these option names; flags win");
}

double single_omega(const Opts& o) {
    std::vector<double> ws = parse_grid(o.omega_grid, "omega");
    if (ws.size() != 1)
        throw std::invalid_argument("omega: this subcommand takes exactly one frequency, got " +
                                    std::to_string(ws.size()));
    return ws[0];
}

RunConfig base_config(const Opts& o) {
    RunConfig cfg;
    cfg.mode = parse_run_mode(o.mode);
    cfg.osc.omega0 = o.omega0;
    cfg.drive.amplitude = o.amplitude;
    cfg.drive.mass = o.mass;
    cfg.drive.phase = o.phase;
    cfg.shots = o.shots;
    cfg.seed = o.seed;
    cfg.trotter_steps = parse_trotter(o.trotter);
    cfg.theta_override = o.theta;
    cfg.allow_theta_out_of_range = o.allow_theta;
    cfg.oracle_steps = o.oracle_steps;
    return cfg;
}

RunConfig grid_config(const Opts& o) {
    RunConfig cfg = base_config(o);
    cfg.drive_freqs = parse_grid(o.omega_grid, "omega");
    cfg.times = parse_grid(o.times_grid, "times");
    return cfg;
}

RunConfig point_config(const Opts& o) {
    RunConfig cfg = base_config(o);
    cfg.drive_freqs = {single_omega(o)};
    cfg.times = {o.time};
    return cfg;
}

void print_point(std::ostream& out, const RunConfig& cfg, const PointResult& pt) {
    out << "mode=" << run_mode_name(cfg.mode) << " omega0=" << fmt(cfg.osc.omega0)
        << " omega=" << fmt(pt.drive_freq) << " time=" << fmt(pt.time)
        << " shots=" << pt.counts.shots << " seed=" << pt.seed << "\n";
    if (cfg.mode == RunMode::two)
        out << "theta=" << fmt(pt.theta) << " theta_clamped=" << (pt.theta_clamped ? "true" : "false")
            << "\n";
    out << "label ideal shot_freq oracle\n";
    for (std::size_t k = 0; k < pt.ideal.labels.size(); ++k) {
        double freq =
            static_cast<double>(pt.counts.counts[k]) / static_cast<double>(pt.counts.shots);
        out << pt.ideal.labels[k] << ' ' << fmt(pt.ideal.probabilities[k]) << ' ' << fmt(freq)
            << ' ' << fmt(pt.oracle.probabilities[k]) << "\n";
    }
    out << "state_distance=" << fmt(pt.state_distance) << "\n";
    if (pt.tvd_vs_ref) out << "tvd_vs_ref=" << fmt(*pt.tvd_vs_ref) << "\n";
    if (pt.first_order_norm) out << "first_order_norm=" << fmt(*pt.first_order_norm) << "\n";
    if (pt.first_order_unitarity_dev)
        out << "first_order_unitarity_dev=" << fmt(*pt.first_order_unitarity_dev) << "\n";
    if (pt.first_order_distance)
        out << "first_order_distance=" << fmt(*pt.first_order_distance) << "\n";
    if (pt.first_order_vs_exact)
        out << "first_order_vs_exact=" << fmt(*pt.first_order_vs_exact) << "\n";
}

Circuit circuit_from_point(const Opts& o) {
    RunMode mode = parse_run_mode(o.mode);
    OscillatorParams osc{o.omega0};
    DriveParams p{o.amplitude, o.mass, o.phase, single_omega(o)};
    validate(osc);
    validate(p);
    if (mode == RunMode::single) {
        std::optional<int> steps = parse_trotter(o.trotter);
        return steps ? build_single_qubit_trotter_circuit(osc, p, o.time, *steps)
                     : build_single_qubit_circuit(osc, p, o.time);
    }
    ThetaBinding tb{};
    bool allow = true;
    if (o.theta) {
        tb.theta = *o.theta;
        allow = o.allow_theta;
    } else {
        tb = bind_theta_from_time(p, o.time);
    }
    return build_two_qubit_circuit(tb.theta, allow);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"driven-oscillator circuit toolkit"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Opts o;
    add_shared_options(app, o);

    auto* sim = app.add_subcommand("simulate", "one point: circuit vs exact propagator vs shots");
    sim->fallthrough();
    sim->callback([&] {
        RunConfig cfg = point_config(o);
        RunReport rep = run_sweep(cfg);
        print_point(out, cfg, rep.points.at(0));
    });

    std::filesystem::path out_dir = "out";
    auto* sw = app.add_subcommand("sweep", "grid run; writes results.csv and run_meta.json");
    sw->fallthrough();
    sw->add_option("--out", out_dir, "output directory")->envname("QHO_OUT_DIR");
    sw->callback([&] {
        RunConfig cfg = grid_config(o);
        RunReport rep = run_sweep(cfg);
        OutputPaths paths = write_results(rep, out_dir);
        double max_sd = 0.0;
        for (const auto& pt : rep.points) max_sd = std::max(max_sd, pt.state_distance);
        out << "points=" << rep.points.size() << "\n";
        out << "config_hash=" << rep.config_hash << "\n";
        out << "max_state_distance=" << fmt(max_sd) << "\n";
        out << "wrote " << paths.results_csv.string() << "\n";
        out << "wrote " << paths.metadata_json.string() << "\n";
    });

    bool decompose_ch = false;
    std::filesystem::path qasm_out;
    auto* em = app.add_subcommand("emit-qasm", "print the circuit for one point as OpenQASM 2.0");
    em->fallthrough();
    em->add_flag("--decompose-ch", decompose_ch, "lower ch to cx plus one-qubit gates");
    em->add_option("--out", qasm_out, "write to a file instead of stdout");
    em->callback([&] {
        Circuit c = circuit_from_point(o);
        std::string text = emit_qasm(c, QasmOptions{decompose_ch});
        if (qasm_out.empty()) {
            out << text;
        } else {
            std::ofstream f(qasm_out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + qasm_out.string() + " for writing");
            f << text;
            out << "wrote " << qasm_out.string() << "\n";
        }
    });

    std::string table_id;
    auto* tb = app.add_subcommand("tables", "list or print the bundled reference tables");
    tb->add_option("id", table_id, "table id (omit to list)");
    tb->callback([&] {
        if (table_id.empty()) {
            for (const auto& id : reference_table_ids()) {
                ReferenceTable t = load_reference_table(id);
                char sum[20];
                std::snprintf(sum, sizeof sum, "%016llx",
                              static_cast<unsigned long long>(reference_checksum(t)));
                out << id << " mode=" << run_mode_name(t.mode) << " omega=" << fmt(t.drive_freq)
                    << " checksum=" << sum << "\n";
            }
            return;
        }
        ReferenceTable t = load_reference_table(table_id);
        out << "id=" << t.id << " mode=" << run_mode_name(t.mode) << " omega=" << fmt(t.drive_freq)
            << "\n";
        out << "time";
        for (const auto& lbl : t.labels) out << '\t' << lbl;
        out << "\n";
        for (std::size_t r = 0; r < t.times.size(); ++r) {
            out << fmt(t.times[r]);
            for (const auto& cell : t.percent_text[r]) out << '\t' << cell;
            out << "\n";
        }
    });

    std::string compare_table;
    auto* cp = app.add_subcommand("compare", "sweep, then TVD against a bundled table");
    cp->fallthrough();
    cp->add_option("--table", compare_table, "table id (see `tables`)")->required();
    cp->callback([&] {
        ReferenceTable table = load_reference_table(compare_table);
        RunConfig cfg = grid_config(o);
        RunReport rep = run_sweep(cfg);
        CompareResult res = compare_to_reference(rep, table);
        out << "table=" << res.table_id << " omega=" << fmt(table.drive_freq) << "\n";
        for (const auto& row : res.rows)
            out << "time=" << fmt(row.time) << " tvd=" << fmt(row.tvd) << "\n";
        out << "mean_tvd=" << fmt(res.mean_tvd) << " max_tvd=" << fmt(res.max_tvd) << "\n";
        if (!res.skipped_times.empty()) {
            out << "skipped_times=";
            for (std::size_t i = 0; i < res.skipped_times.size(); ++i)
                out << (i ? "," : "") << fmt(res.skipped_times[i]);
            out << " (no matching sweep point)\n";
        }
    });

    try {
        std::vector<std::string> rargs(args.rbegin(), args.rend());
        app.parse(rargs);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace qho
