#include "qho/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qho/oracle.hpp"
#include "qho/version.hpp"

namespace qho {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += fmt(vs[i]);
    }
    return s;
}

Distribution row_distribution(const ReferenceTable& t, std::size_t row) {
    Distribution d;
    d.labels = t.labels;
    d.probabilities.reserve(t.labels.size());
    for (double pct : t.percent[row]) d.probabilities.push_back(pct / 100.0);
    return d;
}

void attach_ref_tvd(PointResult& pr, const ReferenceTable* ref) {
    if (!ref) return;
    for (std::size_t r = 0; r < ref->times.size(); ++r) {
        if (std::abs(ref->times[r] - pr.time) < 1e-9) {
            pr.tvd_vs_ref = dist_tv(pr.ideal, row_distribution(*ref, r));
            return;
        }
    }
}

PointResult run_single_point(const RunConfig& cfg, double w, double t, const ReferenceTable* ref) {
    DriveParams p = cfg.drive;
    p.drive_freq = w;

    PointResult pr;
    pr.drive_freq = w;
    pr.time = t;
    pr.seed = derive_seed(cfg.seed, w, t);

    Circuit c = cfg.trotter_steps
                    ? build_single_qubit_trotter_circuit(cfg.osc, p, t, *cfg.trotter_steps)
                    : build_single_qubit_circuit(cfg.osc, p, t);
    StateVector psi = run(c);
    pr.ideal = marginal_probabilities(psi, c.system_qubits);
    pr.counts = sample_shots(pr.ideal, cfg.shots, pr.seed);

    PropagationResult ex =
        exact_propagate(single_qubit_hamiltonian_fn(cfg.osc, p), t, cfg.oracle_steps, init_state(1, 0));
    pr.oracle = marginal_probabilities(ex.final_state, {0});
    pr.state_distance = state_distance(psi, ex.final_state);

    attach_ref_tvd(pr, ref);
    return pr;
}

PointResult run_two_point(const RunConfig& cfg, double w, double t, const ReferenceTable* ref) {
    DriveParams p = cfg.drive;
    p.drive_freq = w;

    PointResult pr;
    pr.drive_freq = w;
    pr.time = t;
    pr.seed = derive_seed(cfg.seed, w, t);

    ThetaBinding tb{};
    bool allow = true;  // the time binding already clamps theta
    if (cfg.theta_override) {
        tb.theta = *cfg.theta_override;
        tb.clamped = false;
        allow = cfg.allow_theta_out_of_range;
    } else {
        tb = bind_theta_from_time(p, t);
    }
    pr.theta = tb.theta;
    pr.theta_clamped = tb.clamped;

    Circuit c = build_two_qubit_circuit(tb.theta, allow);
    StateVector psi = run(c);
    pr.ideal = marginal_probabilities(psi, c.system_qubits);
    pr.counts = sample_shots(pr.ideal, cfg.shots, pr.seed);

    PropagationResult ex =
        exact_propagate(two_qubit_hamiltonian_fn(cfg.osc, p), t, cfg.oracle_steps, init_state(2, 0));
    pr.oracle = marginal_probabilities(ex.final_state, {0, 1});
    pr.state_distance = reduced_state_distance(psi, c.system_qubits, ex.final_state);

    // First-order diagnostics: reported in the metadata, never asserted.
    PropagationResult fo = first_order_propagate(p, t, init_state(2, 0));
    pr.first_order_norm = fo.final_norm;
    pr.first_order_unitarity_dev = first_order_two_qubit_operator(p, t).unitarity_deviation;
    if (fo.final_norm > 0.0) {
        StateVector fon = fo.final_state;
        for (auto& a : fon.amps) a /= fo.final_norm;
        pr.first_order_distance = reduced_state_distance(psi, c.system_qubits, fon);
        pr.first_order_vs_exact = state_distance(fon, ex.final_state);
    }

    attach_ref_tvd(pr, ref);
    return pr;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("failed to write " + path.string());
}

template <class T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json config_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(run_mode_name(c.mode));
    j["omega0"] = c.osc.omega0;
    j["omega"] = c.drive_freqs;
    j["times"] = c.times;
    j["shots"] = c.shots;
    j["seed"] = c.seed;
    if (c.trotter_steps)
        j["trotter-steps"] = *c.trotter_steps;
    else
        j["trotter-steps"] = "single-shot";
    j["theta"] = opt_json(c.theta_override);
    j["allow-theta-out-of-range"] = c.allow_theta_out_of_range;
    j["oracle-steps"] = c.oracle_steps;
    j["amplitude"] = c.drive.amplitude;
    j["mass"] = c.drive.mass;
    j["phase"] = c.drive.phase;
    return j;
}

}  // namespace

void RunConfig::validate() const {
    qho::validate(osc);
    if (drive_freqs.empty()) throw std::invalid_argument("omega: at least one drive frequency required");
    DriveParams p = drive;
    for (double w : drive_freqs) {
        if (!(w > 0.0))
            throw std::invalid_argument("drive_freq: sweep frequencies must be > 0, got " + fmt(w));
        p.drive_freq = w;
        qho::validate(p);
    }
    if (times.empty()) throw std::invalid_argument("times: at least one time required");
    for (double t : times) {
        if (!std::isfinite(t) || t < 0.0)
            throw std::invalid_argument("times: must be finite and >= 0, got " + fmt(t));
    }
    if (shots == 0) throw std::invalid_argument("shots: must be >= 1");
    if (trotter_steps && *trotter_steps < 1)
        throw std::invalid_argument("trotter-steps: must be >= 1");
    if (theta_override) {
        double th = *theta_override;
        if (!std::isfinite(th)) throw std::invalid_argument("theta: must be finite");
        if (!allow_theta_out_of_range && (th < kThetaMin || th > kThetaMax))
            throw std::invalid_argument("theta: " + fmt(th) + " is outside [" + fmt(kThetaMin) + ", " +
                                        fmt(kThetaMax) +
                                        "] (use allow-theta-out-of-range to override)");
    }
    if (oracle_steps < 1) throw std::invalid_argument("oracle-steps: must be >= 1");
}

std::optional<std::string> reference_table_for(RunMode mode, double omega) {
    auto near = [&](double x) { return std::abs(omega - x) < 1e-9; };
    if (mode == RunMode::single) {
        if (near(1.0)) return "single_w1";
        if (near(2.0)) return "single_w2";
    } else {
        if (near(1.0)) return "two_w1";
        if (near(5.0)) return "two_w5";
    }
    return std::nullopt;
}

RunReport run_sweep(const RunConfig& cfg) {
    cfg.validate();

    RunReport rep;
    rep.config = cfg;
    rep.config_hash = config_hash_hex(cfg);
    rep.version = std::string(kVersion);

    // Bundled tables looked up once per distinct drive frequency.
    std::map<double, std::optional<ReferenceTable>> tables;
    for (double w : cfg.drive_freqs) {
        if (tables.count(w)) continue;
        std::optional<ReferenceTable> t;
        if (auto id = reference_table_for(cfg.mode, w)) t = load_reference_table(*id);
        tables.emplace(w, std::move(t));
    }

    struct Job {
        double w, t;
    };
    std::vector<Job> jobs;
    jobs.reserve(cfg.drive_freqs.size() * cfg.times.size());
    for (double w : cfg.drive_freqs)
        for (double t : cfg.times) jobs.push_back({w, t});
    rep.points.resize(jobs.size());

    // Points are independent; each derives its own shot seed, so the schedule
    // cannot change any value, only the wall time.
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
    const std::int64_t n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            const Job& j = jobs[static_cast<std::size_t>(i)];
            const auto& maybe_table = tables.at(j.w);
            const ReferenceTable* ref = maybe_table ? &*maybe_table : nullptr;
            rep.points[static_cast<std::size_t>(i)] =
                cfg.mode == RunMode::single ? run_single_point(cfg, j.w, j.t, ref)
                                            : run_two_point(cfg, j.w, j.t, ref);
        } catch (...) {
#pragma omp critical(qho_sweep_error)
            {
                if (!first_error) first_error = std::current_exception();
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    return rep;
}

CompareResult compare_to_reference(const RunReport& report, const ReferenceTable& table) {
    if (report.config.mode != table.mode)
        throw std::invalid_argument("table " + table.id + " is " +
                                    std::string(run_mode_name(table.mode)) +
                                    "-mode but the report is " +
                                    std::string(run_mode_name(report.config.mode)) + "-mode");

    CompareResult res;
    res.table_id = table.id;
    for (std::size_t r = 0; r < table.times.size(); ++r) {
        const PointResult* match = nullptr;
        for (const auto& pt : report.points) {
            if (std::abs(pt.time - table.times[r]) < 1e-9 &&
                std::abs(pt.drive_freq - table.drive_freq) < 1e-9) {
                match = &pt;
                break;
            }
        }
        if (!match) {
            res.skipped_times.push_back(table.times[r]);
            continue;
        }
        res.rows.push_back(
            {table.times[r], table.drive_freq, dist_tv(match->ideal, row_distribution(table, r))});
    }
    if (res.rows.empty())
        throw std::invalid_argument("no sweep point matches table " + table.id +
                                    " (it needs drive frequency " + fmt(table.drive_freq) + ")");

    double sum = 0.0;
    for (const auto& row : res.rows) {
        sum += row.tvd;
        res.max_tvd = std::max(res.max_tvd, row.tvd);
    }
    res.mean_tvd = sum / static_cast<double>(res.rows.size());
    return res;
}

OutputPaths write_results(const RunReport& report, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    OutputPaths paths{out_dir / "results.csv", out_dir / "run_meta.json"};

    std::string csv =
        "mode,omega0,omega,time,label,ideal_prob,shot_freq,oracle_prob,state_distance,tvd_vs_ref,"
        "seed\n";
    const std::string mode(run_mode_name(report.config.mode));
    for (const auto& pt : report.points) {
        for (std::size_t k = 0; k < pt.ideal.labels.size(); ++k) {
            double freq = static_cast<double>(pt.counts.counts[k]) /
                          static_cast<double>(pt.counts.shots);
            csv += mode;
            csv += ',';
            csv += fmt(report.config.osc.omega0);
            csv += ',';
            csv += fmt(pt.drive_freq);
            csv += ',';
            csv += fmt(pt.time);
            csv += ',';
            csv += pt.ideal.labels[k];
            csv += ',';
            csv += fmt(pt.ideal.probabilities[k]);
            csv += ',';
            csv += fmt(freq);
            csv += ',';
            csv += fmt(pt.oracle.probabilities[k]);
            csv += ',';
            csv += fmt(pt.state_distance);
            csv += ',';
            if (pt.tvd_vs_ref) csv += fmt(*pt.tvd_vs_ref);
            csv += ',';
            csv += std::to_string(pt.seed);
            csv += '\n';
        }
    }
    write_file(paths.results_csv, csv);

    nlohmann::ordered_json j;
    j["version"] = report.version;
    j["config_hash"] = report.config_hash;
    j["config"] = config_json(report.config);
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& pt : report.points) {
        nlohmann::ordered_json pj;
        pj["omega"] = pt.drive_freq;
        pj["time"] = pt.time;
        pj["seed"] = pt.seed;
        pj["labels"] = pt.ideal.labels;
        pj["ideal"] = pt.ideal.probabilities;
        pj["counts"] = pt.counts.counts;
        pj["oracle"] = pt.oracle.probabilities;
        pj["state_distance"] = pt.state_distance;
        pj["tvd_vs_ref"] = opt_json(pt.tvd_vs_ref);
        if (report.config.mode == RunMode::two) {
            pj["theta"] = pt.theta;
            pj["theta_clamped"] = pt.theta_clamped;
            nlohmann::ordered_json fo;
            fo["norm"] = opt_json(pt.first_order_norm);
            fo["unitarity_deviation"] = opt_json(pt.first_order_unitarity_dev);
            fo["distance_vs_circuit"] = opt_json(pt.first_order_distance);
            fo["distance_vs_exact"] = opt_json(pt.first_order_vs_exact);
            pj["first_order"] = fo;
        }
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    write_file(paths.metadata_json, j.dump(2) + "\n");

    return paths;
}

std::vector<double> parse_grid(const std::string& text, const std::string& field) {
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    auto to_double = [&](const std::string& tok) -> double {
        std::string t = trim(tok);
        if (t.empty())
            throw std::invalid_argument(field + ": empty entry in \"" + text + "\"");
        char* end = nullptr;
        double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size() || !std::isfinite(v))
            throw std::invalid_argument(field + ": cannot parse \"" + t + "\" as a number");
        return v;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t pos = s.find(sep, start);
            parts.push_back(s.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return parts;
    };

    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument(field + ": empty grid");

    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        std::vector<std::string> parts = split(s, ':');
        if (parts.size() != 3)
            throw std::invalid_argument(field + ": range form is start:stop:step");
        double start = to_double(parts[0]);
        double stop = to_double(parts[1]);
        double step = to_double(parts[2]);
        if (step <= 0.0) throw std::invalid_argument(field + ": step must be > 0");
        if (stop < start - 1e-9) throw std::invalid_argument(field + ": stop must be >= start");
        for (int k = 0;; ++k) {
            double v = start + k * step;
            if (v > stop + 1e-9) break;
            out.push_back(v);
            if (out.size() > 1000000)
                throw std::invalid_argument(field + ": range produces too many points");
        }
    } else {
        for (const auto& tok : split(s, ',')) out.push_back(to_double(tok));
    }
    return out;
}

std::string config_canonical(const RunConfig& c) {
    std::string s;
    s += "mode=";
    s += run_mode_name(c.mode);
    s += '\n';
    s += "omega0=" + fmt(c.osc.omega0) + "\n";
    s += "omega=\"" + join(c.drive_freqs) + "\"\n";
    s += "times=\"" + join(c.times) + "\"\n";
    s += "shots=" + std::to_string(c.shots) + "\n";
    s += "seed=" + std::to_string(c.seed) + "\n";
    s += "trotter-steps=" +
         (c.trotter_steps ? std::to_string(*c.trotter_steps) : std::string("single-shot")) + "\n";
    if (c.theta_override) s += "theta=" + fmt(*c.theta_override) + "\n";
    s += "allow-theta-out-of-range=" + std::string(c.allow_theta_out_of_range ? "true" : "false") +
         "\n";
    s += "oracle-steps=" + std::to_string(c.oracle_steps) + "\n";
    s += "amplitude=" + fmt(c.drive.amplitude) + "\n";
    s += "mass=" + fmt(c.drive.mass) + "\n";
    s += "phase=" + fmt(c.drive.phase) + "\n";
    return s;
}

std::string config_hash_hex(const RunConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config_canonical(cfg))));
    return buf;
}

}  // namespace qho
