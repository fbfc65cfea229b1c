// Benchmark: bit-masked gate kernels (serial and OpenMP) against the dense
// full-matrix reference, with cross-checks that all paths agree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <vector>

#include <CLI11.hpp>

#include "qho/gates.hpp"
#include "qho/kernels.hpp"
#include "qho/sampling.hpp"
#include "qho/statevector.hpp"

using namespace qho;

namespace {

double angle(SplitMix64& rng) { return (2.0 * rng.next_double() - 1.0) * std::numbers::pi; }

Gate random_gate(SplitMix64& rng, int n) {
    std::vector<GateKind> kinds = {GateKind::X, GateKind::H, GateKind::U1, GateKind::U3};
    if (n >= 2) {
        kinds.insert(kinds.end(),
                     {GateKind::CNOT, GateKind::ACNOT, GateKind::CH, GateKind::ACU3});
    }
    if (n >= 3) kinds.push_back(GateKind::CCNOT);
    GateKind k = kinds[rng.next() % kinds.size()];

    int arity = gate_arity(k);
    std::vector<int> qs;
    while (static_cast<int>(qs.size()) < arity) {
        int q = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        bool dup = false;
        for (int used : qs) dup = dup || used == q;
        if (!dup) qs.push_back(q);
    }
    std::vector<double> ps;
    for (int i = 0; i < gate_param_count(k); ++i) ps.push_back(angle(rng));
    return Gate{k, qs, ps};
}

StateVector random_state(SplitMix64& rng, int n) {
    StateVector s = init_state(n, 0);
    for (auto& a : s.amps)
        a = cplx(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
    double inv = 1.0 / std::sqrt(norm_sq(s));
    for (auto& a : s.amps) a *= inv;
    return s;
}

double time_apply(const StateVector& start, const std::vector<Gate>& gates, Exec exec,
                  int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        StateVector s = start;
        auto t0 = std::chrono::steady_clock::now();
        for (const Gate& g : gates) apply_gate(s, g, exec);
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

double time_dense(const StateVector& start, const std::vector<Gate>& gates, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        StateVector s = start;
        auto t0 = std::chrono::steady_clock::now();
        for (const Gate& g : gates) reference::apply_gate_dense(s, g);
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int min_qubits = 4;
    int max_qubits = 20;
    int num_gates = 32;
    int reps = 5;
    std::uint64_t seed = 12345;

    CLI::App app{"gate-kernel benchmark: dense reference vs masked serial vs masked OpenMP"};
    app.add_option("--min-qubits", min_qubits)->check(CLI::Range(1, kMaxQubits));
    app.add_option("--max-qubits", max_qubits)->check(CLI::Range(1, kMaxQubits));
    app.add_option("--gates", num_gates, "gates per circuit")->check(CLI::PositiveNumber);
    app.add_option("--reps", reps, "repetitions (best time wins)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::printf("%-3s %-6s %12s %12s %12s %9s %9s  %s\n", "n", "gates", "dense_ms",
                "serial_ms", "parallel_ms", "ser/par", "dn/ser", "check");

    for (int n = min_qubits; n <= max_qubits; n += 4) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(n));
        std::vector<Gate> gates;
        for (int i = 0; i < num_gates; ++i) gates.push_back(random_gate(rng, n));
        StateVector start = random_state(rng, n);

        // Correctness first: serial vs parallel must be bitwise equal; the dense
        // path (built only for small n) must agree to near machine precision.
        StateVector ser = start;
        for (const Gate& g : gates) apply_gate(ser, g, Exec::serial);
        StateVector par = start;
        for (const Gate& g : gates) apply_gate(par, g, Exec::parallel);
        bool bitwise = std::memcmp(ser.amps.data(), par.amps.data(),
                                   ser.amps.size() * sizeof(cplx)) == 0;

        const bool run_dense = n <= 10;
        double dense_err = 0.0;
        if (run_dense) {
            StateVector dn = start;
            for (const Gate& g : gates) reference::apply_gate_dense(dn, g);
            for (std::size_t i = 0; i < dn.amps.size(); ++i)
                dense_err = std::max(dense_err, std::abs(dn.amps[i] - ser.amps[i]));
        }

        double t_ser = time_apply(start, gates, Exec::serial, reps);
        double t_par = time_apply(start, gates, Exec::parallel, reps);
        double t_dn = run_dense ? time_dense(start, gates, reps) : 0.0;

        char check[64];
        if (run_dense)
            std::snprintf(check, sizeof check, "%s, dense_err=%.1e",
                          bitwise ? "bitwise" : "MISMATCH", dense_err);
        else
            std::snprintf(check, sizeof check, "%s", bitwise ? "bitwise" : "MISMATCH");

        if (run_dense)
            std::printf("%-3d %-6d %12.3f %12.3f %12.3f %9.2f %9.1f  %s\n", n, num_gates, t_dn,
                        t_ser, t_par, t_ser / t_par, t_dn / t_ser, check);
        else
            std::printf("%-3d %-6d %12s %12.3f %12.3f %9.2f %9s  %s\n", n, num_gates, "-", t_ser,
                        t_par, t_ser / t_par, "-", check);
    }
    return 0;
}
