#include "qho/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qho {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

void validate_circuit(const Circuit& c) {
    if (c.num_qubits < 1)
        throw std::invalid_argument("num_qubits: must be >= 1");
    if (c.system_qubits.empty())
        throw std::invalid_argument("system_qubits: must be non-empty");
    for (std::size_t i = 0; i < c.system_qubits.size(); ++i) {
        const int q = c.system_qubits[i];
        if (q < 0 || q >= c.num_qubits)
            throw std::invalid_argument("system_qubits: index " + std::to_string(q) +
                                        " out of range");
        for (std::size_t j = i + 1; j < c.system_qubits.size(); ++j)
            if (q == c.system_qubits[j])
                throw std::invalid_argument("system_qubits: indices must be distinct");
    }
    for (const Gate& g : c.gates) validate_gate(g, c.num_qubits);
}

Circuit build_single_qubit_circuit(const OscillatorParams& osc, const DriveParams& p,
                                   double t) {
    validate(osc);
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("t: must be finite and >= 0");
    const double f = drive_force(p, t);
    Circuit c;
    c.num_qubits = 1;
    c.system_qubits = {0};
    c.gates.push_back(Gate::u3(2.0 * t * f, -kHalfPi, kHalfPi, 0));
    c.gates.push_back(Gate::u1(-osc.omega0 * t, 0));
    return c;
}

Circuit build_single_qubit_trotter_circuit(const OscillatorParams& osc,
                                           const DriveParams& p, double t, int n_steps,
                                           DriveSampling sampling) {
    validate(osc);
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("t: must be finite and >= 0");
    if (n_steps < 1)
        throw std::invalid_argument("n_steps: must be >= 1");
    const double dt = t / n_steps;
    Circuit c;
    c.num_qubits = 1;
    c.system_qubits = {0};
    for (int k = 0; k < n_steps; ++k) {
        const double tk =
            sampling == DriveSampling::midpoint ? (k + 0.5) * dt : (k + 1.0) * dt;
        c.gates.push_back(Gate::u3(2.0 * dt * drive_force(p, tk), -kHalfPi, kHalfPi, 0));
        c.gates.push_back(Gate::u1(-osc.omega0 * dt, 0));
    }
    return c;
}

ThetaBinding bind_theta_from_time(const DriveParams& p, double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("t: must be finite and >= 0");
    const double raw = t * drive_force(p, t);
    ThetaBinding b;
    b.theta = std::clamp(raw, -0.5, 0.5);
    b.clamped = b.theta != raw;
    return b;
}

Circuit build_two_qubit_circuit(double theta, bool allow_out_of_range) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("theta: must be finite");
    if (!allow_out_of_range && (theta < kThetaMin || theta > kThetaMax))
        throw std::invalid_argument("theta: " + std::to_string(theta) + " outside [" +
                                    std::to_string(kThetaMin) + ", " +
                                    std::to_string(kThetaMax) +
                                    "] (pass the override to allow)");
    Circuit c;
    c.num_qubits = 5;
    c.system_qubits = {0, 1};
    c.gates = {
        Gate::cnot(0, 2),
        Gate::acu3(theta, -kHalfPi, kHalfPi, 2, 0),
        Gate::ccnot(0, 2, 1),
        Gate::acu3(theta, -kHalfPi, kHalfPi, 2, 1),
        Gate::cnot(0, 1),
        Gate::h(3),
        Gate::cnot(3, 1),
        Gate::cnot(3, 0),
        Gate::h(3),
        Gate::ch(3, 0),
    };
    return c;
}

}  // namespace qho
