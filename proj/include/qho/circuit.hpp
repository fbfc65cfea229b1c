#pragma once

#include <vector>

#include "qho/drive.hpp"
#include "qho/gates.hpp"

namespace qho {

/// Gates are stored in application order (gates[0] acts first).
/// system_qubits are the measured qubits; their order fixes the bit order of
/// outcome labels (first listed = leftmost label bit).
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
    std::vector<int> system_qubits;
};

/// Throws std::invalid_argument on empty/duplicate/out-of-range system qubits,
/// invalid gates, or num_qubits < 1.
void validate_circuit(const Circuit& c);

/// Single-shot one-qubit evolution circuit:
///   U3(2*t*F(t), -pi/2, pi/2) then U1(-omega0*t)
/// which is exp(-i t F(t) X) followed by the level-splitting phase.
Circuit build_single_qubit_circuit(const OscillatorParams& osc, const DriveParams& p,
                                   double t);

/// Where the drive is sampled within each step of the stepped circuit.
/// midpoint converges to the exact dynamics; step_end with n_steps = 1
/// reproduces build_single_qubit_circuit.
enum class DriveSampling { midpoint, step_end };

/// n_steps repetitions of U3(2*dt*F(t_k), -pi/2, pi/2); U1(-omega0*dt) with
/// dt = t/n_steps and t_k per the sampling rule.
Circuit build_single_qubit_trotter_circuit(const OscillatorParams& osc,
                                           const DriveParams& p, double t, int n_steps,
                                           DriveSampling sampling = DriveSampling::midpoint);

/// Valid AC-U3 angle range for the five-qubit circuit.
inline constexpr double kThetaMin = 0.0;
inline constexpr double kThetaMax = 0.5;

/// theta = t*F(t) clamped to [-0.5, 0.5]; clamped records whether the clamp hit.
struct ThetaBinding {
    double theta = 0.0;
    bool clamped = false;
};
ThetaBinding bind_theta_from_time(const DriveParams& p, double t);

/// Five-qubit circuit (system = qubits 0-1, ancillas 2-4; qubit 4 is allocated
/// but untouched). Gate sequence, in application order:
///   CNOT(0,2), ACU3(2,0), CCNOT(0,2,1), ACU3(2,1), CNOT(0,1),
///   H(3), CNOT(3,1), CNOT(3,0), H(3), CH(3,0)
/// with both ACU3 carrying (theta, -pi/2, pi/2). theta outside
/// [kThetaMin, kThetaMax] is rejected unless allow_out_of_range is set
/// (time-driven bindings pass the flag because bind_theta_from_time already
/// clamps to the physical envelope).
Circuit build_two_qubit_circuit(double theta, bool allow_out_of_range = false);

}  // namespace qho
