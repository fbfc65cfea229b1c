#pragma once

#include <Eigen/Dense>

#include "qho/circuit.hpp"
#include "qho/hamiltonian.hpp"
#include "qho/simulator.hpp"
#include "qho/statevector.hpp"

namespace qho {

enum class PropagationMethod { exact, trotter, first_order_published };

struct PropagationResult {
    StateVector final_state;
    int steps = 1;
    PropagationMethod method = PropagationMethod::exact;
    /// Norm of final_state. Unity for exact/trotter; recorded (not asserted)
    /// for first_order_published, whose operator is not exactly unitary.
    double final_norm = 1.0;
};

/// Piecewise-constant midpoint propagator: steps factors of
/// exp(-i H((k+1/2) dt) dt) computed by Hermitian eigendecomposition.
/// Throws on steps < 1, dimension mismatch, or a non-Hermitian source
/// (HermitianOperator construction enforces the latter).
PropagationResult exact_propagate(const HamiltonianFn& h, double t_final, int steps,
                                  const StateVector& initial);

/// Runs build_single_qubit_trotter_circuit through the simulator. With
/// n_steps = 1 and DriveSampling::step_end this is exactly the single-shot
/// circuit; with midpoint sampling it converges to exact_propagate.
PropagationResult trotterized_propagate(const OscillatorParams& osc, const DriveParams& p,
                                        double t_final, int n_steps,
                                        const StateVector& initial,
                                        DriveSampling sampling = DriveSampling::midpoint);

/// First-order expansion operator for the four-level system, kept exactly in
/// its published form: ones on the diagonal, -i*t*F(t) at the drive-matrix
/// positions except entry (1,2) which is +i*t*F(t). Not exactly unitary;
/// unitarity_deviation = ||U U^dagger - I||_F is reported, never asserted.
struct FirstOrderOperator {
    Eigen::Matrix4cd matrix;
    double unitarity_deviation = 0.0;
};
FirstOrderOperator first_order_two_qubit_operator(const DriveParams& p, double t);

/// Applies the first-order operator to a 2-qubit state. final_norm records the
/// (generally non-unit) output norm; the state is not renormalized.
PropagationResult first_order_propagate(const DriveParams& p, double t,
                                        const StateVector& initial);

/// 1 - |<a|b>|; global-phase invariant; clamped to >= 0. Dimensions must match.
double state_distance(const StateVector& a, const StateVector& b);

/// Total variation distance (1/2) sum |p_i - q_i|; labels must match.
double dist_tv(const Distribution& p, const Distribution& q);

/// Reduced density matrix of keep_qubits (keep_qubits[0] = most significant).
Eigen::MatrixXcd reduced_density_matrix(const StateVector& s,
                                        const std::vector<int>& keep_qubits);

/// 1 - sqrt(<target| rho_sys |target>): distance between a pure target state
/// and the reduced system state of `full`. Coincides with state_distance when
/// the non-system qubits are unentangled.
double reduced_state_distance(const StateVector& full,
                              const std::vector<int>& system_qubits,
                              const StateVector& target);

}  // namespace qho
