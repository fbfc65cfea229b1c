#pragma once

#include <Eigen/Dense>

#include "qho/gates.hpp"
#include "qho/statevector.hpp"

namespace qho {

/// automatic enables OpenMP above a size threshold; serial/parallel force the
/// choice (used by the benchmark). Thread count never changes the arithmetic:
/// every amplitude group is computed independently with identical operation
/// order, so results are bitwise equal across policies.
enum class Exec { automatic, serial, parallel };

/// In-place bit-masked gate application: amplitudes are processed in groups of
/// 2^k indexed by the gate-qubit bit masks; no 2^n x 2^n matrix is formed.
void apply_gate(StateVector& s, const Gate& g, Exec exec = Exec::automatic);

namespace reference {

/// The gate embedded into the full 2^n x 2^n unitary (identity elsewhere).
Eigen::MatrixXcd embedded_unitary(const Gate& g, int num_qubits);

/// Serial full-matrix reference: builds the embedded unitary and multiplies.
/// Kept as the independent check of apply_gate and as the benchmark baseline.
void apply_gate_dense(StateVector& s, const Gate& g);

}  // namespace reference

}  // namespace qho
