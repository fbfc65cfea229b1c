#pragma once

#include <string>
#include <vector>

#include "qho/circuit.hpp"
#include "qho/kernels.hpp"
#include "qho/statevector.hpp"

namespace qho {

/// Outcome labels (bitstrings, first system qubit leftmost, ordered by value)
/// with their probabilities.
struct Distribution {
    std::vector<std::string> labels;
    std::vector<double> probabilities;
};

/// Applies c.gates in order to `initial` (dimension must match c.num_qubits).
StateVector run(const Circuit& c, StateVector initial, Exec exec = Exec::automatic);

/// run from |0...0>.
StateVector run(const Circuit& c, Exec exec = Exec::automatic);

/// Probabilities of the system-qubit outcomes, summed over all other qubits.
/// system_qubits[0] is the leftmost label bit.
Distribution marginal_probabilities(const StateVector& s,
                                    const std::vector<int>& system_qubits);

}  // namespace qho
