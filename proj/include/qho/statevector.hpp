#pragma once

#include <cstdint>
#include <vector>

#include "qho/types.hpp"

// Qubit ordering convention, used everywhere in this repo:
// qubit 0 is the first qubit and the MOST significant bit of a basis index.
// |q0 q1 ... q_{n-1}> has index sum_i q_i * 2^(n-1-i); outcome labels are read
// q0 first. For two qubits: index = q0*2 + q1, labels "00","01","10","11".

namespace qho {

inline constexpr int kMaxQubits = 24;

struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amps;

    std::size_t size() const { return amps.size(); }
};

/// |basis_index> on num_qubits qubits. Requires 1 <= num_qubits <= kMaxQubits
/// and basis_index < 2^num_qubits.
StateVector init_state(int num_qubits, std::uint64_t basis_index);

double norm_sq(const StateVector& s);

}  // namespace qho
