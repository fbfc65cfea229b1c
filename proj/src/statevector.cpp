#include "qho/statevector.hpp"

#include <stdexcept>
#include <string>

namespace qho {

StateVector init_state(int num_qubits, std::uint64_t basis_index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("num_qubits: must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    const std::uint64_t dim = 1ULL << num_qubits;
    if (basis_index >= dim)
        throw std::invalid_argument("basis_index: must be < 2^num_qubits");
    StateVector s;
    s.num_qubits = num_qubits;
    s.amps.assign(dim, cplx{0.0, 0.0});
    s.amps[basis_index] = cplx{1.0, 0.0};
    return s;
}

double norm_sq(const StateVector& s) {
    double acc = 0.0;
    for (const cplx& a : s.amps) acc += std::norm(a);
    return acc;
}

}  // namespace qho
