#include "qho/simulator.hpp"

#include <stdexcept>
#include <string>

namespace qho {

StateVector run(const Circuit& c, StateVector initial, Exec exec) {
    validate_circuit(c);
    if (initial.num_qubits != c.num_qubits ||
        initial.amps.size() != (1ULL << c.num_qubits))
        throw std::invalid_argument("initial: state dimension does not match circuit");
    for (const Gate& g : c.gates) apply_gate(initial, g, exec);
    return initial;
}

StateVector run(const Circuit& c, Exec exec) {
    validate_circuit(c);
    return run(c, init_state(c.num_qubits, 0), exec);
}

Distribution marginal_probabilities(const StateVector& s,
                                    const std::vector<int>& system_qubits) {
    if (s.num_qubits < 1 || s.amps.size() != (1ULL << s.num_qubits))
        throw std::invalid_argument("state: inconsistent dimensions");
    if (system_qubits.empty())
        throw std::invalid_argument("system_qubits: must be non-empty");
    const int n = s.num_qubits;
    const int m = static_cast<int>(system_qubits.size());
    for (std::size_t i = 0; i < system_qubits.size(); ++i) {
        const int q = system_qubits[i];
        if (q < 0 || q >= n)
            throw std::invalid_argument("system_qubits: index " + std::to_string(q) +
                                        " out of range");
        for (std::size_t j = i + 1; j < system_qubits.size(); ++j)
            if (q == system_qubits[j])
                throw std::invalid_argument("system_qubits: indices must be distinct");
    }

    Distribution d;
    d.probabilities.assign(1ULL << m, 0.0);
    for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
        std::uint64_t label = 0;
        for (int k = 0; k < m; ++k)
            if (i & (1ULL << (n - 1 - system_qubits[k]))) label |= 1ULL << (m - 1 - k);
        d.probabilities[label] += std::norm(s.amps[i]);
    }
    d.labels.reserve(1ULL << m);
    for (std::uint64_t v = 0; v < (1ULL << m); ++v) {
        std::string lab(m, '0');
        for (int k = 0; k < m; ++k)
            if (v & (1ULL << (m - 1 - k))) lab[k] = '1';
        d.labels.push_back(std::move(lab));
    }
    return d;
}

}  // namespace qho
