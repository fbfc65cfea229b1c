#pragma once

// Shared helpers for the test binaries: seeded random gates/circuits/states
// and small matrix utilities.

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "qho/circuit.hpp"
#include "qho/gates.hpp"
#include "qho/kernels.hpp"
#include "qho/sampling.hpp"
#include "qho/statevector.hpp"

namespace qho::test {

inline double random_angle(SplitMix64& rng) {
    return (2.0 * rng.next_double() - 1.0) * std::numbers::pi;
}

inline Gate random_gate(SplitMix64& rng, int n) {
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
    for (int i = 0; i < gate_param_count(k); ++i) ps.push_back(random_angle(rng));
    return Gate{k, qs, ps};
}

inline Circuit random_circuit(SplitMix64& rng, int n, int len) {
    Circuit c;
    c.num_qubits = n;
    for (int i = 0; i < len; ++i) c.gates.push_back(random_gate(rng, n));
    for (int q = 0; q < n; ++q) c.system_qubits.push_back(q);
    return c;
}

inline StateVector random_state(SplitMix64& rng, int n) {
    StateVector s = init_state(n, 0);
    for (auto& a : s.amps)
        a = cplx(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
    double inv = 1.0 / std::sqrt(norm_sq(s));
    for (auto& a : s.amps) a *= inv;
    return s;
}

/// Product of the embedded gate unitaries, i.e. the full circuit unitary.
inline Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
    const auto dim = static_cast<Eigen::Index>(1) << c.num_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Gate& g : c.gates) u = reference::embedded_unitary(g, c.num_qubits) * u;
    return u;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

inline double unitarity_error(const Eigen::MatrixXcd& u) {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return max_abs_diff(u * u.adjoint(), id);
}

}  // namespace qho::test
