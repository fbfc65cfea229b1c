#include "qho/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qho {

namespace {

Gate make(GateKind k, std::vector<int> qubits, std::vector<double> params = {}) {
    Gate g{k, std::move(qubits), std::move(params)};
    validate_gate(g);
    return g;
}

}  // namespace

Gate Gate::x(int q) { return make(GateKind::X, {q}); }
Gate Gate::h(int q) { return make(GateKind::H, {q}); }
Gate Gate::u1(double lambda, int q) { return make(GateKind::U1, {q}, {lambda}); }
Gate Gate::u3(double theta, double phi, double lambda, int q) {
    return make(GateKind::U3, {q}, {theta, phi, lambda});
}
Gate Gate::cnot(int control, int target) { return make(GateKind::CNOT, {control, target}); }
Gate Gate::acnot(int control, int target) { return make(GateKind::ACNOT, {control, target}); }
Gate Gate::ccnot(int control1, int control2, int target) {
    return make(GateKind::CCNOT, {control1, control2, target});
}
Gate Gate::ch(int control, int target) { return make(GateKind::CH, {control, target}); }
Gate Gate::acu3(double theta, double phi, double lambda, int control, int target) {
    return make(GateKind::ACU3, {control, target}, {theta, phi, lambda});
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::U1:
        case GateKind::U3:
            return 1;
        case GateKind::CNOT:
        case GateKind::ACNOT:
        case GateKind::CH:
        case GateKind::ACU3:
            return 2;
        case GateKind::CCNOT:
            return 3;
    }
    throw std::invalid_argument("gate_arity: unknown gate kind");
}

int gate_param_count(GateKind kind) {
    switch (kind) {
        case GateKind::U1:
            return 1;
        case GateKind::U3:
        case GateKind::ACU3:
            return 3;
        default:
            return 0;
    }
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::U1: return "u1";
        case GateKind::U3: return "u3";
        case GateKind::CNOT: return "cnot";
        case GateKind::ACNOT: return "acnot";
        case GateKind::CCNOT: return "ccnot";
        case GateKind::CH: return "ch";
        case GateKind::ACU3: return "acu3";
    }
    throw std::invalid_argument("gate_name: unknown gate kind");
}

void validate_gate(const Gate& g, int num_qubits) {
    const int arity = gate_arity(g.kind);
    const std::string name(gate_name(g.kind));
    if (static_cast<int>(g.qubits.size()) != arity)
        throw std::invalid_argument(name + ": expects " + std::to_string(arity) +
                                    " qubit(s), got " + std::to_string(g.qubits.size()));
    if (static_cast<int>(g.params.size()) != gate_param_count(g.kind))
        throw std::invalid_argument(name + ": expects " +
                                    std::to_string(gate_param_count(g.kind)) +
                                    " parameter(s), got " + std::to_string(g.params.size()));
    for (double v : g.params)
        if (!std::isfinite(v)) throw std::invalid_argument(name + ": parameters must be finite");
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        if (g.qubits[i] < 0)
            throw std::invalid_argument(name + ": qubit index must be >= 0");
        if (num_qubits >= 0 && g.qubits[i] >= num_qubits)
            throw std::invalid_argument(name + ": qubit " + std::to_string(g.qubits[i]) +
                                        " out of range for " + std::to_string(num_qubits) +
                                        " qubits");
        for (std::size_t j = i + 1; j < g.qubits.size(); ++j)
            if (g.qubits[i] == g.qubits[j])
                throw std::invalid_argument(name + ": qubits must be distinct");
    }
}

Eigen::Matrix2cd u1_matrix(double lambda) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    m(1, 1) = std::polar(1.0, lambda);
    return m;
}

Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Eigen::Matrix2cd m;
    m(0, 0) = c;
    m(0, 1) = -std::polar(s, lambda);
    m(1, 0) = std::polar(s, phi);
    m(1, 1) = std::polar(c, lambda + phi);
    return m;
}

namespace {

Eigen::Matrix2cd x_matrix() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd h_matrix() {
    Eigen::Matrix2cd m;
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}

// Controlled payload on two qubits (control = most significant bit); the
// payload sits in the control-0 block when anti == true.
Eigen::Matrix4cd controlled(const Eigen::Matrix2cd& payload, bool anti) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    const int off = anti ? 0 : 2;
    m.block<2, 2>(off, off) = payload;
    return m;
}

}  // namespace

Eigen::MatrixXcd gate_matrix(const Gate& g) {
    validate_gate(g);
    switch (g.kind) {
        case GateKind::X:
            return x_matrix();
        case GateKind::H:
            return h_matrix();
        case GateKind::U1:
            return u1_matrix(g.params[0]);
        case GateKind::U3:
            return u3_matrix(g.params[0], g.params[1], g.params[2]);
        case GateKind::CNOT:
            return controlled(x_matrix(), false);
        case GateKind::ACNOT:
            return controlled(x_matrix(), true);
        case GateKind::CH:
            return controlled(h_matrix(), false);
        case GateKind::ACU3:
            return controlled(u3_matrix(g.params[0], g.params[1], g.params[2]), true);
        case GateKind::CCNOT: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
            m(6, 6) = 0;
            m(7, 7) = 0;
            m(6, 7) = 1;
            m(7, 6) = 1;
            return m;
        }
    }
    throw std::invalid_argument("gate_matrix: unknown gate kind");
}

}  // namespace qho
