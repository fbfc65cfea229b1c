#pragma once

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "qho/types.hpp"

namespace qho {

/// Gate vocabulary. ACNOT / ACU3 are anti-controlled: the payload fires when the
/// control is |0>. CH applies Hadamard when the control is |1>.
enum class GateKind { X, H, U1, U3, CNOT, ACNOT, CCNOT, CH, ACU3 };

/// qubits lists controls first, target last. params holds the angles:
/// U1 takes {lambda}; U3 and ACU3 take {theta, phi, lambda}.
struct Gate {
    GateKind kind{};
    std::vector<int> qubits;
    std::vector<double> params;

    static Gate x(int q);
    static Gate h(int q);
    static Gate u1(double lambda, int q);
    static Gate u3(double theta, double phi, double lambda, int q);
    static Gate cnot(int control, int target);
    static Gate acnot(int control, int target);
    static Gate ccnot(int control1, int control2, int target);
    static Gate ch(int control, int target);
    static Gate acu3(double theta, double phi, double lambda, int control, int target);
};

int gate_arity(GateKind kind);
int gate_param_count(GateKind kind);
std::string_view gate_name(GateKind kind);

/// Checks arity, parameter count, distinct qubits, and (when num_qubits >= 0)
/// index range. Throws std::invalid_argument.
void validate_gate(const Gate& g, int num_qubits = -1);

/// u1(lambda) = diag(1, e^{i lambda}).
Eigen::Matrix2cd u1_matrix(double lambda);

/// u3(theta, phi, lambda) = [[cos(t/2), -e^{i lambda} sin(t/2)],
///                           [e^{i phi} sin(t/2), e^{i(lambda+phi)} cos(t/2)]].
/// At (phi, lambda) = (-pi/2, pi/2) this is exp(-i (theta/2) X).
Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda);

/// The 2^k x 2^k unitary of a k-qubit gate. The first listed qubit is the most
/// significant bit of the block index (repo-wide ordering convention).
Eigen::MatrixXcd gate_matrix(const Gate& g);

}  // namespace qho
