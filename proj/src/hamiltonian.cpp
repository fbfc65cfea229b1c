#include "qho/hamiltonian.hpp"

#include <stdexcept>
#include <utility>

namespace qho {

HermitianOperator::HermitianOperator(Eigen::MatrixXcd m, double tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
        throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
    const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (!(dev <= tol))
        throw std::invalid_argument("HermitianOperator: matrix is not Hermitian");
}

HermitianOperator single_qubit_hamiltonian(const OscillatorParams& osc,
                                           const DriveParams& p, double t) {
    validate(osc);
    const double f = drive_force(p, t);
    Eigen::Matrix2cd h;
    h << 0.5 * osc.omega0, f, f, 1.5 * osc.omega0;
    return HermitianOperator(h);
}

namespace {

Eigen::Matrix4cd cyclic_lowering() {
    // (I x X) after ACNOT(control = second qubit, target = first) works out to
    // the cyclic shift a|n> = |n-1 mod 4>; the tests rebuild it from the two
    // embedded gate factors.
    Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
    a(0, 1) = 1;
    a(1, 2) = 1;
    a(2, 3) = 1;
    a(3, 0) = 1;
    return a;
}

}  // namespace

LadderPair ladder_operators() {
    LadderPair lp;
    lp.lowering = cyclic_lowering();
    lp.raising = lp.lowering.adjoint();
    return lp;
}

Eigen::Matrix4cd two_qubit_drive_matrix() {
    const LadderPair lp = ladder_operators();
    return lp.lowering + lp.raising;
}

HermitianOperator two_qubit_hamiltonian(const OscillatorParams& osc,
                                        const DriveParams& p, double t) {
    validate(osc);
    const double f = drive_force(p, t);
    Eigen::Matrix4cd h = 1.5 * osc.omega0 * Eigen::Matrix4cd::Identity();
    h += (t * f) * two_qubit_drive_matrix();
    return HermitianOperator(h);
}

HamiltonianFn single_qubit_hamiltonian_fn(OscillatorParams osc, DriveParams p) {
    validate(osc);
    validate(p);
    return [osc, p](double t) { return single_qubit_hamiltonian(osc, p, t); };
}

HamiltonianFn two_qubit_hamiltonian_fn(OscillatorParams osc, DriveParams p) {
    validate(osc);
    validate(p);
    return [osc, p](double t) { return two_qubit_hamiltonian(osc, p, t); };
}

}  // namespace qho
