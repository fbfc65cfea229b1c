#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qho/drive.hpp"
#include "qho/types.hpp"

namespace qho {

/// A square complex matrix validated to be Hermitian on construction.
class HermitianOperator {
  public:
    explicit HermitianOperator(Eigen::MatrixXcd m, double tol = 1e-12);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

  private:
    Eigen::MatrixXcd mat_;
};

/// Two-level truncation of the driven oscillator:
///   [[omega0/2, F(t)], [F(t), 3*omega0/2]]
/// i.e. omega0*I - (omega0/2)*Z + F(t)*X. Basis {|0>, |1>} = lowest two levels.
HermitianOperator single_qubit_hamiltonian(const OscillatorParams& osc,
                                           const DriveParams& p, double t);

/// Four-level ladder operators built from gate products on two qubits
/// (basis index = q1*2 + q2, first qubit most significant):
///   lowering = (I x X) * ACNOT(control=q2, target=q1)   [ACNOT applied first]
///   raising  = (I x X) * CNOT(control=q2, target=q1)
/// Both are cyclic shifts; raising == lowering^dagger.
struct LadderPair {
    Eigen::Matrix4cd lowering;
    Eigen::Matrix4cd raising;
};
LadderPair ladder_operators();

/// lowering + raising: unit entries at (0,1),(0,3),(1,0),(1,2),(2,1),(2,3),(3,0),(3,2).
Eigen::Matrix4cd two_qubit_drive_matrix();

/// Four-level truncation: (3/2)*omega0*I + t*F(t)*M with M = two_qubit_drive_matrix().
/// The drive term carries an explicit factor of t in addition to F(t); this is kept
/// exactly as published (see README).
HermitianOperator two_qubit_hamiltonian(const OscillatorParams& osc,
                                        const DriveParams& p, double t);

/// Time-indexed Hamiltonian sources for the propagators.
using HamiltonianFn = std::function<HermitianOperator(double)>;
HamiltonianFn single_qubit_hamiltonian_fn(OscillatorParams osc, DriveParams p);
HamiltonianFn two_qubit_hamiltonian_fn(OscillatorParams osc, DriveParams p);

}  // namespace qho
