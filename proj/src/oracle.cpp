#include "qho/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qho {

namespace {

Eigen::VectorXcd to_eigen(const StateVector& s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amps.data(),
                                              static_cast<Eigen::Index>(s.amps.size()));
}

StateVector from_eigen(const Eigen::VectorXcd& v, int num_qubits) {
    StateVector s;
    s.num_qubits = num_qubits;
    s.amps.assign(v.data(), v.data() + v.size());
    return s;
}

}  // namespace

PropagationResult exact_propagate(const HamiltonianFn& h, double t_final, int steps,
                                  const StateVector& initial) {
    if (!h) throw std::invalid_argument("h: empty Hamiltonian source");
    if (!std::isfinite(t_final) || t_final < 0.0)
        throw std::invalid_argument("t_final: must be finite and >= 0");
    if (steps < 1) throw std::invalid_argument("steps: must be >= 1");
    if (initial.amps.size() != (1ULL << initial.num_qubits))
        throw std::invalid_argument("initial: inconsistent dimensions");

    const double dt = t_final / steps;
    Eigen::VectorXcd psi = to_eigen(initial);
    for (int k = 0; k < steps; ++k) {
        const HermitianOperator hk = h((k + 0.5) * dt);
        if (hk.dim() != psi.size())
            throw std::invalid_argument("h: dimension does not match the state");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hk.matrix());
        if (es.info() != Eigen::Success)
            throw std::runtime_error("exact_propagate: eigendecomposition failed");
        const Eigen::VectorXcd phases =
            (cplx(0.0, -dt) * es.eigenvalues().cast<cplx>().array()).exp().matrix();
        psi = es.eigenvectors() * phases.asDiagonal() * (es.eigenvectors().adjoint() * psi);
    }

    PropagationResult r;
    r.final_state = from_eigen(psi, initial.num_qubits);
    r.steps = steps;
    r.method = PropagationMethod::exact;
    r.final_norm = psi.norm();
    return r;
}

PropagationResult trotterized_propagate(const OscillatorParams& osc, const DriveParams& p,
                                        double t_final, int n_steps,
                                        const StateVector& initial,
                                        DriveSampling sampling) {
    if (initial.num_qubits != 1)
        throw std::invalid_argument("initial: trotterized_propagate evolves one qubit");
    const Circuit c = build_single_qubit_trotter_circuit(osc, p, t_final, n_steps, sampling);
    PropagationResult r;
    r.final_state = run(c, initial);
    r.steps = n_steps;
    r.method = PropagationMethod::trotter;
    r.final_norm = std::sqrt(norm_sq(r.final_state));
    return r;
}

FirstOrderOperator first_order_two_qubit_operator(const DriveParams& p, double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("t: must be finite and >= 0");
    const cplx d(0.0, -t * drive_force(p, t));  // -i t F(t)
    FirstOrderOperator op;
    op.matrix = Eigen::Matrix4cd::Identity();
    op.matrix(0, 1) = d;
    op.matrix(0, 3) = d;
    op.matrix(1, 0) = d;
    op.matrix(1, 2) = -d;  // published sign anomaly, kept as printed
    op.matrix(2, 1) = d;
    op.matrix(2, 3) = d;
    op.matrix(3, 0) = d;
    op.matrix(3, 2) = d;
    op.unitarity_deviation =
        (op.matrix * op.matrix.adjoint() - Eigen::Matrix4cd::Identity()).norm();
    return op;
}

PropagationResult first_order_propagate(const DriveParams& p, double t,
                                        const StateVector& initial) {
    if (initial.num_qubits != 2)
        throw std::invalid_argument("initial: first_order_propagate evolves two qubits");
    const FirstOrderOperator op = first_order_two_qubit_operator(p, t);
    const Eigen::Vector4cd psi = op.matrix * Eigen::Vector4cd(to_eigen(initial));
    PropagationResult r;
    r.final_state = from_eigen(psi, 2);
    r.steps = 1;
    r.method = PropagationMethod::first_order_published;
    r.final_norm = psi.norm();
    return r;
}

double state_distance(const StateVector& a, const StateVector& b) {
    if (a.num_qubits != b.num_qubits || a.amps.size() != b.amps.size())
        throw std::invalid_argument("state_distance: dimension mismatch");
    cplx dot{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        dot += std::conj(a.amps[i]) * b.amps[i];
    return std::max(0.0, 1.0 - std::abs(dot));
}

double dist_tv(const Distribution& p, const Distribution& q) {
    if (p.labels != q.labels)
        throw std::invalid_argument("dist_tv: distributions have different labels");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probabilities.size(); ++i)
        acc += std::abs(p.probabilities[i] - q.probabilities[i]);
    return 0.5 * acc;
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector& s,
                                        const std::vector<int>& keep_qubits) {
    if (s.num_qubits < 1 || s.amps.size() != (1ULL << s.num_qubits))
        throw std::invalid_argument("state: inconsistent dimensions");
    if (keep_qubits.empty())
        throw std::invalid_argument("keep_qubits: must be non-empty");
    const int n = s.num_qubits;
    const int m = static_cast<int>(keep_qubits.size());
    std::uint64_t keep_bits = 0;
    for (std::size_t i = 0; i < keep_qubits.size(); ++i) {
        const int q = keep_qubits[i];
        if (q < 0 || q >= n)
            throw std::invalid_argument("keep_qubits: index out of range");
        for (std::size_t j = i + 1; j < keep_qubits.size(); ++j)
            if (q == keep_qubits[j])
                throw std::invalid_argument("keep_qubits: indices must be distinct");
        keep_bits |= 1ULL << (n - 1 - q);
    }

    // Enumerate the traced-out assignments directly.
    std::vector<std::uint64_t> rest_masks;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t mask = 1ULL << (n - 1 - q);
        if (!(keep_bits & mask)) rest_masks.push_back(mask);
    }
    auto place_keep = [&](std::uint64_t label) {
        std::uint64_t idx = 0;
        for (int k = 0; k < m; ++k)
            if (label & (1ULL << (m - 1 - k))) idx |= 1ULL << (n - 1 - keep_qubits[k]);
        return idx;
    };

    const std::uint64_t dim = 1ULL << m;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t r = 0; r < (1ULL << rest_masks.size()); ++r) {
        std::uint64_t base = 0;
        for (std::size_t j = 0; j < rest_masks.size(); ++j)
            if (r & (1ULL << j)) base |= rest_masks[j];
        for (std::uint64_t a = 0; a < dim; ++a) {
            const cplx va = s.amps[base | place_keep(a)];
            if (va == cplx{0.0, 0.0}) continue;
            for (std::uint64_t b = 0; b < dim; ++b)
                rho(a, b) += va * std::conj(s.amps[base | place_keep(b)]);
        }
    }
    return rho;
}

double reduced_state_distance(const StateVector& full,
                              const std::vector<int>& system_qubits,
                              const StateVector& target) {
    if (target.amps.size() != (1ULL << system_qubits.size()))
        throw std::invalid_argument("target: dimension does not match system_qubits");
    const Eigen::MatrixXcd rho = reduced_density_matrix(full, system_qubits);
    const Eigen::VectorXcd t = to_eigen(target);
    const double fid = std::max(0.0, (t.adjoint() * rho * t).value().real());
    return std::max(0.0, 1.0 - std::sqrt(std::min(1.0, fid)));
}

}  // namespace qho
