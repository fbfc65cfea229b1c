#include "qho/kernels.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qho {

namespace {

// Parallelize only when there are enough amplitude groups to amortize the fork.
constexpr std::uint64_t kParallelGroupThreshold = 1ULL << 12;

// Insert zero bits into `group` at the positions of the ascending masks,
// yielding the base index of the amplitude group.
inline std::uint64_t expand_index(std::uint64_t group, const std::uint64_t* masks_asc,
                                  int k) {
    std::uint64_t idx = group;
    for (int j = 0; j < k; ++j) {
        const std::uint64_t m = masks_asc[j];
        idx = ((idx & ~(m - 1)) << 1) | (idx & (m - 1));
    }
    return idx;
}

}  // namespace

void apply_gate(StateVector& s, const Gate& g, Exec exec) {
    validate_gate(g, s.num_qubits);
    const int n = s.num_qubits;
    const int k = gate_arity(g.kind);
    const int dim = 1 << k;

    // Row-major copy of the gate unitary.
    const Eigen::MatrixXcd m = gate_matrix(g);
    std::array<cplx, 64> mat;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) mat[r * dim + c] = m(r, c);

    // Bit mask per gate qubit, in gate order (first listed = block-index MSB).
    std::array<std::uint64_t, 3> masks{};
    for (int j = 0; j < k; ++j) masks[j] = 1ULL << (n - 1 - g.qubits[j]);
    std::array<std::uint64_t, 3> masks_asc = masks;
    std::sort(masks_asc.begin(), masks_asc.begin() + k);

    const std::uint64_t groups = 1ULL << (n - k);
    bool par = false;
#ifdef _OPENMP
    par = exec == Exec::parallel ||
          (exec == Exec::automatic && groups >= kParallelGroupThreshold &&
           omp_get_max_threads() > 1);
#else
    (void)exec;
#endif

    cplx* amps = s.amps.data();
#pragma omp parallel for schedule(static) if (par)
    for (long long gi = 0; gi < static_cast<long long>(groups); ++gi) {
        const std::uint64_t base =
            expand_index(static_cast<std::uint64_t>(gi), masks_asc.data(), k);
        std::array<std::uint64_t, 8> idx;
        for (int sub = 0; sub < dim; ++sub) {
            std::uint64_t t = base;
            for (int j = 0; j < k; ++j)
                if (sub & (1 << (k - 1 - j))) t |= masks[j];
            idx[sub] = t;
        }
        std::array<cplx, 8> in;
        for (int sub = 0; sub < dim; ++sub) in[sub] = amps[idx[sub]];
        for (int r = 0; r < dim; ++r) {
            cplx acc{0.0, 0.0};
            for (int c = 0; c < dim; ++c) acc += mat[r * dim + c] * in[c];
            amps[idx[r]] = acc;
        }
    }
}

namespace reference {

Eigen::MatrixXcd embedded_unitary(const Gate& g, int num_qubits) {
    validate_gate(g, num_qubits);
    const int k = gate_arity(g.kind);
    const Eigen::MatrixXcd m = gate_matrix(g);
    const std::uint64_t dim = 1ULL << num_qubits;

    std::array<std::uint64_t, 3> masks{};
    std::uint64_t gate_bits = 0;
    for (int j = 0; j < k; ++j) {
        masks[j] = 1ULL << (num_qubits - 1 - g.qubits[j]);
        gate_bits |= masks[j];
    }

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
        int sub_r = 0;
        for (int j = 0; j < k; ++j)
            if (r & masks[j]) sub_r |= 1 << (k - 1 - j);
        const std::uint64_t rest = r & ~gate_bits;
        for (int sub_c = 0; sub_c < (1 << k); ++sub_c) {
            std::uint64_t c = rest;
            for (int j = 0; j < k; ++j)
                if (sub_c & (1 << (k - 1 - j))) c |= masks[j];
            u(r, c) = m(sub_r, sub_c);
        }
    }
    return u;
}

void apply_gate_dense(StateVector& s, const Gate& g) {
    const Eigen::MatrixXcd u = embedded_unitary(g, s.num_qubits);
    Eigen::Map<Eigen::VectorXcd> v(s.amps.data(), static_cast<Eigen::Index>(s.amps.size()));
    const Eigen::VectorXcd out = u * v;
    v = out;
}

}  // namespace reference

}  // namespace qho
