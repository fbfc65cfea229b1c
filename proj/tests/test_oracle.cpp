#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qho/oracle.hpp"
#include "testutil.hpp"

using namespace qho;
using doctest::Approx;

TEST_CASE("exact propagator on a constant diagonal source is pure phase") {
    Eigen::MatrixXcd hm(2, 2);
    hm << 1.0, 0.0, 0.0, 2.0;
    HamiltonianFn h = [hm](double) { return HermitianOperator(hm); };

    StateVector plus = init_state(1, 0);
    plus.amps = {cplx(std::numbers::sqrt2 / 2, 0), cplx(std::numbers::sqrt2 / 2, 0)};

    double t = 0.7;
    PropagationResult r = exact_propagate(h, t, 16, plus);
    CHECK(r.final_norm == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.final_state.amps[0] -
                   std::polar(std::numbers::sqrt2 / 2, -1.0 * t)) < 1e-12);
    CHECK(std::abs(r.final_state.amps[1] -
                   std::polar(std::numbers::sqrt2 / 2, -2.0 * t)) < 1e-12);
}

TEST_CASE("exact propagator validation") {
    HamiltonianFn h = single_qubit_hamiltonian_fn(OscillatorParams{1.0}, DriveParams{});
    StateVector s1 = init_state(1, 0);
    CHECK_THROWS_AS(exact_propagate(h, -1.0, 16, s1), std::invalid_argument);
    CHECK_THROWS_AS(exact_propagate(h, 1.0, 0, s1), std::invalid_argument);
    CHECK_THROWS_AS(exact_propagate(h, 1.0, 16, init_state(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(exact_propagate(HamiltonianFn{}, 1.0, 16, s1), std::invalid_argument);
}

TEST_CASE("excited-state probability at the reference point") {
    // omega0 = 1, omega = 1, t = 1; value frozen from an independent
    // adaptive-ODE integration: P(|1>) = 0.511793546825402.
    OscillatorParams osc{1.0};
    DriveParams p;
    PropagationResult r = exact_propagate(single_qubit_hamiltonian_fn(osc, p), 1.0, 4096,
                                          init_state(1, 0));
    double p1 = std::norm(r.final_state.amps[1]);
    CHECK(p1 == Approx(0.511793546825402).epsilon(1e-7));

    SUBCASE("step refinement has converged") {
        PropagationResult half = exact_propagate(single_qubit_hamiltonian_fn(osc, p), 1.0,
                                                 2048, init_state(1, 0));
        CHECK(state_distance(half.final_state, r.final_state) < 1e-9);
    }
}

TEST_CASE("one end-sampled step reproduces the single-shot circuit") {
    OscillatorParams osc{1.0};
    DriveParams p;
    double t = 1.3;
    PropagationResult tr =
        trotterized_propagate(osc, p, t, 1, init_state(1, 0), DriveSampling::step_end);
    StateVector direct = run(build_single_qubit_circuit(osc, p, t));
    CHECK(test::max_abs_diff(tr.final_state, direct) == 0.0);
    CHECK(tr.method == PropagationMethod::trotter);
}

TEST_CASE("midpoint stepping converges toward the exact propagator") {
    OscillatorParams osc{1.0};
    DriveParams p;
    p.drive_freq = 2.0;
    double t = 1.0;
    PropagationResult exact =
        exact_propagate(single_qubit_hamiltonian_fn(osc, p), t, 4096, init_state(1, 0));

    double prev = -1.0;
    for (int n : {8, 16, 32, 64}) {
        PropagationResult tr = trotterized_propagate(osc, p, t, n, init_state(1, 0));
        double err = state_distance(tr.final_state, exact.final_state);
        if (prev >= 0.0) CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("first-order four-level operator keeps the published entry pattern") {
    // Drive phase chosen so that F(t) = 1 exactly; then the expansion
    // parameter is x = t itself.
    auto op_at = [](double x) {
        DriveParams p{std::numbers::sqrt2, 1.0, -x, 1.0};
        return first_order_two_qubit_operator(p, x);
    };

    SUBCASE("x = 0 is the identity") {
        FirstOrderOperator op = op_at(0.0);
        CHECK(test::max_abs_diff(op.matrix, Eigen::MatrixXcd::Identity(4, 4)) == 0.0);
        CHECK(op.unitarity_deviation == 0.0);
    }

    for (double x : {0.1, 0.5}) {
        CAPTURE(x);
        FirstOrderOperator op = op_at(x);
        const cplx mi(0.0, -x);
        for (int i = 0; i < 4; ++i) CHECK(op.matrix(i, i) == cplx(1.0, 0.0));
        CHECK(op.matrix(0, 1) == mi);
        CHECK(op.matrix(0, 3) == mi);
        CHECK(op.matrix(1, 0) == mi);
        CHECK(op.matrix(1, 2) == -mi);  // the one sign that differs, kept as published
        CHECK(op.matrix(2, 1) == mi);
        CHECK(op.matrix(2, 3) == mi);
        CHECK(op.matrix(3, 0) == mi);
        CHECK(op.matrix(3, 2) == mi);
        CHECK(op.matrix(0, 2) == cplx(0.0, 0.0));
        CHECK(op.matrix(1, 3) == cplx(0.0, 0.0));
    }

    SUBCASE("unitarity deviation is reported, nonzero, and frozen") {
        CHECK(op_at(0.1).unitarity_deviation == Approx(0.287054001888147).epsilon(1e-12));
        CHECK(op_at(0.5).unitarity_deviation == Approx(1.870828693386971).epsilon(1e-12));
    }
}

TEST_CASE("first-order propagation records the non-unit norm") {
    double x = 0.5;
    DriveParams p{std::numbers::sqrt2, 1.0, -x, 1.0};
    PropagationResult r = first_order_propagate(p, x, init_state(2, 0));
    CHECK(r.method == PropagationMethod::first_order_published);
    CHECK(std::abs(r.final_state.amps[0] - cplx(1.0, 0.0)) == 0.0);
    CHECK(std::abs(r.final_state.amps[1] - cplx(0.0, -x)) == 0.0);
    CHECK(std::abs(r.final_state.amps[2]) == 0.0);
    CHECK(std::abs(r.final_state.amps[3] - cplx(0.0, -x)) == 0.0);
    CHECK(r.final_norm == Approx(std::sqrt(1.0 + 2.0 * x * x)).epsilon(1e-14));
    CHECK(norm_sq(r.final_state) != Approx(1.0).epsilon(1e-3));

    CHECK_THROWS_AS(first_order_propagate(p, x, init_state(1, 0)), std::invalid_argument);
}

TEST_CASE("state_distance") {
    StateVector a = init_state(1, 0), b = init_state(1, 1);
    CHECK(state_distance(a, a) == 0.0);
    CHECK(state_distance(a, b) == 1.0);

    StateVector c = a;
    c.amps[0] *= std::polar(1.0, 1.234);  // global phase
    CHECK(state_distance(a, c) < 1e-15);

    CHECK_THROWS_AS(state_distance(a, init_state(2, 0)), std::invalid_argument);
}

TEST_CASE("dist_tv") {
    Distribution p{{"0", "1"}, {0.3, 0.7}};
    Distribution q{{"0", "1"}, {0.5, 0.5}};
    CHECK(dist_tv(p, q) == Approx(0.2).epsilon(1e-15));
    CHECK(dist_tv(p, p) == 0.0);
    Distribution r{{"a", "b"}, {0.3, 0.7}};
    CHECK_THROWS_AS(dist_tv(p, r), std::invalid_argument);
}

TEST_CASE("reduced density matrix") {
    SUBCASE("product state reduces to a pure projector") {
        SplitMix64 rng(31);
        StateVector sys = test::random_state(rng, 1);
        StateVector full = init_state(2, 0);
        // full = sys (qubit 0) x |0> (qubit 1)
        full.amps[0] = sys.amps[0];
        full.amps[2] = sys.amps[1];
        full.amps[1] = full.amps[3] = 0.0;
        Eigen::MatrixXcd rho = reduced_density_matrix(full, {0});
        Eigen::Vector2cd v(sys.amps[0], sys.amps[1]);
        CHECK(test::max_abs_diff(rho, Eigen::MatrixXcd(v * v.adjoint())) < 1e-14);
        CHECK(reduced_state_distance(full, {0}, sys) < 1e-12);
    }
    SUBCASE("maximally entangled pair reduces to I/2") {
        StateVector s = init_state(2, 0);
        apply_gate(s, Gate::h(0));
        apply_gate(s, Gate::cnot(0, 1));
        Eigen::MatrixXcd rho = reduced_density_matrix(s, {1});
        CHECK(test::max_abs_diff(rho, Eigen::MatrixXcd(0.5 * Eigen::Matrix2cd::Identity())) <
              1e-14);
        // every pure target is at distance 1 - sqrt(1/2)
        StateVector target = init_state(1, 0);
        CHECK(reduced_state_distance(s, {1}, target) ==
              Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
    }
    SUBCASE("trace is one") {
        SplitMix64 rng(77);
        StateVector s = test::random_state(rng, 4);
        for (auto& keep : {std::vector<int>{0, 2}, std::vector<int>{3}}) {
            Eigen::MatrixXcd rho = reduced_density_matrix(s, keep);
            CHECK(rho.trace().real() == Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(rho.trace().imag()) < 1e-14);
            CHECK(test::max_abs_diff(rho, Eigen::MatrixXcd(rho.adjoint())) < 1e-14);
        }
    }
    SUBCASE("validation") {
        StateVector s = init_state(2, 0);
        CHECK_THROWS_AS(reduced_density_matrix(s, {}), std::invalid_argument);
        CHECK_THROWS_AS(reduced_density_matrix(s, {0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(reduced_density_matrix(s, {5}), std::invalid_argument);
        CHECK_THROWS_AS(reduced_state_distance(s, {0}, init_state(2, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("two-qubit exact propagation stays normalized and matches refinement") {
    OscillatorParams osc{1.0};
    for (double w : {1.0, 5.0}) {
        DriveParams p;
        p.drive_freq = w;
        HamiltonianFn h = two_qubit_hamiltonian_fn(osc, p);
        PropagationResult a = exact_propagate(h, 5.0, 2048, init_state(2, 0));
        PropagationResult b = exact_propagate(h, 5.0, 4096, init_state(2, 0));
        CHECK(a.final_norm == Approx(1.0).epsilon(1e-12));
        CHECK(state_distance(a.final_state, b.final_state) < 1e-6);
    }
}
