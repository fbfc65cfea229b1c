#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "qho/oracle.hpp"
#include "qho/simulator.hpp"
#include "testutil.hpp"

using namespace qho;
using doctest::Approx;

TEST_CASE("init_state") {
    StateVector s = init_state(3, 5);  // |101>
    CHECK(s.num_qubits == 3);
    REQUIRE(s.size() == 8);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(s.amps[i] == (i == 5 ? cplx(1, 0) : cplx(0, 0)));
    CHECK(norm_sq(s) == 1.0);

    CHECK_THROWS_AS(init_state(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(init_state(25, 0), std::invalid_argument);
    CHECK_THROWS_AS(init_state(2, 4), std::invalid_argument);
}

TEST_CASE("single-qubit run reproduces the closed form sin^2(t F(t))") {
    OscillatorParams osc{1.0};
    DriveParams p;
    for (double t : {0.0, 0.4, 1.0, 2.5}) {
        Circuit c = build_single_qubit_circuit(osc, p, t);
        StateVector s = run(c);
        double tf = t * drive_force(p, t);
        Distribution d = marginal_probabilities(s, {0});
        REQUIRE(d.labels == std::vector<std::string>{"0", "1"});
        CHECK(d.probabilities[1] == Approx(std::sin(tf) * std::sin(tf)).epsilon(1e-12));
        CHECK(d.probabilities[0] + d.probabilities[1] == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("run rejects a dimension mismatch") {
    Circuit c = build_two_qubit_circuit(0.1);
    CHECK_THROWS_AS(run(c, init_state(2, 0)), std::invalid_argument);
}

TEST_CASE("masked kernel agrees with the dense reference on random cases") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng.next() % 6);
        Gate g = test::random_gate(rng, n);
        StateVector a = test::random_state(rng, n);
        StateVector b = a;
        apply_gate(a, g, Exec::serial);
        reference::apply_gate_dense(b, g);
        CHECK(test::max_abs_diff(a, b) < 1e-12);
    }
}

TEST_CASE("serial and parallel execution agree bitwise") {
    SplitMix64 rng(13);
    const int n = 13;  // above the parallel-dispatch threshold
    Circuit c = test::random_circuit(rng, n, 24);
    StateVector start = test::random_state(rng, n);

    StateVector ser = start, par = start;
    for (const Gate& g : c.gates) apply_gate(ser, g, Exec::serial);
    for (const Gate& g : c.gates) apply_gate(par, g, Exec::parallel);
    CHECK(std::memcmp(ser.amps.data(), par.amps.data(), ser.amps.size() * sizeof(cplx)) == 0);

    StateVector aut = start;
    for (const Gate& g : c.gates) apply_gate(aut, g, Exec::automatic);
    CHECK(std::memcmp(ser.amps.data(), aut.amps.data(), ser.amps.size() * sizeof(cplx)) == 0);
}

TEST_CASE("marginal probabilities") {
    SUBCASE("full system returns |amp|^2 in label order") {
        SplitMix64 rng(3);
        StateVector s = test::random_state(rng, 2);
        Distribution d = marginal_probabilities(s, {0, 1});
        REQUIRE(d.labels == std::vector<std::string>{"00", "01", "10", "11"});
        for (int i = 0; i < 4; ++i)
            CHECK(d.probabilities[i] == Approx(std::norm(s.amps[i])).epsilon(1e-15));
    }

    SUBCASE("subset marginal matches the reduced density matrix diagonal") {
        SplitMix64 rng(21);
        StateVector s = test::random_state(rng, 4);
        for (const std::vector<int>& keep :
             {std::vector<int>{0}, std::vector<int>{2, 3}, std::vector<int>{3, 1}}) {
            Distribution d = marginal_probabilities(s, keep);
            Eigen::MatrixXcd rho = reduced_density_matrix(s, keep);
            REQUIRE(d.probabilities.size() == static_cast<std::size_t>(rho.rows()));
            for (Eigen::Index i = 0; i < rho.rows(); ++i)
                CHECK(d.probabilities[static_cast<std::size_t>(i)] ==
                      Approx(rho(i, i).real()).epsilon(1e-12));
        }
    }

    SUBCASE("system order controls the label bit order") {
        StateVector s = init_state(2, 1);  // |01>
        Distribution d01 = marginal_probabilities(s, {0, 1});
        CHECK(d01.probabilities == std::vector<double>{0.0, 1.0, 0.0, 0.0});
        Distribution d10 = marginal_probabilities(s, {1, 0});
        CHECK(d10.probabilities == std::vector<double>{0.0, 0.0, 1.0, 0.0});
    }

    SUBCASE("entangled state marginal") {
        // (|00> + |11>)/sqrt(2): either qubit alone is uniform.
        StateVector s = init_state(2, 0);
        apply_gate(s, Gate::h(0));
        apply_gate(s, Gate::cnot(0, 1));
        Distribution d = marginal_probabilities(s, {0});
        CHECK(d.probabilities[0] == Approx(0.5).epsilon(1e-12));
        CHECK(d.probabilities[1] == Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("invalid system throws") {
        StateVector s = init_state(2, 0);
        CHECK_THROWS_AS(marginal_probabilities(s, {}), std::invalid_argument);
        CHECK_THROWS_AS(marginal_probabilities(s, {2}), std::invalid_argument);
        CHECK_THROWS_AS(marginal_probabilities(s, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("five-qubit circuit leaves the idle qubit in |0>") {
    Circuit c = build_two_qubit_circuit(0.4);
    StateVector s = run(c);
    Distribution d = marginal_probabilities(s, {4});
    CHECK(d.probabilities[0] == Approx(1.0).epsilon(1e-12));

    Distribution sys = marginal_probabilities(s, c.system_qubits);
    double total = 0.0;
    for (double v : sys.probabilities) total += v;
    CHECK(total == Approx(1.0).epsilon(1e-12));
}
