#include <cmath>
#include <random>

#include "c4ccz/state.hpp"
#include "doctest.h"

using namespace c4ccz;

namespace {

StateVector random_state(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    StateVector s(n + 2);
    for (int q = 0; q < n; ++q) s.add_qubit(q);
    auto& amps = s.amplitudes_mut();
    double norm = 0;
    for (auto& a : amps) {
        a = cplx(g(rng), g(rng));
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return s;
}

}  // namespace

TEST_CASE("H on |0> gives the equal superposition") {
    StateVector s(4);
    s.add_qubit(0);
    s.apply_gate(Gate::H, {0});
    CHECK(std::abs(s.amplitudes()[0] - cplx(1 / std::sqrt(2.0), 0)) < 1e-12);
    CHECK(std::abs(s.amplitudes()[1] - cplx(1 / std::sqrt(2.0), 0)) < 1e-12);
}

TEST_CASE("T imprints exp(i pi/4) on |1>") {
    StateVector s(4);
    s.add_qubit(0);
    s.apply_gate(Gate::H, {0});
    s.apply_gate(Gate::T, {0});
    cplx expect = std::polar(1.0 / std::sqrt(2.0), M_PI / 4);
    CHECK(std::abs(s.amplitudes()[1] - expect) < 1e-12);
    CHECK(std::abs(s.amplitudes()[0] - cplx(1 / std::sqrt(2.0), 0)) < 1e-12);
}

TEST_CASE("norm preserved and unitarity holds for the whole gate set") {
    std::vector<Gate> all = {Gate::H,    Gate::S,   Gate::Sdg,        Gate::T,
                             Gate::Tdg,  Gate::X,   Gate::Y,          Gate::Z,
                             Gate::CNOT, Gate::CZ,  Gate::SWAP,       Gate::RxPlusHalf,
                             Gate::RxMinusHalf};
    for (Gate g : all) {
        StateVector s = random_state(3, 1000 + static_cast<int>(g));
        StateVector before = s;
        std::vector<int> qs = gate_arity(g) == 1 ? std::vector<int>{1}
                                                 : std::vector<int>{0, 2};
        s.apply_gate(g, qs);
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-12);
        s.apply_gate(gate_inverse(g), qs);
        CHECK(StateVector::fidelity(s, before) >= 1.0 - 1e-12);
    }
}

TEST_CASE("measurement probabilities and projections") {
    SUBCASE("X on |+> forced to 0 keeps the state") {
        StateVector s(4);
        s.add_qubit(0);
        s.apply_gate(Gate::H, {0});
        StateVector before = s;
        auto r = s.measure(0, Basis::X, BranchPolicy::force(0), nullptr);
        CHECK(r.probability == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(StateVector::fidelity(s, before) >= 1.0 - 1e-12);
    }
    SUBCASE("Z on |+> forced to 1 has probability 1/2 and leaves |1>") {
        StateVector s(4);
        s.add_qubit(0);
        s.apply_gate(Gate::H, {0});
        auto r = s.measure(0, Basis::Z, BranchPolicy::force(1), nullptr);
        CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(s.amplitudes()[1] - cplx(1, 0)) < 1e-12);
    }
    SUBCASE("Y on Sdg|+> is deterministically the -1 eigenvector") {
        StateVector s(4);
        s.add_qubit(0);
        s.apply_gate(Gate::H, {0});
        s.apply_gate(Gate::Sdg, {0});
        auto r = s.measure(0, Basis::Y, BranchPolicy::force(1), nullptr);
        CHECK(r.probability == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("forced branch probabilities sum to one") {
        for (uint64_t seed : {5u, 6u, 7u}) {
            StateVector a = random_state(3, seed);
            StateVector b = a;
            auto r0 = a.measure(2, Basis::Y, BranchPolicy::force(0), nullptr);
            auto r1 = b.measure(2, Basis::Y, BranchPolicy::force(1), nullptr);
            CHECK(r0.probability + r1.probability == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("forcing a zero-probability branch throws") {
        StateVector s(4);
        s.add_qubit(0);  // |0>
        CHECK_THROWS(s.measure(0, Basis::Z, BranchPolicy::force(1), nullptr));
    }
}

TEST_CASE("discard semantics") {
    SUBCASE("product-state ancilla drops out") {
        StateVector s(4);
        s.add_qubit(0);
        s.add_qubit(1);
        s.apply_gate(Gate::H, {1});
        s.discard_qubit(0);
        CHECK(s.live_count() == 1);
        CHECK(std::abs(s.amplitudes()[0] - cplx(1 / std::sqrt(2.0), 0)) < 1e-12);
    }
    SUBCASE("discarding half a Bell pair throws") {
        StateVector s(4);
        s.add_qubit(0);
        s.add_qubit(1);
        s.apply_gate(Gate::H, {0});
        s.apply_gate(Gate::CNOT, {0, 1});
        CHECK_THROWS(s.discard_qubit(0));
    }
    SUBCASE("discard after a forced measurement works for either outcome") {
        StateVector s(4);
        s.add_qubit(0);
        s.add_qubit(1);
        s.apply_gate(Gate::H, {0});
        s.apply_gate(Gate::CNOT, {0, 1});
        s.measure(0, Basis::Z, BranchPolicy::force(1), nullptr);
        s.discard_qubit(0);
        CHECK(s.live_count() == 1);
        CHECK(std::abs(s.amplitudes()[1] - cplx(1, 0)) < 1e-12);
    }
}

TEST_CASE("fidelity basics") {
    StateVector zero(4), one(4), plus(4);
    zero.add_qubit(0);
    one.add_qubit(0);
    one.apply_gate(Gate::X, {0});
    plus.add_qubit(0);
    plus.apply_gate(Gate::H, {0});
    CHECK(StateVector::fidelity(zero, zero) == doctest::Approx(1.0));
    CHECK(StateVector::fidelity(zero, one) == doctest::Approx(0.0));
    CHECK(StateVector::fidelity(plus, zero) == doctest::Approx(0.5));
    StateVector other(4);
    other.add_qubit(3);
    CHECK_THROWS(StateVector::fidelity(zero, other));
}

TEST_CASE("fidelity ignores amplitude ordering via alignment") {
    StateVector a(6), b(6);
    a.add_qubit(0);
    a.add_qubit(1);
    b.add_qubit(1);
    b.add_qubit(0);
    a.apply_gate(Gate::H, {0});
    a.apply_gate(Gate::CNOT, {0, 1});
    b.apply_gate(Gate::H, {0});
    b.apply_gate(Gate::CNOT, {0, 1});
    CHECK(StateVector::fidelity(a, b) >= 1.0 - 1e-12);
}

TEST_CASE("Rx conjugation check on states: Rx Y Rx^dag acts as Z") {
    StateVector s = random_state(1, 42);
    StateVector lhs = s, rhs = s;
    lhs.apply_gate(Gate::RxMinusHalf, {0});
    lhs.apply_pauli(PauliString::single(0, PauliOp::Y));
    lhs.apply_gate(Gate::RxPlusHalf, {0});
    rhs.apply_pauli(PauliString::single(0, PauliOp::Z));
    CHECK(StateVector::fidelity(lhs, rhs) >= 1.0 - 1e-12);
}

TEST_CASE("qubit cap is enforced") {
    StateVector s(2);
    s.add_qubit(0);
    s.add_qubit(1);
    CHECK_THROWS(s.add_qubit(2));
}
