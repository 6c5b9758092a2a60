#include "c4ccz/c4.hpp"
#include "c4ccz/executor.hpp"
#include "c4ccz/oracles.hpp"
#include "doctest.h"

using namespace c4ccz;

namespace {

const C4Block kXY{{0, 1, 2, 3}, EncodingKind::XY};
const C4Block kXZ{{0, 1, 2, 3}, EncodingKind::XZ};

double real_expectation(const StateVector& s, const PauliString& p) {
    return s.expectation(p).real();
}

}  // namespace

TEST_CASE("logical operator tables match the paper's lists") {
    CHECK(c4_logical(kXY, LogicalKind::X1) ==
          PauliString({{0, PauliOp::X}, {1, PauliOp::X}}));
    CHECK(c4_logical(kXY, LogicalKind::X2) ==
          PauliString({{0, PauliOp::X}, {2, PauliOp::X}}));
    CHECK(c4_logical(kXY, LogicalKind::Y1) ==
          PauliString({{0, PauliOp::Y}, {2, PauliOp::Y}}));
    CHECK(c4_logical(kXY, LogicalKind::Y2) ==
          PauliString({{0, PauliOp::Y}, {1, PauliOp::Y}}));
    CHECK(c4_logical(kXZ, LogicalKind::Z1) ==
          PauliString({{0, PauliOp::Z}, {2, PauliOp::Z}}));
    CHECK(c4_logical(kXZ, LogicalKind::Z2) ==
          PauliString({{0, PauliOp::Z}, {1, PauliOp::Z}}));
    CHECK_THROWS(c4_logical(kXY, LogicalKind::Z1));
    CHECK_THROWS(c4_logical(kXZ, LogicalKind::Y1));
}

TEST_CASE("logical operators commute with stabilizers; algebra is valid") {
    for (const C4Block& b : {kXY, kXZ}) {
        std::vector<LogicalKind> kinds =
            b.enc == EncodingKind::XY
                ? std::vector<LogicalKind>{LogicalKind::X1, LogicalKind::X2,
                                           LogicalKind::Y1, LogicalKind::Y2}
                : std::vector<LogicalKind>{LogicalKind::X1, LogicalKind::X2,
                                           LogicalKind::Z1, LogicalKind::Z2};
        for (auto k : kinds) {
            CHECK(c4_logical(b, k).commutes_with(c4_g1(b)));
            CHECK(c4_logical(b, k).commutes_with(c4_g2(b)));
        }
    }
    // Anticommutation pattern of a valid two-qubit logical algebra (X/Z pairs).
    CHECK(!c4_logical(kXZ, LogicalKind::X1).commutes_with(c4_logical(kXZ, LogicalKind::Z1)));
    CHECK(c4_logical(kXZ, LogicalKind::X1).commutes_with(c4_logical(kXZ, LogicalKind::Z2)));
    CHECK(!c4_logical(kXZ, LogicalKind::X2).commutes_with(c4_logical(kXZ, LogicalKind::Z2)));
    CHECK(c4_logical(kXZ, LogicalKind::X2).commutes_with(c4_logical(kXZ, LogicalKind::Z1)));
    CHECK(!c4_logical(kXY, LogicalKind::X1).commutes_with(c4_logical(kXY, LogicalKind::Y1)));
    CHECK(c4_logical(kXY, LogicalKind::X1).commutes_with(c4_logical(kXY, LogicalKind::Y2)));
}

TEST_CASE("encoding |++> stabilizes g1, g2 and both logical X") {
    Circuit c;
    c4_append_encode(&c, kXZ, C4Content::PlusPlus);
    RunResult r = run_circuit(c, {});
    CHECK(real_expectation(r.state, c4_g1(kXZ)) == doctest::Approx(1.0));
    CHECK(real_expectation(r.state, c4_g2(kXZ)) == doctest::Approx(1.0));
    CHECK(real_expectation(r.state, c4_logical(kXZ, LogicalKind::X1)) == doctest::Approx(1.0));
    CHECK(real_expectation(r.state, c4_logical(kXZ, LogicalKind::X2)) == doctest::Approx(1.0));
}

TEST_CASE("decode(encode(|++>)) returns |++> on the output slots") {
    Circuit c;
    c4_append_encode(&c, kXZ, C4Content::PlusPlus);
    c4_append_decode(&c, kXZ, 0, 1);
    RunResult r = run_circuit(c, {});
    CHECK(!r.detected);
    StateVector expect(8);
    expect.add_qubit(c4_encoder_slot_logical2(kXZ));
    expect.add_qubit(c4_encoder_slot_logical1(kXZ));
    expect.apply_gate(Gate::H, {c4_encoder_slot_logical1(kXZ)});
    expect.apply_gate(Gate::H, {c4_encoder_slot_logical2(kXZ)});
    CHECK(StateVector::fidelity(r.state, expect) >= 1.0 - 1e-9);
}

TEST_CASE("encoding two Sdg|+> ancillas gives <Y1> = <Y2> = -1") {
    Circuit c;
    c4_append_encode(&c, kXY, C4Content::TwoSdgPlus);
    RunResult r = run_circuit(c, {});
    CHECK(real_expectation(r.state, c4_g1(kXY)) == doctest::Approx(1.0));
    CHECK(real_expectation(r.state, c4_g2(kXY)) == doctest::Approx(1.0));
    CHECK(real_expectation(r.state, c4_logical(kXY, LogicalKind::Y1)) == doctest::Approx(-1.0));
    CHECK(real_expectation(r.state, c4_logical(kXY, LogicalKind::Y2)) == doctest::Approx(-1.0));
}

TEST_CASE("stabilizer round is nondestructive and catches single Paulis") {
    SUBCASE("codeword passes untouched") {
        Circuit c;
        c4_append_encode(&c, kXZ, C4Content::PlusPlus);
        RunResult ref = run_circuit(c, {});
        c4_append_stabilizer_round(&c, kXZ, 9, 0, 1);
        RunResult r = run_circuit(c, {});
        CHECK(!r.detected);
        CHECK(StateVector::fidelity(r.state, ref.state) >= 1.0 - 1e-9);
    }
    SUBCASE("a single Z flips g1") {
        Circuit c;
        c4_append_encode(&c, kXZ, C4Content::PlusPlus);
        c.unitary(Gate::Z, {1});
        c4_append_stabilizer_round(&c, kXZ, 9, 0, 1);
        RunResult r = run_circuit(c, {});
        CHECK(r.detected);
        CHECK(r.flipped_cbits == std::vector<int>({0}));
    }
    SUBCASE("two Z errors pass undetected") {
        Circuit c;
        c4_append_encode(&c, kXZ, C4Content::PlusPlus);
        c.unitary(Gate::Z, {0});
        c.unitary(Gate::Z, {1});
        c4_append_stabilizer_round(&c, kXZ, 9, 0, 1);
        RunResult r = run_circuit(c, {});
        CHECK(!r.detected);
    }
    SUBCASE("every single-qubit Pauli flips at least one stabilizer") {
        for (int q = 0; q < 4; ++q) {
            for (Gate g : {Gate::X, Gate::Y, Gate::Z}) {
                Circuit c;
                c4_append_encode(&c, kXZ, C4Content::PlusPlus);
                c.unitary(g, {q});
                c4_append_stabilizer_round(&c, kXZ, 9, 0, 1);
                RunResult r = run_circuit(c, {});
                CHECK(r.detected);
            }
        }
    }
}

TEST_CASE("basis change: encoded |++> is invariant, Y1 maps to Z1") {
    Circuit c;
    c4_append_encode(&c, kXY, C4Content::PlusPlus);
    RunResult before = run_circuit(c, {});
    C4Block xz = c4_append_basis_change(&c, kXY);
    CHECK(xz.enc == EncodingKind::XZ);
    RunResult after = run_circuit(c, {});
    CHECK(StateVector::fidelity(before.state, after.state) >= 1.0 - 1e-9);
    // Operator mapping through the transversal Rx.
    PauliString y1 = c4_logical(kXY, LogicalKind::Y1);
    PauliString img = y1;
    for (int i = 0; i < 4; ++i)
        img = conjugate_pauli(img, Gate::RxPlusHalf, {kXY.phys[i]});
    CHECK(img.equal_up_to_phase(c4_logical(xz, LogicalKind::Z1)));
    CHECK(img.phase_pow() == 0);
    // Applying the change twice is a state-machine error.
    Circuit c2;
    c4_append_encode(&c2, kXY, C4Content::PlusPlus);
    C4Block once = c4_append_basis_change(&c2, kXY);
    CHECK_THROWS(c4_append_basis_change(&c2, once));
}

TEST_CASE("transversal CZ between two XZ blocks acts as crossed logical CZs") {
    // Prepare both blocks, map logical basis states via Xbar, and compare the
    // effect of transversal CZ to crossed CZs applied to a bare reference.
    const C4Block A{{0, 1, 2, 3}, EncodingKind::XZ};
    const C4Block B{{4, 5, 6, 7}, EncodingKind::XZ};
    for (int k = 0; k < 16; ++k) {
        // Logical pattern bits: (a1, a2, b1, b2).
        Circuit c;
        c4_append_encode(&c, A, C4Content::PlusPlus);
        c4_append_encode(&c, B, C4Content::PlusPlus);
        // Move to logical Z basis states by Hbar = decode-H-encode; instead we
        // compare phases on logical |+> inputs which span the full logical
        // space only when combined with Z checks; use Zbar insertions to form
        // the four signed X-basis states and verify CZ action by conjugation:
        // CZbar Xbar CZbar = Xbar Zbar(other). Do the operator check instead.
        (void)k;
        break;
    }
    // Operator-level verification: conjugate each logical X through the
    // transversal CZ and compare with the crossed-CZ images.
    auto transversal_cz_conj = [&](PauliString p) {
        for (int i = 0; i < 4; ++i)
            p = conjugate_pauli(p, Gate::CZ, {A.phys[i], B.phys[i]});
        return p;
    };
    // CZ(a1,b2): Xbar_a1 -> Xbar_a1 Zbar_b2 ; CZ(a2,b1): Xbar_a2 -> Xbar_a2 Zbar_b1.
    PauliString img1 = transversal_cz_conj(c4_logical(A, LogicalKind::X1));
    PauliString want1 = c4_logical(A, LogicalKind::X1) * c4_logical(B, LogicalKind::Z2);
    // Images agree modulo the stabilizer group of the pair of blocks.
    auto mod_stabilizer_equal = [&](PauliString u, PauliString v) {
        PauliString d = u * v;
        for (PauliString s :
             {PauliString::identity(), c4_g1(A), c4_g2(A), c4_g1(B), c4_g2(B),
              c4_g1(A) * c4_g2(A), c4_g1(B) * c4_g2(B), c4_g1(A) * c4_g1(B),
              c4_g2(A) * c4_g2(B), c4_g1(A) * c4_g2(B), c4_g2(A) * c4_g1(B),
              c4_g1(A) * c4_g2(A) * c4_g1(B), c4_g1(A) * c4_g2(A) * c4_g2(B),
              c4_g1(A) * c4_g1(B) * c4_g2(B), c4_g2(A) * c4_g1(B) * c4_g2(B),
              c4_g1(A) * c4_g2(A) * c4_g1(B) * c4_g2(B)}) {
            if ((d * s).is_identity() && (d * s).phase_pow() == 0) return true;
        }
        return false;
    };
    CHECK(mod_stabilizer_equal(img1, want1));
    PauliString img2 = transversal_cz_conj(c4_logical(A, LogicalKind::X2));
    PauliString want2 = c4_logical(A, LogicalKind::X2) * c4_logical(B, LogicalKind::Z1);
    CHECK(mod_stabilizer_equal(img2, want2));
    PauliString img3 = transversal_cz_conj(c4_logical(B, LogicalKind::X1));
    PauliString want3 = c4_logical(B, LogicalKind::X1) * c4_logical(A, LogicalKind::Z2);
    CHECK(mod_stabilizer_equal(img3, want3));
}

TEST_CASE("transversal CNOT is logical on XZ blocks and not on XY blocks") {
    const C4Block A{{0, 1, 2, 3}, EncodingKind::XZ};
    const C4Block B{{4, 5, 6, 7}, EncodingKind::XZ};
    // State-level check on XZ: encode |++> (control block) and |++> (target),
    // inject logical Zbar1 phase flips to form distinguishable states, apply
    // transversal CNOT, compare with logical CNOTs applied via an oracle pair.
    // Operator check: Xbar1(A) -> Xbar1(A) Xbar1(B)?? For CNOT between blocks
    // (control A), Xbar_i(A) must map to Xbar_i(A) Xbar_i(B) modulo stabilizers.
    auto transversal_cnot_conj = [&](PauliString p) {
        for (int i = 0; i < 4; ++i)
            p = conjugate_pauli(p, Gate::CNOT, {A.phys[i], B.phys[i]});
        return p;
    };
    auto in_group = [&](PauliString d) {
        for (PauliString s :
             {PauliString::identity(), c4_g1(A), c4_g2(A), c4_g1(B), c4_g2(B),
              c4_g1(A) * c4_g2(A), c4_g1(B) * c4_g2(B), c4_g1(A) * c4_g1(B),
              c4_g2(A) * c4_g2(B), c4_g1(A) * c4_g2(B), c4_g2(A) * c4_g1(B),
              c4_g1(A) * c4_g2(A) * c4_g1(B), c4_g1(A) * c4_g2(A) * c4_g2(B),
              c4_g1(A) * c4_g1(B) * c4_g2(B), c4_g2(A) * c4_g1(B) * c4_g2(B),
              c4_g1(A) * c4_g2(A) * c4_g1(B) * c4_g2(B)}) {
            if ((d * s).is_identity() && (d * s).phase_pow() == 0) return true;
        }
        return false;
    };
    PauliString imgx = transversal_cnot_conj(c4_logical(A, LogicalKind::X1));
    PauliString wantx = c4_logical(A, LogicalKind::X1) * c4_logical(B, LogicalKind::X1);
    CHECK(in_group(imgx * wantx));
    PauliString imgz = transversal_cnot_conj(c4_logical(B, LogicalKind::Z2));
    PauliString wantz = c4_logical(B, LogicalKind::Z2) * c4_logical(A, LogicalKind::Z2);
    CHECK(in_group(imgz * wantz));

    // XY encoding: transversal CNOT is not the encoded CNOT pair. Prepare
    // A with <Ybar1> = -1 and B with <Xbar1> = +1, <Xbar2> = -1; after the
    // encoded CNOT pair the correlator Ybar1(A) Xbar2(B) would be +1, but
    // transversal CNOT yields -1 (it spreads Ybar1 onto the crossed Xbar2).
    const C4Block AY{{0, 1, 2, 3}, EncodingKind::XY};
    const C4Block BY{{4, 5, 6, 7}, EncodingKind::XY};
    Circuit cy;
    c4_append_encode(&cy, AY, C4Content::TwoSdgPlus);
    c4_append_encode(&cy, BY, C4Content::PlusPlus);
    // Flip B's logical 2 to |-> with Zbar2 = Z1 Z2.
    cy.unitary(Gate::Z, {BY.phys[0]});
    cy.unitary(Gate::Z, {BY.phys[1]});
    for (int i = 0; i < 4; ++i) cy.unitary(Gate::CNOT, {AY.phys[i], BY.phys[i]});
    RunResult after = run_circuit(cy, {});
    PauliString corr = c4_logical(AY, LogicalKind::Y1) * c4_logical(BY, LogicalKind::X2);
    CHECK(after.state.expectation(corr).real() == doctest::Approx(-1.0));
}

TEST_CASE("bare M_y gadget distribution and ideal-state behavior") {
    SUBCASE("on Sdg|+>: outcome xor is 1 with certainty") {
        for (int mz = 0; mz <= 1; ++mz) {
            Circuit c;
            c.init(0, InitState::SdgPlus);
            c4_append_my_bare(&c, 0, 1, 0, 1);
            RunOptions opts;
            opts.teleport = TeleportPolicy::force_vector({{0, mz}, {1, 1 - mz}});
            RunResult r = run_circuit(c, opts);
            double p = r.record.at(0).probability * r.record.at(1).probability;
            CHECK(p == doctest::Approx(0.5).epsilon(1e-9));
        }
        // XOR = 0 branches have zero probability.
        Circuit c;
        c.init(0, InitState::SdgPlus);
        c4_append_my_bare(&c, 0, 1, 0, 1);
        RunOptions opts;
        opts.teleport = TeleportPolicy::force_vector({{0, 0}, {1, 0}});
        CHECK_THROWS(run_circuit(c, opts));
    }
    SUBCASE("on |0>: both xor values equally likely") {
        double p_xor1 = 0;
        for (auto [mz, mx] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}) {
            Circuit c;
            c.init(0, InitState::Zero);
            c4_append_my_bare(&c, 0, 1, 0, 1);
            RunOptions opts;
            opts.teleport = TeleportPolicy::force_vector({{0, mz}, {1, mx}});
            RunResult r = run_circuit(c, opts);
            p_xor1 += r.record.at(0).probability * r.record.at(1).probability;
        }
        CHECK(p_xor1 == doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("encoded M_y reconstructs logical outcomes and stabilizer parity") {
    const C4Block D{{0, 1, 2, 3}, EncodingKind::XZ};
    const C4Block A{{4, 5, 6, 7}, EncodingKind::XY};
    auto build = [&](bool inject) {
        Circuit c;
        c4_append_encode(&c, D, C4Content::PlusPlus);
        c4_append_encode(&c, A, C4Content::TwoSdgPlus);
        if (inject) c.unitary(Gate::Z, {2});  // one Z error in the data block
        c4_append_my_encoded(&c, D, A, {0, 1, 2, 3}, {4, 5, 6, 7});
        return c;
    };
    // Sample many shots; logical data is |++> so M_y outcomes are unbiased,
    // but the ancilla-side XXXX parity must track the injected error.
    for (bool inject : {false, true}) {
        Circuit c = build(inject);
        RunOptions opts;
        opts.teleport = TeleportPolicy::sample();
        int flips = 0;
        for (uint64_t seed = 0; seed < 40; ++seed) {
            opts.seed = seed;
            RunResult r = run_circuit(c, opts);
            std::array<int, 4> d, a;
            for (int i = 0; i < 4; ++i) {
                d[i] = r.record.at(i).outcome;
                a[i] = r.record.at(4 + i).outcome;
            }
            EncodedMyReadout ro = c4_read_encoded_my(d, a);
            CHECK(ro.stab_data_parity == 0);  // ZZZZ parity undisturbed by Z faults
            if (ro.stab_anc_parity != 0) ++flips;
        }
        if (inject) CHECK(flips == 40);
        else CHECK(flips == 0);
    }
}
