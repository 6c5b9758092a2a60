// Exploratory harness for the coupled-CCZ gadget wiring: builds candidate
// consumption patterns for two magic triples and reports the branch residual
// against the two-CCZ oracle, including any non-Clifford (CS/CCZ-type) phase
// content. Development tool; results are frozen into src/composite.cpp.

#include <cmath>
#include <cstdio>
#include <vector>

#include "c4ccz/executor.hpp"
#include "c4ccz/gadgets.hpp"
#include "c4ccz/oracles.hpp"

using namespace c4ccz;

namespace {

// Runs a circuit on Choi-entangled data lines with all teleport outcomes
// forced to zero, then prints the diagonal residual phase polynomial of the
// output against the target applier (assumes no X-part).
void report_residual(const char* name, const Circuit& gadget,
                     const std::vector<int>& data, const TargetApplier& target) {
    int n = static_cast<int>(data.size());
    int max_id = 0;
    for (int q : gadget.qubit_universe()) max_id = std::max(max_id, q);
    std::vector<int> refs(n);
    for (int i = 0; i < n; ++i) refs[i] = max_id + 1 + i;

    Circuit harness;
    for (int i = 0; i < n; ++i) {
        harness.init(refs[i], InitState::Plus);
        harness.init(data[i], InitState::Zero);
        harness.unitary(Gate::CNOT, {refs[i], data[i]});
    }
    harness.compose(gadget, {}, {});

    RunOptions opts;
    RunResult rr = run_circuit(harness, opts);

    StateVector tau(24);
    for (int i = 0; i < n; ++i) {
        tau.add_qubit(refs[i]);
        tau.add_qubit(data[i]);
        tau.apply_gate(Gate::H, {refs[i]});
        tau.apply_gate(Gate::CNOT, {refs[i], data[i]});
    }
    target(&tau, data);

    std::vector<int> order = data;
    for (int r : refs) order.push_back(r);
    tau.align_to(order);
    rr.state.align_to(order);

    double fid = StateVector::fidelity(rr.state, tau);
    std::printf("%-28s fidelity(all-zero branch) = %.9f\n", name, fid);
    if (fid >= 1.0 - 1e-9) return;

    const auto& a = rr.state.amplitudes();
    const auto& b = tau.amplitudes();
    size_t N = a.size();
    uint32_t dmask = (uint32_t(1) << n) - 1;
    std::vector<double> f(size_t(1) << n, 1e9);
    bool diagonal = true;
    for (size_t i = 0; i < N; ++i) {
        if (std::abs(b[i]) < 1e-8 || std::abs(a[i]) < 1e-8) {
            if (std::abs(b[i]) > 1e-8 || std::abs(a[i]) > 1e-8) diagonal = false;
            continue;
        }
        double ang = std::arg(b[i] / a[i]) / (M_PI / 2);
        uint32_t w = uint32_t(i) & dmask;
        if (f[w] > 1e8) f[w] = ang;
    }
    if (!diagonal) {
        std::printf("  residual is not diagonal on data lines\n");
        return;
    }
    double f0 = f[0];
    std::printf("  residual phase/[pi/2] by data bits:\n   ");
    for (uint32_t w = 0; w <= dmask; ++w) {
        double v = f[w] - f0;
        while (v < -1.99) v += 4;
        while (v > 2.01) v -= 4;
        std::printf(" %u:%+.2f", w, v);
        if ((w & 7) == 7 && w != dmask) std::printf("\n   ");
    }
    std::printf("\n");
}

// Candidate 0: slotA plain pair on (u2,u4); slotB dagger pair on the
// CNOT-shifted lines (u1->u2, u3->u4). Target CCZ(x,u1,u2) CCZ(x,u3,u4).
// Candidate 1: shared-two-leg variant, target CCZ(x,u1,u2) CCZ(x,u1,u4).
Circuit candidate_two_slot(int which) {
    Circuit c;
    MagicTriple A{20, 21, 22}, B{23, 24, 25};
    append_magic_oracle_prep(&c, A);
    append_magic_oracle_prep(&c, B);
    // data: control x=0; targets u1=1,u2=2,u3=3,u4=4 (external inputs).
    switch (which) {
        case 0:
            append_cs_pair_teleport(&c, A, 0, 2, 4, 50);
            c.unitary(Gate::CNOT, {1, 2});
            c.unitary(Gate::CNOT, {3, 4});
            append_cs_pair_teleport_dagger(&c, B, 0, 2, 4, 60);
            c.unitary(Gate::CNOT, {1, 2});
            c.unitary(Gate::CNOT, {3, 4});
            break;
        case 1:
            append_cs_pair_teleport(&c, A, 0, 2, 4, 50);
            c.unitary(Gate::CNOT, {1, 2});
            c.unitary(Gate::CNOT, {1, 4});
            append_cs_pair_teleport_dagger(&c, B, 0, 2, 4, 60);
            c.unitary(Gate::CNOT, {1, 2});
            c.unitary(Gate::CNOT, {1, 4});
            c.unitary(Gate::CZ, {0, 1});  // leftover CZ(x,u1) from the algebra
            break;
        default: break;
    }
    return c;
}

void run_two_slot_candidates() {
    {
        Circuit c = candidate_two_slot(0);
        report_residual("2-slot (u1,u3)-parities", c, {0, 1, 2, 3, 4},
                        [](StateVector* s, const std::vector<int>& q) {
                            oracle_coupled_ccz(s, q[0], q[1], q[2], q[3], q[4]);
                        });
    }
    {
        Circuit c = candidate_two_slot(1);
        report_residual("2-slot shared-two-legs", c, {0, 1, 2, 3, 4},
                        [](StateVector* s, const std::vector<int>& q) {
                            oracle_ccz(s, q[0], q[1], q[2]);
                            oracle_ccz(s, q[0], q[1], q[4]);
                        });
    }
}

}  // namespace

int main() {
    run_two_slot_candidates();
    return 0;
}
