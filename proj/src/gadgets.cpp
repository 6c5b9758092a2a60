#include "c4ccz/gadgets.hpp"

#include <mutex>

#include "c4ccz/oracles.hpp"

namespace c4ccz {

void append_controlled_k(Circuit* c, int control, int target) {
    c->unitary(Gate::Tdg, {target});
    c->unitary(Gate::CNOT, {control, target});
    c->unitary(Gate::T, {target});
}

void append_magic_oracle_prep(Circuit* c, const MagicTriple& m) {
    c->init(m.control, InitState::Plus);
    c->init(m.t1, InitState::Plus);
    c->init(m.t2, InitState::Plus);
    for (int t : {m.t1, m.t2}) {
        c->unitary(Gate::RxMinusHalf, {t});
        c->unitary(Gate::Tdg, {t});
        c->unitary(Gate::CNOT, {m.control, t});
        c->unitary(Gate::T, {t});
        c->unitary(Gate::RxPlusHalf, {t});
    }
}

MagicTriple append_round1(Circuit* c, const Round1Layout& l, std::vector<int>* cbits) {
    c->init(l.bare, InitState::Plus);
    c4_append_encode(c, l.block, C4Content::PlusPlus);
    for (int i = 0; i < 4; ++i) append_controlled_k(c, l.bare, l.block.phys[i]);
    int cb = l.cbit_base;
    c4_append_stabilizer_round(c, l.block, l.ancilla, cb + 0, cb + 1);
    C4Block xz = c4_append_basis_change(c, l.block);
    c4_append_stabilizer_round(c, xz, l.ancilla, cb + 2, cb + 3);
    c4_append_decode(c, xz, cb + 4, cb + 5);
    if (cbits) {
        for (int k = 0; k < 6; ++k) cbits->push_back(cb + k);
    }
    return MagicTriple{l.bare, c4_encoder_slot_logical1(xz), c4_encoder_slot_logical2(xz)};
}

Round1Result build_round1(const Round1Layout& layout) {
    Round1Result r;
    r.triple = append_round1(&r.circuit, layout, &r.detection_cbits);
    r.circuit.validate();
    return r;
}

void append_cs_pair_teleport_skeleton(Circuit* c, const MagicTriple& m, int x, int y,
                                      int z, int cbit_base) {
    c->unitary(Gate::CZ, {y, m.t1});
    c->measure(m.t1, Basis::Y, cbit_base + 0, MeasureKind::Teleport);
    c->discard(m.t1);
    c->unitary(Gate::CZ, {z, m.t2});
    c->measure(m.t2, Basis::Y, cbit_base + 1, MeasureKind::Teleport);
    c->discard(m.t2);
    c->unitary(Gate::CNOT, {x, m.control});
    c->measure(m.control, Basis::Z, cbit_base + 2, MeasureKind::Teleport);
    c->discard(m.control);
}

namespace {

CorrectionTable derive_cs_pair_table() {
    // Canonical labels: data (x,y,z) = (0,1,2); magic (100,101,102); cbits 0..2.
    MagicTriple m{100, 101, 102};
    GadgetSkeleton skel;
    append_magic_oracle_prep(&skel.circuit, m);
    append_cs_pair_teleport_skeleton(&skel.circuit, m, 0, 1, 2, 0);
    skel.data_in = {0, 1, 2};
    skel.data_out = {0, 1, 2};
    skel.outcome_cbits = {0, 1, 2};
    return derive_corrections(
        skel,
        [](StateVector* s, const std::vector<int>& q) { oracle_cs_pair(s, q[0], q[1], q[2]); });
}

CorrectionTable derive_cs_pair_dagger_table() {
    MagicTriple m{100, 101, 102};
    GadgetSkeleton skel;
    append_magic_oracle_prep(&skel.circuit, m);
    append_cs_pair_teleport_skeleton(&skel.circuit, m, 0, 1, 2, 0);
    skel.data_in = {0, 1, 2};
    skel.data_out = {0, 1, 2};
    skel.outcome_cbits = {0, 1, 2};
    return derive_corrections(skel, [](StateVector* s, const std::vector<int>& q) {
        oracle_cs(s, q[0], q[1], -1);
        oracle_cs(s, q[0], q[2], -1);
    });
}

}  // namespace

const CorrectionTable& cs_pair_teleport_table() {
    static CorrectionTable table = derive_cs_pair_table();
    return table;
}

static const CorrectionTable& cs_pair_teleport_dagger_table() {
    static CorrectionTable table = derive_cs_pair_dagger_table();
    return table;
}

namespace {

void append_with_table(Circuit* c, const CorrectionTable& canon, const MagicTriple& m,
                       int x, int y, int z, int cbit_base) {
    append_cs_pair_teleport_skeleton(c, m, x, y, z, cbit_base);
    CorrectionTable t = remap_table_qubits(canon, {{0, x}, {1, y}, {2, z}});
    t = remap_table_cbits(t, {{0, cbit_base}, {1, cbit_base + 1}, {2, cbit_base + 2}});
    append_corrections(c, t);
}

}  // namespace

void append_cs_pair_teleport(Circuit* c, const MagicTriple& m, int x, int y, int z,
                             int cbit_base) {
    append_with_table(c, cs_pair_teleport_table(), m, x, y, z, cbit_base);
}

void append_cs_pair_teleport_dagger(Circuit* c, const MagicTriple& m, int x, int y,
                                    int z, int cbit_base) {
    append_with_table(c, cs_pair_teleport_dagger_table(), m, x, y, z, cbit_base);
}

}  // namespace c4ccz
