#include "c4ccz/c4.hpp"

#include <stdexcept>

namespace c4ccz {

PauliString c4_g1(const C4Block& b) {
    return PauliString({{b.phys[0], PauliOp::X},
                        {b.phys[1], PauliOp::X},
                        {b.phys[2], PauliOp::X},
                        {b.phys[3], PauliOp::X}});
}

PauliString c4_g2(const C4Block& b) {
    return PauliString({{b.phys[0], PauliOp::Z},
                        {b.phys[1], PauliOp::Z},
                        {b.phys[2], PauliOp::Z},
                        {b.phys[3], PauliOp::Z}});
}

PauliString c4_logical(const C4Block& b, LogicalKind which) {
    const auto& q = b.phys;
    switch (which) {
        case LogicalKind::X1: return PauliString({{q[0], PauliOp::X}, {q[1], PauliOp::X}});
        case LogicalKind::X2: return PauliString({{q[0], PauliOp::X}, {q[2], PauliOp::X}});
        case LogicalKind::Y1:
            if (b.enc != EncodingKind::XY)
                throw std::invalid_argument("logical Y is an X/Y-encoding operator");
            return PauliString({{q[0], PauliOp::Y}, {q[2], PauliOp::Y}});
        case LogicalKind::Y2:
            if (b.enc != EncodingKind::XY)
                throw std::invalid_argument("logical Y is an X/Y-encoding operator");
            return PauliString({{q[0], PauliOp::Y}, {q[1], PauliOp::Y}});
        case LogicalKind::Z1:
            if (b.enc != EncodingKind::XZ)
                throw std::invalid_argument("logical Z is an X/Z-encoding operator");
            return PauliString({{q[0], PauliOp::Z}, {q[2], PauliOp::Z}});
        case LogicalKind::Z2:
            if (b.enc != EncodingKind::XZ)
                throw std::invalid_argument("logical Z is an X/Z-encoding operator");
            return PauliString({{q[0], PauliOp::Z}, {q[1], PauliOp::Z}});
    }
    throw std::logic_error("unreachable");
}

int c4_encoder_slot_logical1(const C4Block& b) { return b.phys[2]; }
int c4_encoder_slot_logical2(const C4Block& b) { return b.phys[1]; }

namespace {

void append_encoder_gates(Circuit* c, const C4Block& b) {
    const auto& q = b.phys;
    c->unitary(Gate::H, {q[0]});
    c->unitary(Gate::CNOT, {q[0], q[1]});
    c->unitary(Gate::CNOT, {q[0], q[2]});
    c->unitary(Gate::CNOT, {q[0], q[3]});
    c->unitary(Gate::CNOT, {q[1], q[3]});
    c->unitary(Gate::CNOT, {q[2], q[3]});
}

}  // namespace

void c4_append_encode(Circuit* c, const C4Block& b, C4Content content) {
    const auto& q = b.phys;
    c->init(q[0], InitState::Zero);
    c->init(q[1], InitState::Plus);  // logical 2
    c->init(q[2], InitState::Plus);  // logical 1
    c->init(q[3], InitState::Zero);
    // The X/Y-table logical Y operators are crossed X/Z products
    // (Y1Y3 = -Xbar2 Zbar1), so the two-Sdg|+> block is the encoder image of
    // CZ |++>, which pins <Y1Y3> = <Y1Y2> = -1.
    if (content == C4Content::TwoSdgPlus) c->unitary(Gate::CZ, {q[1], q[2]});
    append_encoder_gates(c, b);
}

void c4_append_decode(Circuit* c, const C4Block& b, int cbit_anc1, int cbit_anc4) {
    const auto& q = b.phys;
    c->unitary(Gate::CNOT, {q[2], q[3]});
    c->unitary(Gate::CNOT, {q[1], q[3]});
    c->unitary(Gate::CNOT, {q[0], q[3]});
    c->unitary(Gate::CNOT, {q[0], q[2]});
    c->unitary(Gate::CNOT, {q[0], q[1]});
    c->unitary(Gate::H, {q[0]});
    c->measure(q[0], Basis::Z, cbit_anc1, MeasureKind::Detection, 0);
    c->measure(q[3], Basis::Z, cbit_anc4, MeasureKind::Detection, 0);
    c->discard(q[0]);
    c->discard(q[3]);
}

void c4_append_stabilizer_round(Circuit* c, const C4Block& b, int ancilla,
                                int cbit_g1, int cbit_g2) {
    const auto& q = b.phys;
    c->init(ancilla, InitState::Plus);
    for (int i = 0; i < 4; ++i) c->unitary(Gate::CNOT, {ancilla, q[i]});
    c->measure(ancilla, Basis::X, cbit_g1, MeasureKind::Detection, 0);
    c->discard(ancilla);
    c->init(ancilla, InitState::Plus);
    for (int i = 0; i < 4; ++i) c->unitary(Gate::CZ, {ancilla, q[i]});
    c->measure(ancilla, Basis::X, cbit_g2, MeasureKind::Detection, 0);
    c->discard(ancilla);
}

C4Block c4_append_basis_change(Circuit* c, const C4Block& b) {
    if (b.enc != EncodingKind::XY)
        throw std::invalid_argument("basis change applies to an X/Y-encoded block");
    for (int i = 0; i < 4; ++i) c->unitary(Gate::RxPlusHalf, {b.phys[i]});
    C4Block out = b;
    out.enc = EncodingKind::XZ;
    return out;
}

void c4_append_my_bare(Circuit* c, int data, int ancilla, int cbit_mz, int cbit_mx) {
    c->init(ancilla, InitState::SdgPlus);
    c->unitary(Gate::CNOT, {ancilla, data});
    c->measure(data, Basis::Z, cbit_mz, MeasureKind::Teleport);
    c->measure(ancilla, Basis::X, cbit_mx, MeasureKind::Teleport);
    c->discard(data);
    c->discard(ancilla);
}

void c4_append_my_encoded(Circuit* c, const C4Block& data, const C4Block& ancilla,
                          const std::array<int, 4>& cbits_data,
                          const std::array<int, 4>& cbits_anc) {
    for (int i = 0; i < 4; ++i)
        c->unitary(Gate::CNOT, {ancilla.phys[i], data.phys[i]});
    for (int i = 0; i < 4; ++i) {
        c->measure(data.phys[i], Basis::Z, cbits_data[i], MeasureKind::Teleport);
        c->discard(data.phys[i]);
    }
    for (int i = 0; i < 4; ++i) {
        c->measure(ancilla.phys[i], Basis::X, cbits_anc[i], MeasureKind::Teleport);
        c->discard(ancilla.phys[i]);
    }
}

EncodedMyReadout c4_read_encoded_my(const std::array<int, 4>& d,
                                    const std::array<int, 4>& a) {
    EncodedMyReadout r;
    r.my1 = (d[0] ^ d[2]) ^ (a[0] ^ a[1]);  // Zbar1 = Z1 Z3, Xbar1 = X1 X2
    r.my2 = (d[0] ^ d[1]) ^ (a[0] ^ a[2]);  // Zbar2 = Z1 Z2, Xbar2 = X1 X3
    r.stab_data_parity = d[0] ^ d[1] ^ d[2] ^ d[3];
    r.stab_anc_parity = a[0] ^ a[1] ^ a[2] ^ a[3];
    return r;
}

}  // namespace c4ccz
