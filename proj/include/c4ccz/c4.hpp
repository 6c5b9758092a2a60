#pragma once

#include <array>

#include "c4ccz/circuit.hpp"
#include "c4ccz/pauli.hpp"

namespace c4ccz {

// Which logical-operator table is in force for a block.
enum class EncodingKind { XY, XZ };

// A [[4,2,2]] block: four physical qubit ids in code order q1..q4.
struct C4Block {
    std::array<int, 4> phys;
    EncodingKind enc = EncodingKind::XY;
};

enum class LogicalKind { X1, X2, Y1, Y2, Z1, Z2 };

PauliString c4_g1(const C4Block& b);  // X X X X
PauliString c4_g2(const C4Block& b);  // Z Z Z Z

// Logical operator per the active encoding's table. Y* requires XY, Z* XZ.
PauliString c4_logical(const C4Block& b, LogicalKind which);

// Logical content choices for the encoder.
enum class C4Content { PlusPlus, TwoSdgPlus };

// Physical slots of the two logical inputs inside the encoder.
int c4_encoder_slot_logical1(const C4Block& b);  // q3
int c4_encoder_slot_logical2(const C4Block& b);  // q2

// Appends init + encoder gates preparing the block's logical content.
void c4_append_encode(Circuit* c, const C4Block& b, C4Content content);

// Appends the inverse encoder, detection Z-measurements of the two ancilla
// slots (ideal 0) and their discards. Logical qubits land on the encoder
// input slots (logical 1 -> q3, logical 2 -> q2).
void c4_append_decode(Circuit* c, const C4Block& b, int cbit_anc1, int cbit_anc4);

// Appends an ancilla-mediated nondestructive measurement of g1 then g2 as
// detection measurements with ideal outcome 0. The ancilla id is initialized,
// measured and discarded twice.
void c4_append_stabilizer_round(Circuit* c, const C4Block& b, int ancilla,
                                int cbit_g1, int cbit_g2);

// Appends the transversal Rx(pi/2) basis change and returns the relabeled
// block. Requires XY; throws otherwise.
C4Block c4_append_basis_change(Circuit* c, const C4Block& b);

// Bare M_y gadget: consumes `data` and a fresh S^dag|+> ancilla. Outcome is
// m_z xor m_x, written as two teleport measurements; returns their cbit ids
// through the arguments. Both qubits are discarded.
void c4_append_my_bare(Circuit* c, int data, int ancilla, int cbit_mz, int cbit_mx);

// Encoded M_y (data block + ancilla block holding two S^dag|+> logicals):
// transversal CNOT(ancilla_i -> data_i), then single-qubit measurements of all
// data qubits in Z and ancilla qubits in X. Outcome bits are written to
// cbits_data[i] and cbits_anc[i]; all eight qubits are discarded.
void c4_append_my_encoded(Circuit* c, const C4Block& data, const C4Block& ancilla,
                          const std::array<int, 4>& cbits_data,
                          const std::array<int, 4>& cbits_anc);

// Reconstruction helpers for the encoded M_y record.
struct EncodedMyReadout {
    int my1, my2;          // logical Y-basis outcomes
    int stab_data_parity;  // data-side ZZZZ parity
    int stab_anc_parity;   // ancilla-side XXXX parity
};
EncodedMyReadout c4_read_encoded_my(const std::array<int, 4>& data_bits,
                                    const std::array<int, 4>& anc_bits);

}  // namespace c4ccz
