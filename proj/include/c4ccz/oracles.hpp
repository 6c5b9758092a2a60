#pragma once

#include <array>
#include <vector>

#include "c4ccz/state.hpp"

namespace c4ccz {

// Reference unitaries applied directly to a statevector. These are the
// independent comparison path for every constructed gadget.

// Controlled-H as primitive gates: Rx^dag T^dag CNOT T Rx on the target.
void oracle_controlled_h(StateVector* s, int control, int target);

// K = T X T^dag applied via its exact sequence.
void oracle_k(StateVector* s, int qubit);

// Controlled-S / controlled-S^dag as a diagonal phase.
void oracle_cs(StateVector* s, int a, int b, int power = 1);

// CCZ as a diagonal phase.
void oracle_ccz(StateVector* s, int a, int b, int c);

// Toffoli targeting `target`.
void oracle_toffoli(StateVector* s, int c1, int c2, int target);

// The three-qubit magic state: (cH ⊗ cH, common control) |+++>.
// Qubits must not be live yet.
void oracle_magic_state(StateVector* s, int control, int t1, int t2);

// The coupled controlled-S pair CS(x,y) CS(x,z).
void oracle_cs_pair(StateVector* s, int x, int y, int z);

// Two CCZ gates sharing a control: CCZ(c,u1,u2) CCZ(c,u3,u4).
void oracle_coupled_ccz(StateVector* s, int c, int u1, int u2, int u3, int u4);

// The composite gate of Fig. 1 on lines[0..7] (paper lines 1..8):
// CCZ(1,4,5) CCZ(1,3,6) CCZ(2,4,7) CCZ(2,3,8).
void oracle_composite_ccz(StateVector* s, const std::array<int, 8>& lines);

// The two-CCZ variant left after removing lines 6 and 7:
// CCZ(1,4,5) CCZ(2,3,8) on the six remaining lines, keyed by paper line ids.
void oracle_two_ccz_variant(StateVector* s, const std::array<int, 6>& lines_123458);

}  // namespace c4ccz
