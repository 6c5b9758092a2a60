#pragma once

#include <array>
#include <vector>

#include "c4ccz/c4.hpp"
#include "c4ccz/circuit.hpp"
#include "c4ccz/corrections.hpp"

namespace c4ccz {

// A verified three-qubit magic register: common control and two targets.
struct MagicTriple {
    int control;
    int t1;
    int t2;
};

// T^dag target, CNOT(control -> target), T target: controlled-(T X T^dag).
// Contributes exactly two fault locations.
void append_controlled_k(Circuit* c, int control, int target);

// Magic-state preparation by direct gates (carries T gates; used by harnesses
// and oracle tests, not by the fault-counted constructions).
void append_magic_oracle_prep(Circuit* c, const MagicTriple& m);

struct Round1Layout {
    int bare = 0;                     // magic common control
    C4Block block{{1, 2, 3, 4}, EncodingKind::XY};
    int ancilla = 5;                  // stabilizer ancilla, reused
    int cbit_base = 0;                // six detection cbits from here
};

struct Round1Result {
    Circuit circuit;
    MagicTriple triple;
    std::vector<int> detection_cbits;
};

// Fig. 4: bare |+>, X/Y-encoded |++>, transversal controlled-K (8 T gates),
// stabilizer round, transversal Rx(pi/2), stabilizer round, decode.
Round1Result build_round1(const Round1Layout& layout);

// Appends the same construction to an existing circuit.
MagicTriple append_round1(Circuit* c, const Round1Layout& layout,
                          std::vector<int>* detection_cbits);

// Fig. 5 teleport skeleton: CZ-couple targets to y/z and Y-measure them,
// CNOT-couple x to the control and Z-measure it. Outcome cbits are
// cbit_base+0..2; measured magic qubits are discarded.
void append_cs_pair_teleport_skeleton(Circuit* c, const MagicTriple& m, int x, int y,
                                      int z, int cbit_base);

// The canonical correction table for the Fig. 5 gadget (derived once, cached).
const CorrectionTable& cs_pair_teleport_table();

// Skeleton plus remapped corrections: after this the net action on (x,y,z)
// is CS(x,y) CS(x,z) on every branch.
void append_cs_pair_teleport(Circuit* c, const MagicTriple& m, int x, int y, int z,
                             int cbit_base);

// Sdg-converted consumption: net action CS^dag(x,y) CS^dag(x,z).
void append_cs_pair_teleport_dagger(Circuit* c, const MagicTriple& m, int x, int y,
                                    int z, int cbit_base);

}  // namespace c4ccz
