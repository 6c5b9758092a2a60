#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "c4ccz/c4.hpp"
#include "c4ccz/corrections.hpp"
#include "c4ccz/gadgets.hpp"

namespace c4ccz {

// Canonical correction tables for the coupled-CCZ gadget.
// The gadget consumes two triples and realizes CCZ(x,u1,u2) CCZ(x,u1,u4):
// slotA teleports CS(x,u2) CS(x,u4); slotB, inside CNOT(u1->u2), CNOT(u1->u4)
// conjugation, teleports the dagger pair; a CZ(x,u1) closes the algebra.
void append_coupled_ccz(Circuit* c, const MagicTriple& slotA, const MagicTriple& slotB,
                        int x, int u1, int u2, int u4, int cbit_base);

// Wiring of the composite circuit: paper lines 1..8 as
//   1,2   bare qubits
//   3,4   top block logical pair
//   5,6   middle block logical pair
//   7,8   bottom block logical pair
// The composite applies CCZ(1,4,5) CCZ(1,3,6) CCZ(2,4,7) CCZ(2,3,8).
struct CompositeSpec {
    int qubit_cap = 24;
    // Gadget order is fixed: consumption proceeds unit by unit.
    // Serialized form for provenance.
    std::string describe() const;
};

struct CompositeLayout {
    std::array<int, 2> bare;       // lines 1,2
    C4Block top, mid, bot;         // XZ blocks holding lines (3,4),(5,6),(7,8)
    std::vector<int> output_order; // the 8 output qubit ids, paper order
};

struct CompositeResult {
    Circuit circuit;
    CompositeLayout layout;
    std::vector<int> detection_cbits;
    int fault_count = 0;
};

// Builds the full composite circuit: bare |+> pair, three encoded blocks,
// eight inline round-1 preparations consumed by four coupled-CCZ gadgets,
// a stabilizer round on every block, and decode to the eight output lines.
CompositeResult build_composite(const CompositeSpec& spec = {});

// The same consumption stage, but fed by ideal magic states with an injected
// Pauli on each triple (fast path for pattern-level analysis). Faults in the
// round-1 preparations are summarized by `slot_errors[s]` applied to slot s's
// triple output. Returns the final state and detection verdict.
struct ConsumptionRun {
    bool detected = false;
    StateVector state{24};
    std::vector<int> output_order;
};
ConsumptionRun run_composite_with_slot_errors(
    const std::array<PauliString, 8>& slot_errors, bool slot_errors_are_local,
    const CompositeSpec& spec = {});

// Teleports the composite resource state onto eight data lines (Fig. 8) and
// returns the circuit; the resource is given by its eight qubit ids in paper
// order, data ids likewise. Outcome cbits start at cbit_base.
void append_composite_teleport(Circuit* c, const std::array<int, 8>& resource,
                               const std::array<int, 8>& data, int cbit_base);

// The two-independent-CCZ variant: lines 6 and 7 removed, teleportation on the
// remaining six lines (paper lines 1,2,3,4,5,8).
void append_two_ccz_teleport(Circuit* c, const std::array<int, 6>& resource,
                             const std::array<int, 6>& data, int cbit_base);

}  // namespace c4ccz
