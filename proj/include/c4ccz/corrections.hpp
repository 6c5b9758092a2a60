#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "c4ccz/circuit.hpp"

namespace c4ccz {

// One conditional Clifford correction, as drawn in the figures: a gate from
// {X, Z, S, Sdg, CZ} with a binary expression over teleport outcome bits.
struct ConditionalGate {
    Gate gate;
    std::vector<int> qubits;
    std::optional<ClassicalExpr> condition;  // nullopt = unconditional
};

struct CorrectionTable {
    std::vector<int> outcome_cbits;       // teleport cbits, in measurement order
    std::vector<ConditionalGate> entries;
};

// A gadget before corrections: magic preparation + couplings + teleport
// measurements. Data-in qubits are the gadget's inputs (left uninitialized by
// the skeleton); data-out are the lines carrying the result (often the same).
struct GadgetSkeleton {
    Circuit circuit;
    std::vector<int> data_in;
    std::vector<int> data_out;
    std::vector<int> outcome_cbits;
};

using TargetApplier = std::function<void(StateVector*, const std::vector<int>&)>;

// Derives the per-outcome Clifford corrections making every branch equal the
// target unitary, by extracting the branch residual (X pattern + diagonal
// phase polynomial) against a maximally entangled input. Throws if a branch
// residual is not of Clifford X/S/Z/CZ form (a wiring bug) or if the final
// verification misses the fidelity bound.
CorrectionTable derive_corrections(const GadgetSkeleton& skel, const TargetApplier& target,
                                   int qubit_cap = 24, double tol = 1e-9);

void append_corrections(Circuit* c, const CorrectionTable& table);

// Shifts every cbit referenced by the table (outcomes and conditions).
CorrectionTable remap_table_cbits(const CorrectionTable& table,
                                  const std::map<int, int>& cbit_map);
CorrectionTable remap_table_qubits(const CorrectionTable& table,
                                   const std::map<int, int>& qubit_map);

}  // namespace c4ccz
