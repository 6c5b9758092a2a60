#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "c4ccz/circuit.hpp"
#include "c4ccz/state.hpp"

namespace c4ccz {

// Per-cbit measurement record.
struct RecordedOutcome {
    int outcome = 0;
    double probability = 1.0;
    bool forced = false;
};

using MeasurementRecord = std::map<int, RecordedOutcome>;

// How teleport-kind measurements are resolved during a run.
struct TeleportPolicy {
    enum Kind { ForceZeros, Sample, ForceVector } kind = ForceZeros;
    std::map<int, int> forced;  // cbit -> bit, for ForceVector
    static TeleportPolicy force_zeros() { return {ForceZeros, {}}; }
    static TeleportPolicy sample() { return {Sample, {}}; }
    static TeleportPolicy force_vector(std::map<int, int> bits) {
        return {ForceVector, std::move(bits)};
    }
};

struct RunOptions {
    // Ordinals into circuit.fault_locations(); Z is injected right after each.
    std::set<int> faults;
    TeleportPolicy teleport = TeleportPolicy::force_zeros();
    int qubit_cap = 24;
    uint64_t seed = 0;           // used only when teleport sampling is requested
    bool keep_state = true;      // retain the final state in the result
    double detection_tol = 1e-9; // detection outcomes must be deterministic
};

struct RunResult {
    StateVector state{24};
    MeasurementRecord record;
    bool detected = false;              // any detection outcome != ideal
    std::vector<int> flipped_cbits;     // detection cbits that deviated
};

// Executes the circuit on a fresh state. Detection measurements are read out
// as the deterministic outcome the state dictates and compared to the stored
// ideal; teleport measurements follow the policy.
RunResult run_circuit(const Circuit& c, const RunOptions& opts);

}  // namespace c4ccz
