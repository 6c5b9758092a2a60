#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "c4ccz/gates.hpp"
#include "c4ccz/pauli.hpp"

namespace c4ccz {

// Measurement basis.
enum class Basis { X, Y, Z };

Basis basis_from_char(char c);
char basis_char(Basis b);

// How to resolve a measurement with an intrinsically random outcome.
struct BranchPolicy {
    enum Kind { Sample, Force } kind = Sample;
    int forced_bit = 0;
    static BranchPolicy sample() { return {Sample, 0}; }
    static BranchPolicy force(int bit) { return {Force, bit}; }
};

struct MeasureResult {
    int outcome = 0;
    double probability = 1.0;  // branch probability at measurement time
    bool forced = false;
};

// Dense complex statevector over a dynamic set of live qubits.
// Qubit ids are small nonnegative integers chosen by the caller; bit k of an
// amplitude index corresponds to live_qubits()[k].
class StateVector {
  public:
    explicit StateVector(int qubit_cap = 24);

    const std::vector<int>& live_qubits() const { return live_; }
    int live_count() const { return static_cast<int>(live_.size()); }
    bool is_live(int qubit) const;
    int qubit_cap() const { return cap_; }

    // Adds a qubit in |0>.
    void add_qubit(int qubit);
    // Removes a qubit that holds a computational-basis factor. Throws if the
    // off-branch weight exceeds tol (entangled or unmeasured qubit).
    void discard_qubit(int qubit, double tol = 1e-12);

    void apply_gate(Gate g, const std::vector<int>& qubits);
    void apply_pauli(const PauliString& p);
    // Multiplies amplitudes whose listed qubits are all 1 by `phase`.
    void apply_controlled_phase(const std::vector<int>& qubits, cplx phase);

    MeasureResult measure(int qubit, Basis basis, const BranchPolicy& policy,
                          std::mt19937_64* rng);

    double norm_sq() const;
    // |<a|b>|^2 with qubit sets canonically aligned; throws on mismatch.
    static double fidelity(const StateVector& a, const StateVector& b);
    // <a|b> after canonical alignment.
    static std::complex<double> overlap(const StateVector& a, const StateVector& b);

    // <psi| P |psi> for a Pauli observable.
    std::complex<double> expectation(const PauliString& p) const;

    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes_mut() { return amps_; }

    // Reorders the internal axes so live_qubits() == order (same set).
    void align_to(const std::vector<int>& order);

    void check_norm(double tol = 1e-12) const;

  private:
    int bit_index_of(int qubit) const;  // throws if not live
    void apply_matrix1(const std::array<cplx, 4>& m, int bit);
    void apply_matrix2(const std::array<cplx, 16>& m, int bit_hi, int bit_lo);

    int cap_;
    std::vector<int> live_;
    std::vector<cplx> amps_;
};

}  // namespace c4ccz
