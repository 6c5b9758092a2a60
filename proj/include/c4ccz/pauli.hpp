#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace c4ccz {

// Single-qubit Pauli operator.
enum class PauliOp : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(PauliOp p);
PauliOp pauli_from_char(char c);

// Signed multi-qubit Pauli operator. Phase is a power of i (0..3), so the
// operator is i^phase_pow * prod_q ops[q]. Qubits not present act as identity.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::map<int, PauliOp> ops, int phase_pow = 0);

    static PauliString single(int qubit, PauliOp op);
    static PauliString identity();

    // i^k with k in 0..3; +1, i, -1, -i.
    int phase_pow() const { return phase_pow_; }
    std::complex<double> phase() const;

    const std::map<int, PauliOp>& ops() const { return ops_; }
    PauliOp op_on(int qubit) const;
    int weight() const;
    bool is_identity() const;       // identity ops, any phase
    bool is_z_type() const;         // only I/Z content

    PauliString operator*(const PauliString& rhs) const;
    bool commutes_with(const PauliString& other) const;

    // Equality including phase.
    bool operator==(const PauliString& rhs) const;
    // Equal up to the i^k prefactor.
    bool equal_up_to_phase(const PauliString& rhs) const;

    // e.g. "+X1 Z3" ; identity prints "+I".
    std::string str() const;
    // Fixed-width pattern over the given qubits, e.g. "Z.ZZ...." (no phase).
    std::string pattern(const std::vector<int>& qubits) const;

  private:
    std::map<int, PauliOp> ops_;  // identity entries are never stored
    int phase_pow_ = 0;
};

}  // namespace c4ccz
