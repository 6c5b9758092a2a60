#pragma once

#include <array>
#include <complex>
#include <string>

#include "c4ccz/pauli.hpp"

namespace c4ccz {

using cplx = std::complex<double>;

// Primitive gate set. Only T/Tdg are non-Clifford and fault-labelable.
enum class Gate {
    H,
    S,
    Sdg,
    T,
    Tdg,
    X,
    Y,
    Z,
    CNOT,
    CZ,
    SWAP,
    RxPlusHalf,   // exp[i pi (I - X) / 4]
    RxMinusHalf,  // inverse of RxPlusHalf
};

int gate_arity(Gate g);
bool gate_is_clifford(Gate g);
bool gate_is_t_type(Gate g);
const std::string& gate_name(Gate g);
bool gate_from_name(const std::string& name, Gate* out);
Gate gate_inverse(Gate g);

// Dense matrix, row-major; 2x2 for arity 1, 4x4 for arity 2 with the first
// qubit as the high-order bit (basis order 00,01,10,11).
std::array<cplx, 4> gate_matrix1(Gate g);
std::array<cplx, 16> gate_matrix2(Gate g);

// Clifford conjugation g P g^dag for a single-qubit Pauli on one of the gate's
// qubits. Returns the image as a PauliString over the given qubit ids.
// For T/Tdg only Z/I survive conjugation; X/Y throw.
PauliString conjugate_pauli_1q(Gate g, int qubit, PauliOp p);
PauliString conjugate_pauli_2q(Gate g, int q0, int q1, PauliOp p0, PauliOp p1);

// Conjugate an arbitrary PauliString through a gate application.
PauliString conjugate_pauli(const PauliString& p, Gate g, const std::vector<int>& qubits);

}  // namespace c4ccz
