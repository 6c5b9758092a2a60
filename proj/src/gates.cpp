#include "c4ccz/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace c4ccz {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const cplx kI(0.0, 1.0);
}  // namespace

int gate_arity(Gate g) {
    switch (g) {
        case Gate::CNOT:
        case Gate::CZ:
        case Gate::SWAP: return 2;
        default: return 1;
    }
}

bool gate_is_clifford(Gate g) { return !gate_is_t_type(g); }

bool gate_is_t_type(Gate g) { return g == Gate::T || g == Gate::Tdg; }

const std::string& gate_name(Gate g) {
    static const std::string names[] = {"H",    "S",  "Sdg", "T",     "Tdg",
                                        "X",    "Y",  "Z",   "CNOT",  "CZ",
                                        "SWAP", "Rx", "Rxdg"};
    return names[static_cast<int>(g)];
}

bool gate_from_name(const std::string& name, Gate* out) {
    static const std::unordered_map<std::string, Gate> table = {
        {"H", Gate::H},       {"S", Gate::S},     {"Sdg", Gate::Sdg},
        {"T", Gate::T},       {"Tdg", Gate::Tdg}, {"X", Gate::X},
        {"Y", Gate::Y},       {"Z", Gate::Z},     {"CNOT", Gate::CNOT},
        {"CZ", Gate::CZ},     {"SWAP", Gate::SWAP},
        {"Rx", Gate::RxPlusHalf}, {"Rxdg", Gate::RxMinusHalf}};
    auto it = table.find(name);
    if (it == table.end()) return false;
    *out = it->second;
    return true;
}

Gate gate_inverse(Gate g) {
    switch (g) {
        case Gate::S: return Gate::Sdg;
        case Gate::Sdg: return Gate::S;
        case Gate::T: return Gate::Tdg;
        case Gate::Tdg: return Gate::T;
        case Gate::RxPlusHalf: return Gate::RxMinusHalf;
        case Gate::RxMinusHalf: return Gate::RxPlusHalf;
        default: return g;  // self-inverse
    }
}

std::array<cplx, 4> gate_matrix1(Gate g) {
    const cplx h = kInvSqrt2;
    switch (g) {
        case Gate::H: return {h, h, h, -h};
        case Gate::S: return {1, 0, 0, kI};
        case Gate::Sdg: return {1, 0, 0, -kI};
        // T = exp[i pi (I - Z)/8] = diag(1, e^{i pi/4})
        case Gate::T: return {1, 0, 0, std::polar(1.0, M_PI / 4)};
        case Gate::Tdg: return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
        case Gate::X: return {0, 1, 1, 0};
        case Gate::Y: return {0, -kI, kI, 0};
        case Gate::Z: return {1, 0, 0, -1};
        // exp[i pi (I - X)/4] = (1/2) [[1+i, 1-i], [1-i, 1+i]]
        case Gate::RxPlusHalf:
            return {cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)};
        case Gate::RxMinusHalf:
            return {cplx(0.5, -0.5), cplx(0.5, 0.5), cplx(0.5, 0.5), cplx(0.5, -0.5)};
        default: throw std::invalid_argument("gate_matrix1: not a 1q gate");
    }
}

std::array<cplx, 16> gate_matrix2(Gate g) {
    switch (g) {
        case Gate::CNOT:
            return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
        case Gate::CZ:
            return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
        case Gate::SWAP:
            return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
        default: throw std::invalid_argument("gate_matrix2: not a 2q gate");
    }
}

namespace {

// Conjugation images for single-qubit Clifford gates: maps P -> (image, sign).
// sign is a power of i (0 or 2 for Hermitian images).
struct Image {
    PauliOp op;
    int phase;  // power of i
};

Image conj1(Gate g, PauliOp p) {
    if (p == PauliOp::I) return {PauliOp::I, 0};
    switch (g) {
        case Gate::H:
            switch (p) {
                case PauliOp::X: return {PauliOp::Z, 0};
                case PauliOp::Y: return {PauliOp::Y, 2};
                case PauliOp::Z: return {PauliOp::X, 0};
                default: break;
            }
            break;
        case Gate::S:
            switch (p) {
                case PauliOp::X: return {PauliOp::Y, 0};
                case PauliOp::Y: return {PauliOp::X, 2};
                case PauliOp::Z: return {PauliOp::Z, 0};
                default: break;
            }
            break;
        case Gate::Sdg:
            switch (p) {
                case PauliOp::X: return {PauliOp::Y, 2};
                case PauliOp::Y: return {PauliOp::X, 0};
                case PauliOp::Z: return {PauliOp::Z, 0};
                default: break;
            }
            break;
        case Gate::X:
            switch (p) {
                case PauliOp::X: return {PauliOp::X, 0};
                case PauliOp::Y: return {PauliOp::Y, 2};
                case PauliOp::Z: return {PauliOp::Z, 2};
                default: break;
            }
            break;
        case Gate::Y:
            switch (p) {
                case PauliOp::X: return {PauliOp::X, 2};
                case PauliOp::Y: return {PauliOp::Y, 0};
                case PauliOp::Z: return {PauliOp::Z, 2};
                default: break;
            }
            break;
        case Gate::Z:
            switch (p) {
                case PauliOp::X: return {PauliOp::X, 2};
                case PauliOp::Y: return {PauliOp::Y, 2};
                case PauliOp::Z: return {PauliOp::Z, 0};
                default: break;
            }
            break;
        // Rx(pi/2): X -> X, Y -> Z, Z -> -Y
        case Gate::RxPlusHalf:
            switch (p) {
                case PauliOp::X: return {PauliOp::X, 0};
                case PauliOp::Y: return {PauliOp::Z, 0};
                case PauliOp::Z: return {PauliOp::Y, 2};
                default: break;
            }
            break;
        case Gate::RxMinusHalf:
            switch (p) {
                case PauliOp::X: return {PauliOp::X, 0};
                case PauliOp::Y: return {PauliOp::Z, 2};
                case PauliOp::Z: return {PauliOp::Y, 0};
                default: break;
            }
            break;
        case Gate::T:
        case Gate::Tdg:
            if (p == PauliOp::Z) return {PauliOp::Z, 0};
            throw std::domain_error(
                "conjugate_pauli: X/Y through a T-type gate is not a Pauli");
        default: break;
    }
    throw std::invalid_argument("conj1: unsupported gate");
}

}  // namespace

PauliString conjugate_pauli_1q(Gate g, int qubit, PauliOp p) {
    Image im = conj1(g, p);
    PauliString out = PauliString::single(qubit, im.op);
    return PauliString({{qubit, im.op}}, im.phase);
}

PauliString conjugate_pauli_2q(Gate g, int q0, int q1, PauliOp p0, PauliOp p1) {
    // Decompose into X/Z factors and use generator images; simplest is a
    // table over the 16 combinations via products of single-generator images.
    auto image_of = [&](PauliOp p, int which) -> PauliString {
        // Image of P on qubit `which` (0 or 1) under the 2q gate.
        if (p == PauliOp::I) return PauliString::identity();
        // Build from X and Z generator images; Y = i X Z.
        auto gen = [&](PauliOp basis) -> PauliString {
            switch (g) {
                case Gate::CNOT:
                    // control = q0, target = q1
                    if (which == 0 && basis == PauliOp::X)
                        return PauliString({{q0, PauliOp::X}, {q1, PauliOp::X}});
                    if (which == 0 && basis == PauliOp::Z)
                        return PauliString({{q0, PauliOp::Z}});
                    if (which == 1 && basis == PauliOp::X)
                        return PauliString({{q1, PauliOp::X}});
                    return PauliString({{q0, PauliOp::Z}, {q1, PauliOp::Z}});
                case Gate::CZ:
                    if (which == 0 && basis == PauliOp::X)
                        return PauliString({{q0, PauliOp::X}, {q1, PauliOp::Z}});
                    if (which == 0 && basis == PauliOp::Z)
                        return PauliString({{q0, PauliOp::Z}});
                    if (which == 1 && basis == PauliOp::X)
                        return PauliString({{q0, PauliOp::Z}, {q1, PauliOp::X}});
                    return PauliString({{q1, PauliOp::Z}});
                case Gate::SWAP: {
                    int dst = which == 0 ? q1 : q0;
                    return PauliString({{dst, basis}});
                }
                default:
                    throw std::invalid_argument("conjugate_pauli_2q: not a 2q gate");
            }
        };
        if (p == PauliOp::X) return gen(PauliOp::X);
        if (p == PauliOp::Z) return gen(PauliOp::Z);
        // Y = i X Z
        PauliString r = gen(PauliOp::X) * gen(PauliOp::Z);
        return PauliString(r.ops(), r.phase_pow() + 1);
    };
    return image_of(p0, 0) * image_of(p1, 1);
}

PauliString conjugate_pauli(const PauliString& p, Gate g, const std::vector<int>& qubits) {
    if (static_cast<int>(qubits.size()) != gate_arity(g))
        throw std::invalid_argument("conjugate_pauli: arity mismatch");
    PauliString rest;
    PauliString on_gate = PauliString::identity();
    // Split p into the part on the gate's qubits and the rest.
    std::map<int, PauliOp> rest_ops;
    for (auto& [q, op] : p.ops()) {
        bool on = false;
        for (int gq : qubits)
            if (gq == q) on = true;
        if (!on) rest_ops.emplace(q, op);
    }
    rest = PauliString(rest_ops, p.phase_pow());
    PauliString image;
    if (gate_arity(g) == 1) {
        image = conjugate_pauli_1q(g, qubits[0], p.op_on(qubits[0]));
    } else {
        image = conjugate_pauli_2q(g, qubits[0], qubits[1], p.op_on(qubits[0]),
                                   p.op_on(qubits[1]));
    }
    return rest * image;
}

}  // namespace c4ccz
