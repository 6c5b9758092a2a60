#include "c4ccz/pauli.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace c4ccz {

char pauli_char(PauliOp p) {
    switch (p) {
        case PauliOp::I: return 'I';
        case PauliOp::X: return 'X';
        case PauliOp::Y: return 'Y';
        case PauliOp::Z: return 'Z';
    }
    return '?';
}

PauliOp pauli_from_char(char c) {
    switch (c) {
        case 'I': return PauliOp::I;
        case 'X': return PauliOp::X;
        case 'Y': return PauliOp::Y;
        case 'Z': return PauliOp::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
}

namespace {

// product_table[a][b] = (result op, phase power of i) for a*b.
struct ProdEntry {
    PauliOp op;
    int phase;
};

constexpr ProdEntry kProd[4][4] = {
    // I            X             Y             Z
    {{PauliOp::I, 0}, {PauliOp::X, 0}, {PauliOp::Y, 0}, {PauliOp::Z, 0}},  // I*
    {{PauliOp::X, 0}, {PauliOp::I, 0}, {PauliOp::Z, 1}, {PauliOp::Y, 3}},  // X*
    {{PauliOp::Y, 0}, {PauliOp::Z, 3}, {PauliOp::I, 0}, {PauliOp::X, 1}},  // Y*
    {{PauliOp::Z, 0}, {PauliOp::Y, 1}, {PauliOp::X, 3}, {PauliOp::I, 0}},  // Z*
};

}  // namespace

PauliString::PauliString(std::map<int, PauliOp> ops, int phase_pow)
    : phase_pow_(((phase_pow % 4) + 4) % 4) {
    for (auto& [q, op] : ops) {
        if (op != PauliOp::I) ops_.emplace(q, op);
    }
}

PauliString PauliString::single(int qubit, PauliOp op) {
    PauliString p;
    if (op != PauliOp::I) p.ops_.emplace(qubit, op);
    return p;
}

PauliString PauliString::identity() { return PauliString(); }

std::complex<double> PauliString::phase() const {
    static const std::array<std::complex<double>, 4> ph = {
        std::complex<double>(1, 0), std::complex<double>(0, 1),
        std::complex<double>(-1, 0), std::complex<double>(0, -1)};
    return ph[phase_pow_];
}

PauliOp PauliString::op_on(int qubit) const {
    auto it = ops_.find(qubit);
    return it == ops_.end() ? PauliOp::I : it->second;
}

int PauliString::weight() const { return static_cast<int>(ops_.size()); }

bool PauliString::is_identity() const { return ops_.empty(); }

bool PauliString::is_z_type() const {
    for (auto& [q, op] : ops_) {
        (void)q;
        if (op != PauliOp::Z) return false;
    }
    return true;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
    PauliString out;
    out.phase_pow_ = (phase_pow_ + rhs.phase_pow_) % 4;
    out.ops_ = ops_;
    for (auto& [q, b] : rhs.ops_) {
        auto it = out.ops_.find(q);
        if (it == out.ops_.end()) {
            out.ops_.emplace(q, b);
            continue;
        }
        ProdEntry e = kProd[static_cast<int>(it->second)][static_cast<int>(b)];
        out.phase_pow_ = (out.phase_pow_ + e.phase) % 4;
        if (e.op == PauliOp::I) {
            out.ops_.erase(it);
        } else {
            it->second = e.op;
        }
    }
    return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
    int anti = 0;
    for (auto& [q, a] : ops_) {
        PauliOp b = other.op_on(q);
        if (b == PauliOp::I || a == b) continue;
        ++anti;
    }
    return anti % 2 == 0;
}

bool PauliString::operator==(const PauliString& rhs) const {
    return phase_pow_ == rhs.phase_pow_ && ops_ == rhs.ops_;
}

bool PauliString::equal_up_to_phase(const PauliString& rhs) const {
    return ops_ == rhs.ops_;
}

std::string PauliString::str() const {
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    std::ostringstream os;
    os << prefix[phase_pow_];
    if (ops_.empty()) {
        os << "I";
        return os.str();
    }
    bool first = true;
    for (auto& [q, op] : ops_) {
        if (!first) os << ' ';
        os << pauli_char(op) << q;
        first = false;
    }
    return os.str();
}

std::string PauliString::pattern(const std::vector<int>& qubits) const {
    std::string s;
    s.reserve(qubits.size());
    for (int q : qubits) {
        PauliOp op = op_on(q);
        s.push_back(op == PauliOp::I ? '.' : pauli_char(op));
    }
    return s;
}

}  // namespace c4ccz
