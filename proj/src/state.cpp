#include "c4ccz/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c4ccz {

Basis basis_from_char(char c) {
    switch (c) {
        case 'X': return Basis::X;
        case 'Y': return Basis::Y;
        case 'Z': return Basis::Z;
    }
    throw std::invalid_argument(std::string("bad basis: ") + c);
}

char basis_char(Basis b) {
    switch (b) {
        case Basis::X: return 'X';
        case Basis::Y: return 'Y';
        case Basis::Z: return 'Z';
    }
    return '?';
}

StateVector::StateVector(int qubit_cap) : cap_(qubit_cap) {
    amps_ = {cplx(1.0, 0.0)};  // zero qubits: the scalar 1
}

bool StateVector::is_live(int qubit) const {
    return std::find(live_.begin(), live_.end(), qubit) != live_.end();
}

int StateVector::bit_index_of(int qubit) const {
    auto it = std::find(live_.begin(), live_.end(), qubit);
    if (it == live_.end())
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " is not live");
    return static_cast<int>(it - live_.begin());
}

void StateVector::add_qubit(int qubit) {
    if (is_live(qubit))
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " already live");
    if (live_count() + 1 > cap_)
        throw std::runtime_error("qubit cap exceeded (" + std::to_string(cap_) + ")");
    live_.push_back(qubit);
    amps_.resize(amps_.size() * 2, cplx(0.0, 0.0));  // new bit is the highest; |0> branch is the existing prefix
}

void StateVector::discard_qubit(int qubit, double tol) {
    int bit = bit_index_of(qubit);
    size_t stride = size_t(1) << bit;
    size_t n = amps_.size();
    double w0 = 0.0, w1 = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double w = std::norm(amps_[i]);
        if (i & stride)
            w1 += w;
        else
            w0 += w;
    }
    auto branch_amp = [&](size_t i, int b) {
        size_t lo = i & (stride - 1);
        size_t hi = (i >> bit) << (bit + 1);
        return amps_[hi | (size_t(b) << bit) | lo];
    };
    std::vector<cplx> out(n / 2);
    if (w1 <= tol || w0 <= tol) {
        // Computational-basis factor (the post Z-measurement case).
        int keep = w1 > w0 ? 1 : 0;
        double scale = 1.0 / std::sqrt(keep ? w1 : w0);
        for (size_t i = 0; i < out.size(); ++i) out[i] = branch_amp(i, keep) * scale;
    } else {
        // General product factor: the two branch vectors must be parallel.
        size_t ref = 0;
        double best = 0.0;
        for (size_t i = 0; i < out.size(); ++i) {
            double w = std::norm(branch_amp(i, 0));
            if (w > best) {
                best = w;
                ref = i;
            }
        }
        cplx ratio = branch_amp(ref, 1) / branch_amp(ref, 0);
        double off = 0.0;
        for (size_t i = 0; i < out.size(); ++i)
            off += std::norm(branch_amp(i, 1) - ratio * branch_amp(i, 0));
        off /= (1.0 + std::norm(ratio));
        if (off > tol)
            throw std::runtime_error("discard of entangled/unmeasured qubit " +
                                     std::to_string(qubit) + " (off-branch weight " +
                                     std::to_string(off) + ")");
        double scale = 1.0 / std::sqrt(w0);
        for (size_t i = 0; i < out.size(); ++i) out[i] = branch_amp(i, 0) * scale;
    }
    amps_ = std::move(out);
    live_.erase(live_.begin() + bit);
}

void StateVector::apply_matrix1(const std::array<cplx, 4>& m, int bit) {
    size_t stride = size_t(1) << bit;
    size_t n = amps_.size();
    for (size_t base = 0; base < n; base += 2 * stride) {
        for (size_t i = base; i < base + stride; ++i) {
            cplx a0 = amps_[i];
            cplx a1 = amps_[i + stride];
            amps_[i] = m[0] * a0 + m[1] * a1;
            amps_[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void StateVector::apply_matrix2(const std::array<cplx, 16>& m, int bit_hi, int bit_lo) {
    size_t sh = size_t(1) << bit_hi;
    size_t sl = size_t(1) << bit_lo;
    size_t n = amps_.size();
    for (size_t i = 0; i < n; ++i) {
        if ((i & sh) || (i & sl)) continue;
        size_t i00 = i, i01 = i | sl, i10 = i | sh, i11 = i | sh | sl;
        cplx a00 = amps_[i00], a01 = amps_[i01], a10 = amps_[i10], a11 = amps_[i11];
        amps_[i00] = m[0] * a00 + m[1] * a01 + m[2] * a10 + m[3] * a11;
        amps_[i01] = m[4] * a00 + m[5] * a01 + m[6] * a10 + m[7] * a11;
        amps_[i10] = m[8] * a00 + m[9] * a01 + m[10] * a10 + m[11] * a11;
        amps_[i11] = m[12] * a00 + m[13] * a01 + m[14] * a10 + m[15] * a11;
    }
}

void StateVector::apply_gate(Gate g, const std::vector<int>& qubits) {
    if (static_cast<int>(qubits.size()) != gate_arity(g))
        throw std::invalid_argument("apply_gate: arity mismatch for " + gate_name(g));
    if (qubits.size() == 2 && qubits[0] == qubits[1])
        throw std::invalid_argument("apply_gate: duplicate qubit");
    if (gate_arity(g) == 1) {
        apply_matrix1(gate_matrix1(g), bit_index_of(qubits[0]));
    } else {
        // Matrix convention: first qubit is the high-order bit.
        apply_matrix2(gate_matrix2(g), bit_index_of(qubits[0]), bit_index_of(qubits[1]));
    }
}

void StateVector::apply_pauli(const PauliString& p) {
    for (auto& [q, op] : p.ops()) {
        switch (op) {
            case PauliOp::X: apply_gate(Gate::X, {q}); break;
            case PauliOp::Y: apply_gate(Gate::Y, {q}); break;
            case PauliOp::Z: apply_gate(Gate::Z, {q}); break;
            default: break;
        }
    }
    cplx ph = p.phase();
    if (ph != cplx(1.0, 0.0))
        for (auto& a : amps_) a *= ph;
}

void StateVector::apply_controlled_phase(const std::vector<int>& qubits, cplx phase) {
    size_t mask = 0;
    for (int q : qubits) mask |= size_t(1) << bit_index_of(q);
    for (size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == mask) amps_[i] *= phase;
}

MeasureResult StateVector::measure(int qubit, Basis basis, const BranchPolicy& policy,
                                   std::mt19937_64* rng) {
    // Rotate so the +1 eigenvector of the basis observable maps to |0>.
    switch (basis) {
        case Basis::X: apply_gate(Gate::H, {qubit}); break;
        case Basis::Y:
            apply_gate(Gate::Sdg, {qubit});
            apply_gate(Gate::H, {qubit});
            break;
        case Basis::Z: break;
    }
    int bit = bit_index_of(qubit);
    size_t stride = size_t(1) << bit;
    double w1 = 0.0;
    for (size_t i = 0; i < amps_.size(); ++i)
        if (i & stride) w1 += std::norm(amps_[i]);
    double w0 = 1.0 - w1;

    MeasureResult res;
    if (policy.kind == BranchPolicy::Force) {
        res.outcome = policy.forced_bit;
        res.forced = true;
    } else {
        if (rng == nullptr) throw std::invalid_argument("measure: sampling without rng");
        std::uniform_real_distribution<double> u(0.0, 1.0);
        res.outcome = u(*rng) < w1 ? 1 : 0;
    }
    res.probability = res.outcome ? w1 : w0;
    if (res.probability < 1e-12)
        throw std::runtime_error("measure: forced zero-probability branch on qubit " +
                                 std::to_string(qubit));
    double scale = 1.0 / std::sqrt(res.probability);
    for (size_t i = 0; i < amps_.size(); ++i) {
        bool one = (i & stride) != 0;
        if (one != (res.outcome == 1))
            amps_[i] = 0.0;
        else
            amps_[i] *= scale;
    }
    // Rotate back.
    switch (basis) {
        case Basis::X: apply_gate(Gate::H, {qubit}); break;
        case Basis::Y:
            apply_gate(Gate::H, {qubit});
            apply_gate(Gate::S, {qubit});
            break;
        case Basis::Z: break;
    }
    return res;
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (auto& a : amps_) s += std::norm(a);
    return s;
}

void StateVector::check_norm(double tol) const {
    if (std::abs(norm_sq() - 1.0) > tol)
        throw std::runtime_error("state norm drifted: " + std::to_string(norm_sq()));
}

void StateVector::align_to(const std::vector<int>& order) {
    if (order.size() != live_.size())
        throw std::invalid_argument("align_to: qubit set mismatch");
    for (int q : order)
        if (!is_live(q)) throw std::invalid_argument("align_to: qubit set mismatch");
    if (order == live_) return;
    // Permute amplitudes: new index bit k corresponds to order[k].
    std::vector<int> src_bit(order.size());
    for (size_t k = 0; k < order.size(); ++k) src_bit[k] = bit_index_of(order[k]);
    std::vector<cplx> out(amps_.size());
    for (size_t i = 0; i < amps_.size(); ++i) {
        size_t j = 0;
        for (size_t k = 0; k < src_bit.size(); ++k)
            if (i & (size_t(1) << src_bit[k])) j |= size_t(1) << k;
        out[j] = amps_[i];
    }
    amps_ = std::move(out);
    live_ = order;
}

std::complex<double> StateVector::overlap(const StateVector& a, const StateVector& b) {
    if (a.live_.size() != b.live_.size())
        throw std::invalid_argument("overlap: qubit set mismatch");
    StateVector bb = b;
    bb.align_to(a.live_);
    cplx s = 0.0;
    for (size_t i = 0; i < a.amps_.size(); ++i) s += std::conj(a.amps_[i]) * bb.amps_[i];
    return s;
}

double StateVector::fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(overlap(a, b));
}

std::complex<double> StateVector::expectation(const PauliString& p) const {
    StateVector tmp = *this;
    tmp.apply_pauli(p);
    return overlap(*this, tmp);
}

}  // namespace c4ccz
