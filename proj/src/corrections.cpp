#include "c4ccz/corrections.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "c4ccz/executor.hpp"

namespace c4ccz {

namespace {

struct BranchResidual {
    uint32_t x_mask = 0;                 // X pattern over data-out bits
    std::vector<int> s_pow;              // per-qubit S power mod 4
    std::vector<std::vector<int>> cz;    // upper-tri CZ indicator
};

// Extracts the residual R with R |phi> = |tau>, acting on the first n bits
// (data-out) of both states; remaining bits are references and must carry no
// residual. States must already share identical qubit order.
BranchResidual extract_residual(const StateVector& phi, const StateVector& tau, int n,
                                double tol) {
    const auto& a = phi.amplitudes();
    const auto& b = tau.amplitudes();
    if (a.size() != b.size()) throw std::logic_error("extract_residual: size mismatch");
    size_t N = a.size();
    uint32_t data_mask = (uint32_t(1) << n) - 1;
    double sup_tol = 1e-8;

    // Candidate X patterns: match supports.
    std::vector<bool> sup_a(N), sup_b(N);
    for (size_t i = 0; i < N; ++i) {
        sup_a[i] = std::abs(a[i]) > sup_tol;
        sup_b[i] = std::abs(b[i]) > sup_tol;
    }
    int found = -1;
    for (uint32_t p = 0; p <= data_mask; ++p) {
        bool ok = true;
        for (size_t i = 0; i < N && ok; ++i)
            if (sup_b[i] != sup_a[i ^ p]) ok = false;
        if (!ok) continue;
        // Phase-consistency scan: ratios b[i]/a[i^p] must depend only on the
        // data part of i and be quartic roots of unity (up to a global).
        std::vector<cplx> ratio(size_t(1) << n, cplx(0, 0));
        bool consistent = true;
        for (size_t i = 0; i < N && consistent; ++i) {
            if (!sup_b[i]) continue;
            cplx r = b[i] / a[i ^ p];
            uint32_t w = uint32_t(i) & data_mask;
            if (ratio[w] == cplx(0, 0)) ratio[w] = r;
            else if (std::abs(ratio[w] - r) > 1e-7) consistent = false;
        }
        if (!consistent) continue;
        // Normalize by ratio at w=0 (global phase) and read powers of i.
        if (ratio[0] == cplx(0, 0)) continue;
        std::vector<int> f(size_t(1) << n, 0);
        bool quartic = true;
        for (uint32_t w = 0; w < (uint32_t(1) << n) && quartic; ++w) {
            if (ratio[w] == cplx(0, 0)) { quartic = false; break; }
            cplx r = ratio[w] / ratio[0];
            double ang = std::arg(r) / (M_PI / 2);
            int k = static_cast<int>(std::llround(ang));
            if (std::abs(ang - k) > 1e-6) { quartic = false; break; }
            f[w] = ((k % 4) + 4) % 4;
        }
        if (!quartic) continue;
        // Fit f to linear + CZ quadratic form.
        BranchResidual res;
        res.x_mask = p;
        res.s_pow.assign(n, 0);
        res.cz.assign(n, std::vector<int>(n, 0));
        for (int j = 0; j < n; ++j) res.s_pow[j] = f[uint32_t(1) << j];
        bool clifford = true;
        for (int j = 0; j < n && clifford; ++j)
            for (int k = j + 1; k < n && clifford; ++k) {
                int fjk = f[(uint32_t(1) << j) | (uint32_t(1) << k)];
                int diff = ((fjk - res.s_pow[j] - res.s_pow[k]) % 4 + 4) % 4;
                if (diff == 0) res.cz[j][k] = 0;
                else if (diff == 2) res.cz[j][k] = 1;
                else clifford = false;  // odd quarter-phase: a CS residual
            }
        if (!clifford)
            throw std::runtime_error(
                "branch residual carries a controlled-S (non-Clifford) term: wiring bug");
        // Verify the fit everywhere; a violation means cubic (CCZ-type) junk.
        for (uint32_t w = 0; w <= data_mask; ++w) {
            int pred = 0;
            for (int j = 0; j < n; ++j)
                if (w & (uint32_t(1) << j)) pred += res.s_pow[j];
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if ((w & (uint32_t(1) << j)) && (w & (uint32_t(1) << k)))
                        pred += 2 * res.cz[j][k];
            if (((pred - f[w]) % 4 + 4) % 4 != 0)
                throw std::runtime_error(
                    "branch residual has cubic (CCZ-type) content: wiring bug");
        }
        found = 1;
        (void)found;
        return res;
    }
    throw std::runtime_error(
        "no X pattern matches the branch output support: wiring bug");
}

// ANF (XOR of AND monomials) of a truth table over k bits -> ClassicalExpr.
std::optional<ClassicalExpr> anf_expr(const std::vector<int>& truth,
                                      const std::vector<int>& cbits) {
    int k = static_cast<int>(cbits.size());
    std::vector<int> coeff = truth;  // Moebius transform in place
    for (int j = 0; j < k; ++j)
        for (int m = 0; m < (1 << k); ++m)
            if (m & (1 << j)) coeff[m] ^= coeff[m ^ (1 << j)];
    std::optional<ClassicalExpr> expr;
    bool all_zero = true;
    for (int m = 0; m < (1 << k); ++m) {
        if (!coeff[m]) continue;
        all_zero = false;
        std::optional<ClassicalExpr> mono;
        if (m == 0) {
            mono = ClassicalExpr::constant(true);
        } else {
            for (int j = 0; j < k; ++j) {
                if (!(m & (1 << j))) continue;
                ClassicalExpr b = ClassicalExpr::bit(cbits[j]);
                mono = mono ? ClassicalExpr::and_(std::move(*mono), std::move(b))
                            : std::move(b);
            }
        }
        expr = expr ? ClassicalExpr::xor_(std::move(*expr), std::move(*mono))
                    : std::move(mono);
    }
    if (all_zero) return std::nullopt;  // never fires
    return expr;
}

bool is_constant_true(const std::vector<int>& truth) {
    return std::all_of(truth.begin(), truth.end(), [](int v) { return v == 1; });
}

}  // namespace

CorrectionTable derive_corrections(const GadgetSkeleton& skel, const TargetApplier& target,
                                   int qubit_cap, double tol) {
    const int n = static_cast<int>(skel.data_out.size());
    if (skel.data_in.size() != skel.data_out.size())
        throw std::invalid_argument("derive_corrections: in/out width mismatch");
    const int k = static_cast<int>(skel.outcome_cbits.size());

    // Reference ids beyond every id the skeleton uses.
    int max_id = 0;
    for (int q : skel.circuit.qubit_universe()) max_id = std::max(max_id, q);
    for (int q : skel.data_in) max_id = std::max(max_id, q);
    std::vector<int> refs(n);
    for (int i = 0; i < n; ++i) refs[i] = max_id + 1 + i;

    // Harness: maximally entangled pairs (ref_i, data_in_i), then the skeleton.
    Circuit harness;
    for (int i = 0; i < n; ++i) {
        harness.init(refs[i], InitState::Plus);
        harness.init(skel.data_in[i], InitState::Zero);
        harness.unitary(Gate::CNOT, {refs[i], skel.data_in[i]});
    }
    harness.compose(skel.circuit, {}, {});

    // Target state: same entangled input with the target applied on data-out
    // labels. Prepare on (data_out, refs) ordering directly.
    StateVector tau(qubit_cap);
    for (int i = 0; i < n; ++i) {
        tau.add_qubit(refs[i]);
        tau.add_qubit(skel.data_out[i]);
        tau.apply_gate(Gate::H, {refs[i]});
        tau.apply_gate(Gate::CNOT, {refs[i], skel.data_out[i]});
    }
    target(&tau, skel.data_out);
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back(skel.data_out[i]);
    for (int i = 0; i < n; ++i) order.push_back(refs[i]);
    tau.align_to(order);

    // Residuals per branch.
    std::vector<BranchResidual> residuals(size_t(1) << k);
    for (uint32_t m = 0; m < (uint32_t(1) << k); ++m) {
        std::map<int, int> forced;
        for (int j = 0; j < k; ++j) forced[skel.outcome_cbits[j]] = (m >> j) & 1;
        RunOptions opts;
        opts.teleport = TeleportPolicy::force_vector(forced);
        opts.qubit_cap = qubit_cap;
        RunResult rr = run_circuit(harness, opts);
        if (rr.detected)
            throw std::runtime_error("derive_corrections: detection flagged on a fault-free run");
        StateVector phi = std::move(rr.state);
        phi.align_to(order);
        residuals[m] = extract_residual(phi, tau, n, tol);
    }

    // Synthesize conditional gates from the per-branch residual tables.
    CorrectionTable table;
    table.outcome_cbits = skel.outcome_cbits;
    auto add_entry = [&](Gate g, std::vector<int> qs, const std::vector<int>& truth) {
        if (std::none_of(truth.begin(), truth.end(), [](int v) { return v; })) return;
        std::optional<ClassicalExpr> cond;
        if (!is_constant_true(truth)) {
            cond = anf_expr(truth, skel.outcome_cbits);
            if (!cond) return;
        }
        table.entries.push_back(ConditionalGate{g, std::move(qs), std::move(cond)});
    };

    size_t B = size_t(1) << k;
    for (int j = 0; j < n; ++j) {
        std::vector<int> t(B);
        for (size_t m = 0; m < B; ++m) t[m] = (residuals[m].x_mask >> j) & 1;
        add_entry(Gate::X, {skel.data_out[j]}, t);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<int> ts(B), tz(B);
        for (size_t m = 0; m < B; ++m) {
            ts[m] = residuals[m].s_pow[j] & 1;
            tz[m] = (residuals[m].s_pow[j] >> 1) & 1;
        }
        add_entry(Gate::S, {skel.data_out[j]}, ts);
        add_entry(Gate::Z, {skel.data_out[j]}, tz);
    }
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
            std::vector<int> t(B);
            for (size_t m = 0; m < B; ++m) t[m] = residuals[m].cz[j][l];
            add_entry(Gate::CZ, {skel.data_out[j], skel.data_out[l]}, t);
        }

    // Verification: every branch, with corrections, must hit the target.
    Circuit verified = harness;
    // Corrections order: X entries first (as extracted), then diagonals.
    for (auto& e : table.entries) verified.unitary(e.gate, e.qubits, e.condition);
    for (uint32_t m = 0; m < (uint32_t(1) << k); ++m) {
        std::map<int, int> forced;
        for (int j = 0; j < k; ++j) forced[skel.outcome_cbits[j]] = (m >> j) & 1;
        RunOptions opts;
        opts.teleport = TeleportPolicy::force_vector(forced);
        opts.qubit_cap = qubit_cap;
        RunResult rr = run_circuit(verified, opts);
        rr.state.align_to(order);
        double fid = StateVector::fidelity(rr.state, tau);
        if (fid < 1.0 - tol)
            throw std::runtime_error("derive_corrections: branch " + std::to_string(m) +
                                     " verification failed (fidelity " +
                                     std::to_string(fid) + ")");
    }
    return table;
}

void append_corrections(Circuit* c, const CorrectionTable& table) {
    for (const auto& e : table.entries) c->unitary(e.gate, e.qubits, e.condition);
}

CorrectionTable remap_table_cbits(const CorrectionTable& table,
                                  const std::map<int, int>& cbit_map) {
    auto map_id = [&](int id) {
        auto it = cbit_map.find(id);
        return it == cbit_map.end() ? id : it->second;
    };
    CorrectionTable out = table;
    for (auto& cb : out.outcome_cbits) cb = map_id(cb);
    for (auto& e : out.entries) {
        if (!e.condition) continue;
        std::string s = e.condition->str();
        std::string rebuilt;
        for (size_t i = 0; i < s.size();) {
            if (s[i] == 'm') {
                size_t j = i + 1;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                rebuilt += "m" + std::to_string(map_id(std::stoi(s.substr(i + 1, j - i - 1))));
                i = j;
            } else {
                rebuilt += s[i++];
            }
        }
        e.condition = ClassicalExpr::parse(rebuilt);
    }
    return out;
}

CorrectionTable remap_table_qubits(const CorrectionTable& table,
                                   const std::map<int, int>& qubit_map) {
    auto map_id = [&](int id) {
        auto it = qubit_map.find(id);
        return it == qubit_map.end() ? id : it->second;
    };
    CorrectionTable out = table;
    for (auto& e : out.entries)
        for (auto& q : e.qubits) q = map_id(q);
    return out;
}

}  // namespace c4ccz
