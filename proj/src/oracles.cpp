#include "c4ccz/oracles.hpp"

#include <cmath>

namespace c4ccz {

void oracle_controlled_h(StateVector* s, int control, int target) {
    // cH = (I ⊗ Rx T) CNOT (I ⊗ T^dag Rx^dag); on control=1 this is Rx K Rx^dag = H.
    s->apply_gate(Gate::RxMinusHalf, {target});
    s->apply_gate(Gate::Tdg, {target});
    s->apply_gate(Gate::CNOT, {control, target});
    s->apply_gate(Gate::T, {target});
    s->apply_gate(Gate::RxPlusHalf, {target});
}

void oracle_k(StateVector* s, int qubit) {
    s->apply_gate(Gate::Tdg, {qubit});
    s->apply_gate(Gate::X, {qubit});
    s->apply_gate(Gate::T, {qubit});
}

void oracle_cs(StateVector* s, int a, int b, int power) {
    cplx ph = std::polar(1.0, M_PI / 2 * power);
    s->apply_controlled_phase({a, b}, ph);
}

void oracle_ccz(StateVector* s, int a, int b, int c) {
    s->apply_controlled_phase({a, b, c}, cplx(-1.0, 0.0));
}

void oracle_toffoli(StateVector* s, int c1, int c2, int target) {
    s->apply_gate(Gate::H, {target});
    oracle_ccz(s, c1, c2, target);
    s->apply_gate(Gate::H, {target});
}

void oracle_magic_state(StateVector* s, int control, int t1, int t2) {
    s->add_qubit(control);
    s->add_qubit(t1);
    s->add_qubit(t2);
    s->apply_gate(Gate::H, {control});
    s->apply_gate(Gate::H, {t1});
    s->apply_gate(Gate::H, {t2});
    oracle_controlled_h(s, control, t1);
    oracle_controlled_h(s, control, t2);
}

void oracle_cs_pair(StateVector* s, int x, int y, int z) {
    oracle_cs(s, x, y);
    oracle_cs(s, x, z);
}

void oracle_coupled_ccz(StateVector* s, int c, int u1, int u2, int u3, int u4) {
    oracle_ccz(s, c, u1, u2);
    oracle_ccz(s, c, u3, u4);
}

void oracle_composite_ccz(StateVector* s, const std::array<int, 8>& l) {
    // l[k] carries paper line k+1.
    oracle_ccz(s, l[0], l[3], l[4]);  // CCZ(1,4,5)
    oracle_ccz(s, l[0], l[2], l[5]);  // CCZ(1,3,6)
    oracle_ccz(s, l[1], l[3], l[6]);  // CCZ(2,4,7)
    oracle_ccz(s, l[1], l[2], l[7]);  // CCZ(2,3,8)
}

void oracle_two_ccz_variant(StateVector* s, const std::array<int, 6>& l) {
    // l = paper lines {1,2,3,4,5,8}; survivors of setting 6,7 to |0>.
    oracle_ccz(s, l[0], l[3], l[4]);  // CCZ(1,4,5)
    oracle_ccz(s, l[1], l[2], l[5]);  // CCZ(2,3,8)
}

}  // namespace c4ccz
