#include "c4ccz/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace c4ccz {

// ---------------------------------------------------------------------------
// ClassicalExpr

ClassicalExpr ClassicalExpr::bit(int cbit) {
    ClassicalExpr e;
    e.kind_ = Bit;
    e.bit_ = cbit;
    return e;
}

ClassicalExpr ClassicalExpr::constant(bool value) {
    ClassicalExpr e;
    e.kind_ = Const;
    e.value_ = value;
    return e;
}

ClassicalExpr ClassicalExpr::xor_(ClassicalExpr a, ClassicalExpr b) {
    ClassicalExpr e;
    e.kind_ = Xor;
    e.lhs_ = std::make_shared<ClassicalExpr>(std::move(a));
    e.rhs_ = std::make_shared<ClassicalExpr>(std::move(b));
    return e;
}

ClassicalExpr ClassicalExpr::and_(ClassicalExpr a, ClassicalExpr b) {
    ClassicalExpr e;
    e.kind_ = And;
    e.lhs_ = std::make_shared<ClassicalExpr>(std::move(a));
    e.rhs_ = std::make_shared<ClassicalExpr>(std::move(b));
    return e;
}

ClassicalExpr ClassicalExpr::not_(ClassicalExpr a) {
    ClassicalExpr e;
    e.kind_ = Not;
    e.lhs_ = std::make_shared<ClassicalExpr>(std::move(a));
    return e;
}

bool ClassicalExpr::eval(const std::map<int, int>& bits) const {
    switch (kind_) {
        case Bit: {
            auto it = bits.find(bit_);
            if (it == bits.end())
                throw std::runtime_error("condition reads unwritten cbit m" +
                                         std::to_string(bit_));
            return it->second != 0;
        }
        case Const: return value_;
        case Xor: return lhs_->eval(bits) != rhs_->eval(bits);
        case And: return lhs_->eval(bits) && rhs_->eval(bits);
        case Not: return !lhs_->eval(bits);
    }
    return false;
}

void ClassicalExpr::collect_bits(std::vector<int>* out) const {
    switch (kind_) {
        case Bit: out->push_back(bit_); break;
        case Const: break;
        case Not: lhs_->collect_bits(out); break;
        default:
            lhs_->collect_bits(out);
            rhs_->collect_bits(out);
    }
}

std::string ClassicalExpr::str() const {
    switch (kind_) {
        case Bit: return "m" + std::to_string(bit_);
        case Const: return value_ ? "1" : "0";
        case Not: return "~" + lhs_->str();
        case Xor: return "(" + lhs_->str() + "^" + rhs_->str() + ")";
        case And: return "(" + lhs_->str() + "&" + rhs_->str() + ")";
    }
    return "?";
}

namespace {

// Tiny recursive-descent parser: expr := term (('^'|'&') term)* with '^'/'&'
// left-assoc at equal precedence (parenthesize to disambiguate; the writer
// always emits full parentheses).
struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    ClassicalExpr parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("condition: unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ClassicalExpr e = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("condition: missing ')'");
            ++pos;
            return e;
        }
        if (c == '~') {
            ++pos;
            return ClassicalExpr::not_(parse_atom());
        }
        if (c == '0' || c == '1') {
            ++pos;
            return ClassicalExpr::constant(c == '1');
        }
        if (c == 'm') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("condition: bad bit id");
            return ClassicalExpr::bit(std::stoi(s.substr(start, pos - start)));
        }
        throw std::invalid_argument(std::string("condition: unexpected '") + c + "'");
    }

    ClassicalExpr parse_expr() {
        ClassicalExpr e = parse_atom();
        while (true) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '^' || s[pos] == '&')) {
                char op = s[pos++];
                ClassicalExpr r = parse_atom();
                e = op == '^' ? ClassicalExpr::xor_(std::move(e), std::move(r))
                              : ClassicalExpr::and_(std::move(e), std::move(r));
            } else {
                break;
            }
        }
        return e;
    }
};

}  // namespace

ClassicalExpr ClassicalExpr::parse(const std::string& text) {
    ExprParser p(text);
    ClassicalExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("condition: trailing characters in '" + text + "'");
    return e;
}

// ---------------------------------------------------------------------------
// InitState

std::string init_state_name(InitState s) {
    switch (s) {
        case InitState::Zero: return "ZERO";
        case InitState::Plus: return "PLUS";
        case InitState::SdgPlus: return "SDGPLUS";
    }
    return "?";
}

bool init_state_from_name(const std::string& name, InitState* out) {
    if (name == "ZERO") *out = InitState::Zero;
    else if (name == "PLUS") *out = InitState::Plus;
    else if (name == "SDGPLUS") *out = InitState::SdgPlus;
    else return false;
    return true;
}

// ---------------------------------------------------------------------------
// Circuit

int Circuit::append(Instruction instr) {
    int idx = static_cast<int>(instrs_.size());
    if (auto* u = std::get_if<UnitaryInstr>(&instr)) {
        if (gate_is_t_type(u->gate)) fault_locations_.push_back(idx);
    }
    instrs_.push_back(std::move(instr));
    return idx;
}

int Circuit::init(int qubit, InitState s) { return append(InitInstr{qubit, s}); }

int Circuit::unitary(Gate g, std::vector<int> qubits, std::optional<ClassicalExpr> cond) {
    if (cond.has_value() && gate_is_t_type(g))
        throw std::invalid_argument("conditional T-type gates are not allowed");
    return append(UnitaryInstr{g, std::move(qubits), std::move(cond)});
}

int Circuit::measure(int qubit, Basis basis, int cbit, MeasureKind kind, int ideal) {
    return append(MeasureInstr{qubit, basis, cbit, kind, ideal});
}

int Circuit::discard(int qubit) { return append(DiscardInstr{qubit}); }

std::vector<int> Circuit::qubit_universe() const {
    std::set<int> qs;
    for (auto& in : instrs_) {
        if (auto* i = std::get_if<InitInstr>(&in)) qs.insert(i->qubit);
        else if (auto* u = std::get_if<UnitaryInstr>(&in))
            qs.insert(u->qubits.begin(), u->qubits.end());
        else if (auto* m = std::get_if<MeasureInstr>(&in)) qs.insert(m->qubit);
        else if (auto* d = std::get_if<DiscardInstr>(&in)) qs.insert(d->qubit);
    }
    return {qs.begin(), qs.end()};
}

std::vector<int> Circuit::cbit_universe() const {
    std::set<int> cs;
    for (auto& in : instrs_)
        if (auto* m = std::get_if<MeasureInstr>(&in)) cs.insert(m->cbit);
    return {cs.begin(), cs.end()};
}

void Circuit::validate() const {
    std::set<int> live;
    std::set<int> written;
    int idx = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("circuit validation at instruction " +
                                 std::to_string(idx) + ": " + msg);
    };
    for (auto& in : instrs_) {
        if (auto* i = std::get_if<InitInstr>(&in)) {
            if (live.count(i->qubit)) fail("init of live qubit q" + std::to_string(i->qubit));
            live.insert(i->qubit);
        } else if (auto* u = std::get_if<UnitaryInstr>(&in)) {
            std::set<int> seen;
            for (int q : u->qubits) {
                if (!live.count(q)) fail("gate on dead qubit q" + std::to_string(q));
                if (!seen.insert(q).second) fail("duplicate qubit in gate");
            }
            if (static_cast<int>(u->qubits.size()) != gate_arity(u->gate))
                fail("arity mismatch for " + gate_name(u->gate));
            if (u->condition.has_value()) {
                std::vector<int> bits;
                u->condition->collect_bits(&bits);
                for (int b : bits)
                    if (!written.count(b)) fail("condition reads unwritten cbit m" + std::to_string(b));
            }
        } else if (auto* m = std::get_if<MeasureInstr>(&in)) {
            if (!live.count(m->qubit)) fail("measurement of dead qubit q" + std::to_string(m->qubit));
            if (written.count(m->cbit)) fail("cbit m" + std::to_string(m->cbit) + " written twice");
            written.insert(m->cbit);
        } else if (auto* d = std::get_if<DiscardInstr>(&in)) {
            if (!live.count(d->qubit)) fail("discard of dead qubit q" + std::to_string(d->qubit));
            live.erase(d->qubit);
        }
        ++idx;
    }
}

namespace {

int map_id(const std::map<int, int>& m, int id) {
    auto it = m.find(id);
    return it == m.end() ? id : it->second;
}

Instruction remap_instr(const Instruction& in, const std::map<int, int>& qm,
                        const std::map<int, int>& cm) {
    if (auto* i = std::get_if<InitInstr>(&in)) return InitInstr{map_id(qm, i->qubit), i->state};
    if (auto* u = std::get_if<UnitaryInstr>(&in)) {
        UnitaryInstr out = *u;
        for (auto& q : out.qubits) q = map_id(qm, q);
        if (out.condition.has_value()) {
            // Conditions reference cbits only; rebuild via serialize/parse on
            // remapped text to keep the tree mapping simple.
            std::string s = out.condition->str();
            // Replace bit ids textually is fragile; instead walk via parse of a
            // remapped serialization produced below.
            // Simpler: conditions are small; rebuild by parsing with a custom map.
            // We do the rebuild by string replacement on token boundaries.
            std::string rebuilt;
            for (size_t k = 0; k < s.size();) {
                if (s[k] == 'm') {
                    size_t j = k + 1;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                    int id = std::stoi(s.substr(k + 1, j - k - 1));
                    rebuilt += "m" + std::to_string(map_id(cm, id));
                    k = j;
                } else {
                    rebuilt += s[k++];
                }
            }
            out.condition = ClassicalExpr::parse(rebuilt);
        }
        return out;
    }
    if (auto* m = std::get_if<MeasureInstr>(&in)) {
        MeasureInstr out = *m;
        out.qubit = map_id(qm, out.qubit);
        out.cbit = map_id(cm, out.cbit);
        return out;
    }
    auto* d = std::get_if<DiscardInstr>(&in);
    return DiscardInstr{map_id(qm, d->qubit)};
}

}  // namespace

void Circuit::compose(const Circuit& other, const std::map<int, int>& qubit_map,
                      const std::map<int, int>& cbit_map) {
    for (auto& in : other.instrs_) append(remap_instr(in, qubit_map, cbit_map));
    validate();
}

Circuit Circuit::remapped(const std::map<int, int>& qubit_map,
                          const std::map<int, int>& cbit_map) const {
    Circuit out;
    for (auto& in : instrs_) out.append(remap_instr(in, qubit_map, cbit_map));
    out.validate();
    return out;
}

std::string Circuit::serialize() const {
    std::ostringstream os;
    for (auto& in : instrs_) {
        if (auto* i = std::get_if<InitInstr>(&in)) {
            os << "INIT q" << i->qubit << ' ' << init_state_name(i->state) << '\n';
        } else if (auto* u = std::get_if<UnitaryInstr>(&in)) {
            os << "U " << gate_name(u->gate);
            for (int q : u->qubits) os << " q" << q;
            if (u->condition.has_value()) os << " IF " << u->condition->str();
            os << '\n';
        } else if (auto* m = std::get_if<MeasureInstr>(&in)) {
            os << "M q" << m->qubit << ' ' << basis_char(m->basis) << " -> m" << m->cbit;
            if (m->kind == MeasureKind::Detection)
                os << " DETECT " << m->ideal_outcome;
            else
                os << " TELEPORT";
            os << '\n';
        } else if (auto* d = std::get_if<DiscardInstr>(&in)) {
            os << "DISCARD q" << d->qubit << '\n';
        }
    }
    return os.str();
}

namespace {

int parse_qubit_token(const std::string& tok, int line_no) {
    if (tok.size() < 2 || tok[0] != 'q')
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected qubit token, got '" + tok + "'");
    return std::stoi(tok.substr(1));
}

int parse_cbit_token(const std::string& tok, int line_no) {
    if (tok.size() < 2 || tok[0] != 'm')
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected cbit token, got '" + tok + "'");
    return std::stoi(tok.substr(1));
}

}  // namespace

Circuit Circuit::parse(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        auto err = [&](const std::string& msg) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
        };
        if (toks[0] == "INIT") {
            if (toks.size() != 3) err("INIT wants: INIT q<N> <STATE>");
            InitState s;
            if (!init_state_from_name(toks[2], &s)) err("unknown init state " + toks[2]);
            c.init(parse_qubit_token(toks[1], line_no), s);
        } else if (toks[0] == "U") {
            if (toks.size() < 3) err("U wants: U <GATE> q... [IF expr]");
            Gate g;
            if (!gate_from_name(toks[1], &g)) err("unknown gate " + toks[1]);
            std::vector<int> qs;
            size_t k = 2;
            while (k < toks.size() && toks[k] != "IF")
                qs.push_back(parse_qubit_token(toks[k++], line_no));
            if (static_cast<int>(qs.size()) != gate_arity(g))
                err("gate " + toks[1] + " wants " + std::to_string(gate_arity(g)) + " qubits");
            std::optional<ClassicalExpr> cond;
            if (k < toks.size()) {
                std::string expr;
                for (++k; k < toks.size(); ++k) expr += toks[k];
                cond = ClassicalExpr::parse(expr);
            }
            c.unitary(g, qs, cond);
        } else if (toks[0] == "M") {
            // M q2 Y -> m3 TELEPORT ; M q4 Z -> m0 DETECT 0
            if (toks.size() < 6 || toks[3] != "->") err("M wants: M q<N> <B> -> m<K> KIND");
            int q = parse_qubit_token(toks[1], line_no);
            if (toks[2].size() != 1) err("bad basis " + toks[2]);
            Basis b = basis_from_char(toks[2][0]);
            int cb = parse_cbit_token(toks[4], line_no);
            if (toks[5] == "TELEPORT") {
                if (toks.size() != 6) err("trailing tokens after TELEPORT");
                c.measure(q, b, cb, MeasureKind::Teleport);
            } else if (toks[5] == "DETECT") {
                if (toks.size() != 7) err("DETECT wants an ideal outcome");
                c.measure(q, b, cb, MeasureKind::Detection, std::stoi(toks[6]));
            } else {
                err("unknown measurement kind " + toks[5]);
            }
        } else if (toks[0] == "DISCARD") {
            if (toks.size() != 2) err("DISCARD wants: DISCARD q<N>");
            c.discard(parse_qubit_token(toks[1], line_no));
        } else {
            err("unknown directive " + toks[0]);
        }
    }
    c.validate();
    return c;
}

uint64_t Circuit::content_hash() const {
    std::string s = serialize();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace c4ccz
