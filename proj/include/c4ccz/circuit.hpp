#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "c4ccz/gates.hpp"
#include "c4ccz/state.hpp"

namespace c4ccz {

// XOR/AND/NOT tree over classical bit ids and constants.
class ClassicalExpr {
  public:
    static ClassicalExpr bit(int cbit);
    static ClassicalExpr constant(bool value);
    static ClassicalExpr xor_(ClassicalExpr a, ClassicalExpr b);
    static ClassicalExpr and_(ClassicalExpr a, ClassicalExpr b);
    static ClassicalExpr not_(ClassicalExpr a);

    bool eval(const std::map<int, int>& bits) const;
    void collect_bits(std::vector<int>* out) const;
    std::string str() const;  // serialized form, e.g. "m1^~m2", "(m1&m2)^m3"

    static ClassicalExpr parse(const std::string& text);

  private:
    enum Kind { Bit, Const, Xor, And, Not };
    Kind kind_ = Const;
    int bit_ = 0;
    bool value_ = false;
    std::shared_ptr<ClassicalExpr> lhs_, rhs_;
};

// Initial single-qubit states the IR supports.
enum class InitState { Zero, Plus, SdgPlus };

std::string init_state_name(InitState s);
bool init_state_from_name(const std::string& name, InitState* out);

enum class MeasureKind { Detection, Teleport };

struct InitInstr {
    int qubit;
    InitState state;
};

struct UnitaryInstr {
    Gate gate;
    std::vector<int> qubits;
    std::optional<ClassicalExpr> condition;
};

struct MeasureInstr {
    int qubit;
    Basis basis;
    int cbit;
    MeasureKind kind;
    int ideal_outcome = 0;  // detection only
};

struct DiscardInstr {
    int qubit;
};

using Instruction = std::variant<InitInstr, UnitaryInstr, MeasureInstr, DiscardInstr>;

// Gate list with classical bits and labeled fault locations (the T/Tdg sites).
class Circuit {
  public:
    Circuit() = default;

    int append(Instruction instr);  // returns instruction index
    int init(int qubit, InitState s);
    int unitary(Gate g, std::vector<int> qubits,
                std::optional<ClassicalExpr> cond = std::nullopt);
    int measure(int qubit, Basis basis, int cbit, MeasureKind kind, int ideal = 0);
    int discard(int qubit);

    const std::vector<Instruction>& instructions() const { return instrs_; }
    // Indices of T/Tdg instructions, in instruction order.
    const std::vector<int>& fault_locations() const { return fault_locations_; }
    int fault_count() const { return static_cast<int>(fault_locations_.size()); }

    std::vector<int> qubit_universe() const;
    std::vector<int> cbit_universe() const;

    // Structural checks: no use-after-discard, init of live qubit, read-before-
    // write of cbits, duplicate gate qubits. Throws on violation.
    void validate() const;

    // Appends all of `other`, remapping its qubit and cbit ids.
    void compose(const Circuit& other, const std::map<int, int>& qubit_map,
                 const std::map<int, int>& cbit_map);
    Circuit remapped(const std::map<int, int>& qubit_map,
                     const std::map<int, int>& cbit_map) const;

    std::string serialize() const;
    static Circuit parse(const std::string& text);

    // FNV-1a of the canonical serialization.
    uint64_t content_hash() const;

  private:
    std::vector<Instruction> instrs_;
    std::vector<int> fault_locations_;
};

}  // namespace c4ccz
