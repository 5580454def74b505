#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rewire/logical_action.h"

namespace rewire {

enum class GateKind { H, S, Sdg, SX, SXdg, SY, SYdg, X, Y, Z, CNOT };

/// A logical gate. `target` is only meaningful for CNOT (control = qubit).
struct Gate {
    GateKind kind;
    size_t qubit = 0;
    size_t target = 0;

    bool operator==(const Gate &other) const = default;
};

struct GateProgram {
    std::vector<Gate> gates;

    bool operator==(const GateProgram &other) const = default;
};

const char *gate_name(GateKind kind);
std::string to_string(const Gate &gate);
/// Statements joined by "; ".
std::string to_string(const GateProgram &program);

/// Parses statements `GATE idx [idx]` separated by ';' or newlines. Gate names
/// are case-insensitive; SQRT_X style aliases are accepted. When
/// `num_qubits` is nonzero, indices must be below it.
GateProgram parse_program(std::string_view text, size_t num_qubits = 0);

/// Conjugation action of one gate on k logical qubits. Conventions:
///   S: X->+Y,  SX: Z->-Y,  SY: X->-Z, Z->+X  (principal square roots),
///   Sdg/SXdg/SYdg their inverses, H: X<->Z.
LogicalAction gate_action(const Gate &gate, size_t k);
/// The composed action of the gates applied in order.
LogicalAction program_action(const GateProgram &program, size_t k);

/// Gate that undoes `gate`.
Gate inverse(const Gate &gate);

/// Any symplectic, sign-valid action as a program over {H, S, Sdg, SX, SXdg,
/// CNOT, X, Y, Z}; re-composing the result reproduces the action exactly.
GateProgram decompose_clifford(const LogicalAction &action);

}  // namespace rewire
