#include "rewire/program.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "rewire/errors.h"

namespace rewire {

namespace {

struct GateInfo {
    GateKind kind;
    const char *name;
    int arity;
};

constexpr GateInfo kGates[] = {
    {GateKind::H, "H", 1},         {GateKind::S, "S", 1},       {GateKind::Sdg, "SDG", 1},
    {GateKind::SX, "SX", 1},       {GateKind::SXdg, "SXDG", 1}, {GateKind::SY, "SY", 1},
    {GateKind::SYdg, "SYDG", 1},   {GateKind::X, "X", 1},       {GateKind::Y, "Y", 1},
    {GateKind::Z, "Z", 1},         {GateKind::CNOT, "CNOT", 2},
};

const std::map<std::string, GateKind> &aliases() {
    static const std::map<std::string, GateKind> table = {
        {"SQRT_Z", GateKind::S},      {"SQRT_Z_DAG", GateKind::Sdg}, {"S_DAG", GateKind::Sdg},
        {"SQRT_X", GateKind::SX},     {"SQRT_X_DAG", GateKind::SXdg}, {"SQRT_Y", GateKind::SY},
        {"SQRT_Y_DAG", GateKind::SYdg}, {"CX", GateKind::CNOT},
    };
    return table;
}

const GateInfo &info(GateKind kind) {
    for (const auto &g : kGates) {
        if (g.kind == kind) {
            return g;
        }
    }
    throw InvariantError("unknown gate kind");
}

std::string trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    return std::string(s.substr(b, e - b));
}

size_t parse_index(const std::string &token, const std::string &stmt) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(c); })) {
        throw ParseError("statement '" + stmt + "': '" + token + "' is not a qubit index");
    }
    return std::stoul(token);
}

}  // namespace

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::Sdg:
            return "Sdg";
        case GateKind::SXdg:
            return "SXdg";
        case GateKind::SYdg:
            return "SYdg";
        default:
            return info(kind).name;
    }
}

std::string to_string(const Gate &gate) {
    std::string out = gate_name(gate.kind);
    out += " " + std::to_string(gate.qubit);
    if (gate.kind == GateKind::CNOT) {
        out += " " + std::to_string(gate.target);
    }
    return out;
}

std::string to_string(const GateProgram &program) {
    std::string out;
    for (const auto &g : program.gates) {
        if (!out.empty()) {
            out += "; ";
        }
        out += to_string(g);
    }
    return out;
}

GateProgram parse_program(std::string_view text, size_t num_qubits) {
    GateProgram program;
    std::string current;
    std::vector<std::string> statements;
    for (char c : text) {
        if (c == ';' || c == '\n') {
            statements.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    statements.push_back(current);

    for (const auto &raw : statements) {
        std::string stmt = trim(raw);
        if (stmt.empty()) {
            continue;
        }
        std::vector<std::string> tokens;
        size_t pos = 0;
        while (pos < stmt.size()) {
            while (pos < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[pos]))) pos++;
            size_t start = pos;
            while (pos < stmt.size() && !std::isspace(static_cast<unsigned char>(stmt[pos]))) pos++;
            if (pos > start) {
                tokens.push_back(stmt.substr(start, pos - start));
            }
        }
        std::string name = tokens[0];
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
        std::optional<GateKind> kind;
        for (const auto &g : kGates) {
            if (name == g.name) {
                kind = g.kind;
            }
        }
        if (!kind) {
            auto it = aliases().find(name);
            if (it == aliases().end()) {
                throw ParseError("unknown gate '" + tokens[0] + "' in statement '" + stmt + "'");
            }
            kind = it->second;
        }
        int arity = info(*kind).arity;
        if (static_cast<int>(tokens.size()) - 1 != arity) {
            throw ParseError("statement '" + stmt + "': " + gate_name(*kind) + " takes " + std::to_string(arity) +
                             " qubit index(es)");
        }
        Gate gate{*kind, parse_index(tokens[1], stmt), 0};
        if (arity == 2) {
            gate.target = parse_index(tokens[2], stmt);
            if (gate.target == gate.qubit) {
                throw ParseError("statement '" + stmt + "': CNOT control and target must differ");
            }
        }
        if (num_qubits != 0) {
            size_t top = std::max(gate.qubit, arity == 2 ? gate.target : 0);
            if (top >= num_qubits) {
                throw ParseError("statement '" + stmt + "': qubit index " + std::to_string(top) +
                                 " out of range for " + std::to_string(num_qubits) + " logical qubit(s)");
            }
        }
        program.gates.push_back(gate);
    }
    return program;
}

LogicalAction gate_action(const Gate &gate, size_t k) {
    size_t top = std::max(gate.qubit, gate.kind == GateKind::CNOT ? gate.target : 0);
    if (top >= k) {
        throw DimensionError(to_string(gate) + " addresses qubit " + std::to_string(top) + " of " +
                             std::to_string(k));
    }
    std::vector<PauliOperator> images = LogicalAction::identity(k).images();
    size_t q = gate.qubit;
    auto letter = [&](char l) { return PauliOperator::single(k, q, l); };
    PauliOperator &ix = images[2 * q];
    PauliOperator &iz = images[2 * q + 1];
    switch (gate.kind) {
        case GateKind::H:
            ix = letter('Z');
            iz = letter('X');
            break;
        case GateKind::S:
            ix = letter('Y');
            break;
        case GateKind::Sdg:
            ix = letter('Y').negated();
            break;
        case GateKind::SX:
            iz = letter('Y').negated();
            break;
        case GateKind::SXdg:
            iz = letter('Y');
            break;
        case GateKind::SY:
            ix = letter('Z').negated();
            iz = letter('X');
            break;
        case GateKind::SYdg:
            ix = letter('Z');
            iz = letter('X').negated();
            break;
        case GateKind::X:
            iz = iz.negated();
            break;
        case GateKind::Y:
            ix = ix.negated();
            iz = iz.negated();
            break;
        case GateKind::Z:
            ix = ix.negated();
            break;
        case GateKind::CNOT: {
            size_t t = gate.target;
            images[2 * q] = letter('X') * PauliOperator::single(k, t, 'X');
            images[2 * t + 1] = letter('Z') * PauliOperator::single(k, t, 'Z');
            break;
        }
    }
    return LogicalAction(std::move(images));
}

LogicalAction program_action(const GateProgram &program, size_t k) {
    LogicalAction total = LogicalAction::identity(k);
    for (const auto &g : program.gates) {
        total = total.then(gate_action(g, k));
    }
    return total;
}

Gate inverse(const Gate &gate) {
    Gate out = gate;
    switch (gate.kind) {
        case GateKind::S:
            out.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            out.kind = GateKind::S;
            break;
        case GateKind::SX:
            out.kind = GateKind::SXdg;
            break;
        case GateKind::SXdg:
            out.kind = GateKind::SX;
            break;
        case GateKind::SY:
            out.kind = GateKind::SYdg;
            break;
        case GateKind::SYdg:
            out.kind = GateKind::SY;
            break;
        default:
            break;
    }
    return out;
}

GateProgram decompose_clifford(const LogicalAction &action) {
    if (!action.is_symplectic()) {
        throw DimensionError("decompose_clifford: action is not symplectic");
    }
    size_t k = action.num_qubits();
    // Reduce R = G_m o ... o G_1 o action to a Pauli frame by appending gates,
    // then invert: action = (Pauli, G_m^-1, ..., G_1^-1) in application order.
    LogicalAction reduced = action;
    std::vector<Gate> applied;
    auto apply = [&](Gate g) {
        reduced = reduced.then(gate_action(g, k));
        applied.push_back(g);
    };
    for (size_t j = 0; j < k; j++) {
        // Turn the X_j image into X_j.
        for (size_t q = j; q < k; q++) {
            char c = reduced.image_x(j).letter(q);
            if (c == 'Z') apply({GateKind::H, q});
            if (c == 'Y') apply({GateKind::S, q});
        }
        if (reduced.image_x(j).letter(j) == 'I') {
            for (size_t q = j + 1; q < k; q++) {
                if (reduced.image_x(j).letter(q) == 'X') {
                    apply({GateKind::CNOT, q, j});
                    break;
                }
            }
        }
        for (size_t q = j + 1; q < k; q++) {
            if (reduced.image_x(j).letter(q) == 'X') {
                apply({GateKind::CNOT, j, q});
            }
        }
        // Turn the Z_j image into Z_j while keeping X_j fixed.
        if (reduced.image_z(j).letter(j) == 'Y') {
            apply({GateKind::SX, j});
        }
        for (size_t q = j + 1; q < k; q++) {
            char c = reduced.image_z(j).letter(q);
            if (c == 'X') apply({GateKind::H, q});
            if (c == 'Y') apply({GateKind::SX, q});
            if (reduced.image_z(j).letter(q) == 'Z') {
                apply({GateKind::CNOT, q, j});
            }
        }
        if (!reduced.image_x(j).same_support(PauliOperator::single(k, j, 'X')) ||
            !reduced.image_z(j).same_support(PauliOperator::single(k, j, 'Z'))) {
            throw InvariantError("decompose_clifford failed to reduce qubit " + std::to_string(j));
        }
    }
    GateProgram program;
    for (size_t j = 0; j < k; j++) {
        bool x_neg = reduced.image_x(j).is_negative();
        bool z_neg = reduced.image_z(j).is_negative();
        if (x_neg && z_neg) {
            program.gates.push_back({GateKind::Y, j});
        } else if (x_neg) {
            program.gates.push_back({GateKind::Z, j});
        } else if (z_neg) {
            program.gates.push_back({GateKind::X, j});
        }
    }
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        program.gates.push_back(inverse(*it));
    }
    return program;
}

}  // namespace rewire
