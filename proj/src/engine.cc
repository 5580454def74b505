#include "rewire/engine.h"

#include "rewire/errors.h"

namespace rewire {

CommutationTargets CommutationTargets::on(size_t k, size_t qubit, bool a, bool b) {
    CommutationTargets t = none(k);
    t.a.at(qubit) = a;
    t.b.at(qubit) = b;
    return t;
}

RewiringPair RewiringPair::with_negated_prime() const {
    RewiringPair out = *this;
    out.g_prime = g_prime.negated();
    return out;
}

TableauState TableauState::from_code(const StabilizerCode &code) {
    return {code.generators, code.logicals};
}

AffineSolutionSpace find_first_observable(const StabilizerCode &code, size_t m) {
    if (m >= code.generators.size()) {
        throw SynthesisError("generator index " + std::to_string(m) + " out of range for " +
                             std::to_string(code.generators.size()) + " generators");
    }
    auto logical_rows = code.logical_rows();
    GF2Matrix lambda = build_lambda(code.check_matrix(), std::nullopt, logical_rows);
    BitVector rhs(lambda.rows());
    rhs.set(m, true);
    auto space = lambda.solve_affine(rhs);
    if (!space) {
        throw InvariantError("first-observable system unsolvable; the code's check and logical rows are dependent");
    }
    return *space;
}

AffineSolutionSpace find_second_observable(const StabilizerCode &code, size_t m, const PauliOperator &g,
                                           const CommutationTargets &targets) {
    if (code.generators.empty()) {
        throw SynthesisError("unsupported code: rewiring needs at least one stabilizer generator");
    }
    if (m >= code.generators.size()) {
        throw SynthesisError("generator index " + std::to_string(m) + " out of range");
    }
    size_t k = code.num_logical();
    if (targets.size() != k || targets.b.size() != k) {
        throw DimensionError("commutation targets cover " + std::to_string(targets.size()) + " qubits, code has " +
                             std::to_string(k));
    }
    auto logical_rows = code.logical_rows();
    GF2Matrix lambda = build_lambda(code.check_matrix(), g.symplectic_row(), logical_rows);
    BitVector rhs(lambda.rows());
    size_t m_gens = code.generators.size();
    rhs.set(m, true);
    rhs.set(m_gens, true);
    for (size_t j = 0; j < k; j++) {
        rhs.set(m_gens + 1 + 2 * j, targets.a[j]);
        rhs.set(m_gens + 2 + 2 * j, targets.b[j]);
    }
    auto space = lambda.solve_affine(rhs);
    if (!space) {
        throw InvariantError("second-observable system unsolvable; g is not independent of the code rows");
    }
    return *space;
}

PauliOperator observable_from_solution(const BitVector &solution) {
    if (solution.size() % 2 != 0) {
        throw DimensionError("solution column must have even length");
    }
    size_t n = solution.size() / 2;
    return PauliOperator::hermitian(solution.slice(n, n), solution.slice(0, n));
}

std::vector<std::string> pair_violations(const TableauState &state, const RewiringPair &pair) {
    std::vector<std::string> out;
    const auto &gens = state.generators;
    if (pair.m >= gens.size()) {
        out.push_back("replaced generator index " + std::to_string(pair.m) + " out of range");
        return out;
    }
    for (const auto *op : {&pair.g, &pair.g_prime}) {
        if (op->num_qubits() != state.num_qubits()) {
            out.push_back("observable " + op->str() + " has the wrong qubit count");
            return out;
        }
        if (!op->is_hermitian()) {
            out.push_back("observable " + op->str() + " is not Hermitian");
        }
    }
    size_t k = state.logicals.size();
    if (pair.targets.size() != k || pair.targets.b.size() != k) {
        out.push_back("commutation targets do not cover every logical qubit");
        return out;
    }
    for (size_t j = 0; j < gens.size(); j++) {
        bool expected = j == pair.m;
        if (anticommutes(pair.g, gens[j]) != expected) {
            out.push_back("condition 1: c(g, g_" + std::to_string(j) + ") != " + std::to_string(expected));
        }
        if (anticommutes(pair.g_prime, gens[j]) != expected) {
            out.push_back("condition 3: c(g', g_" + std::to_string(j) + ") != " + std::to_string(expected));
        }
    }
    for (size_t j = 0; j < k; j++) {
        if (anticommutes(pair.g, state.logicals[j].x) || anticommutes(pair.g, state.logicals[j].z)) {
            out.push_back("condition 2: g anticommutes with logical qubit " + std::to_string(j));
        }
        if (anticommutes(pair.g_prime, state.logicals[j].x) != pair.targets.a[j]) {
            out.push_back("target: c(g', X_L(" + std::to_string(j) + ")) != " + std::to_string(pair.targets.a[j]));
        }
        if (anticommutes(pair.g_prime, state.logicals[j].z) != pair.targets.b[j]) {
            out.push_back("target: c(g', Z_L(" + std::to_string(j) + ")) != " + std::to_string(pair.targets.b[j]));
        }
    }
    if (!anticommutes(pair.g, pair.g_prime)) {
        out.push_back("condition 4: c(g, g') != 1");
    }
    return out;
}

namespace {

size_t measurement_update_in_place(TableauState &state, const PauliOperator &measured, const PauliOperator &correction) {
    auto &gens = state.generators;
    size_t pivot = gens.size();
    for (size_t j = 0; j < gens.size(); j++) {
        if (gens[j].same_support(correction)) {
            pivot = j;
            break;
        }
    }
    if (pivot == gens.size()) {
        throw SynthesisError("correction " + correction.str() + " is not a current generator");
    }
    if (!anticommutes(measured, gens[pivot])) {
        throw SynthesisError("measurement not anticommuting with designated correction: " + measured.str() +
                             " vs " + gens[pivot].str());
    }
    for (size_t j = 0; j < gens.size(); j++) {
        if (j != pivot && anticommutes(measured, gens[j])) {
            throw SynthesisError("measurement anticommutes with a second generator: " + measured.str() + " vs " +
                                 gens[j].str());
        }
    }
    const PauliOperator pivot_op = gens[pivot];
    for (auto &pair : state.logicals) {
        if (anticommutes(measured, pair.x)) {
            pair.x = pivot_op * pair.x;
        }
        if (anticommutes(measured, pair.z)) {
            pair.z = pivot_op * pair.z;
        }
    }
    gens[pivot] = measured;
    return pivot;
}

void conjugate_by(TableauState &state, const PauliOperator &pauli) {
    for (auto &g : state.generators) {
        if (anticommutes(g, pauli)) {
            g = g.negated();
        }
    }
    for (auto &pair : state.logicals) {
        if (anticommutes(pair.x, pauli)) {
            pair.x = pair.x.negated();
        }
        if (anticommutes(pair.z, pauli)) {
            pair.z = pair.z.negated();
        }
    }
}

std::string outcome_label(size_t bits, size_t count) {
    std::string out = "(";
    for (size_t i = 0; i < count; i++) {
        if (i) out += ",";
        out += ((bits >> i) & 1) ? "-" : "+";
    }
    return out + ")";
}

}  // namespace

TableauState measurement_update(const TableauState &state, const PauliOperator &measured,
                           const PauliOperator &correction) {
    TableauState out = state;
    measurement_update_in_place(out, measured, correction);
    return out;
}

TableauState measure_step(const TableauState &state, const ScheduleStep &step, bool outcome_minus,
                          bool apply_correction) {
    TableauState out = state;
    size_t pivot = measurement_update_in_place(out, step.measure, step.correct_on_minus);
    if (outcome_minus) {
        out.generators[pivot] = out.generators[pivot].negated();
        if (apply_correction) {
            conjugate_by(out, step.correct_on_minus);
        }
    }
    return out;
}

TableauState run_steps(const TableauState &state, const std::vector<ScheduleStep> &steps,
                       const std::vector<bool> &outcomes_minus) {
    TableauState current = state;
    for (size_t i = 0; i < steps.size(); i++) {
        bool minus = i < outcomes_minus.size() && outcomes_minus[i];
        current = measure_step(current, steps[i], minus);
    }
    return current;
}

std::array<ScheduleStep, 3> rewiring_steps(const TableauState &state, const RewiringPair &pair) {
    const PauliOperator &gm = state.generators.at(pair.m);
    return {ScheduleStep{pair.g, gm}, ScheduleStep{pair.g_prime, pair.g}, ScheduleStep{gm, pair.g_prime}};
}

std::vector<PauliOperator> canonical_group(const std::vector<PauliOperator> &generators) {
    std::vector<PauliOperator> rows = generators;
    if (rows.empty()) {
        return rows;
    }
    size_t n = rows[0].num_qubits();
    auto bit = [n](const PauliOperator &p, size_t c) { return c < n ? p.x()[c] : p.z()[c - n]; };
    size_t pivot_row = 0;
    for (size_t c = 0; c < 2 * n && pivot_row < rows.size(); c++) {
        size_t found = pivot_row;
        while (found < rows.size() && !bit(rows[found], c)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != pivot_row && bit(rows[r], c)) {
                rows[r] = rows[r] * rows[pivot_row];
            }
        }
        pivot_row++;
    }
    for (size_t r = pivot_row; r < rows.size(); r++) {
        if (rows[r].phase() != 0) {
            throw InvariantError("stabilizer group contains " + rows[r].str());
        }
    }
    rows.resize(pivot_row);
    return rows;
}

namespace {

/// Multiplies `p` by canonical rows until no pivot column is set.
PauliOperator reduce_by(PauliOperator p, const std::vector<PauliOperator> &canonical) {
    size_t n = p.num_qubits();
    for (const auto &row : canonical) {
        size_t c = 0;
        while (c < 2 * n && !(c < n ? row.x()[c] : row.z()[c - n])) {
            c++;
        }
        bool set = c < n ? p.x()[c] : p.z()[c - n];
        if (set) {
            p = p * row;
        }
    }
    return p;
}

}  // namespace

LogicalAction extract_logical_action(const std::vector<LogicalPair> &initial, const std::vector<LogicalPair> &final,
                                     const std::vector<PauliOperator> &stabilizers) {
    size_t k = initial.size();
    if (final.size() != k) {
        throw DimensionError("initial and final logical sets differ in size");
    }
    if (k == 0) {
        return LogicalAction::identity(0);
    }
    size_t n = initial[0].x.num_qubits();
    std::vector<PauliOperator> canonical = canonical_group(stabilizers);
    std::vector<PauliOperator> images;
    for (size_t i = 0; i < 2 * k; i++) {
        const PauliOperator &f = (i % 2 == 0) ? final[i / 2].x : final[i / 2].z;
        for (const auto &s : stabilizers) {
            if (anticommutes(f, s)) {
                throw InvariantError("logical leaked outside code: " + f.str() + " anticommutes with stabilizer " +
                                     s.str());
            }
        }
        BitVector u(k);
        BitVector v(k);
        std::vector<PauliOperator> factors;
        for (size_t j = 0; j < k; j++) {
            u.set(j, anticommutes(f, initial[j].z));
            v.set(j, anticommutes(f, initial[j].x));
            if (u[j]) factors.push_back(initial[j].x);
            if (v[j]) factors.push_back(initial[j].z);
        }
        PauliOperator inverse(n);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            inverse = inverse * *it;
        }
        // f = d * L with d in the signed stabilizer group up to a phase omega,
        // so f acts on the code as omega * X^u Z^v.
        PauliOperator residual = reduce_by(f * inverse, canonical);
        if (!residual.is_identity()) {
            throw InvariantError("logical leaked outside code: " + f.str() +
                                 " is not expressible over the initial logicals");
        }
        PauliOperator image(residual.phase(), u, v);
        if (!image.is_hermitian()) {
            throw InvariantError("phase convention violation: " + f.str() + " reduces to " + image.str());
        }
        images.push_back(image);
    }
    return LogicalAction(std::move(images));
}

RewiringResult elementary_rewiring(const TableauState &state, const RewiringPair &pair) {
    auto violations = pair_violations(state, pair);
    if (!violations.empty()) {
        std::string msg = "invalid rewiring pair:";
        for (const auto &v : violations) {
            msg += " " + v + ";";
        }
        throw SynthesisError(msg);
    }
    auto steps = rewiring_steps(state, pair);
    TableauState current = state;
    for (const auto &step : steps) {
        current = measurement_update(current, step.measure, step.correct_on_minus);
    }
    if (canonical_group(current.generators) != canonical_group(state.generators)) {
        throw InvariantError("elementary rewiring did not restore the signed stabilizer group");
    }
    LogicalAction action = extract_logical_action(state.logicals, current.logicals, current.generators);
    return {std::move(current), std::move(action)};
}

namespace {

RewiringType type_of(GateKind kind) {
    switch (kind) {
        case GateKind::S:
        case GateKind::Sdg:
            return RewiringType::SqrtZ;
        case GateKind::SX:
        case GateKind::SXdg:
            return RewiringType::SqrtX;
        case GateKind::SY:
        case GateKind::SYdg:
            return RewiringType::SqrtY;
        default:
            return RewiringType::Other;
    }
}

}  // namespace

RewiringPair fix_sign(const StabilizerCode &code, const RewiringPair &pair, GateKind desired, size_t qubit) {
    RewiringType wanted = type_of(desired);
    if (wanted == RewiringType::Other) {
        throw SynthesisError(std::string("fix_sign: ") + gate_name(desired) + " is not a square-root gate");
    }
    TableauState state = TableauState::from_code(code);
    RewiringResult first = elementary_rewiring(state, pair);
    RewiringType got = classify(first.action, qubit);
    if (got != wanted) {
        throw SynthesisError(std::string("fix_sign: pair induces ") + to_string(got) + " action, expected " +
                             to_string(wanted));
    }
    LogicalAction target = gate_action({desired, qubit}, code.num_logical());
    if (first.action == target) {
        return pair;
    }
    RewiringPair flipped = pair.with_negated_prime();
    if (elementary_rewiring(state, flipped).action == target) {
        return flipped;
    }
    throw InvariantError("fix_sign: neither sign of g' induces " + std::string(gate_name(desired)));
}

BranchReport simulate_all_branches(const TableauState &state, const RewiringPair &pair,
                                   const BranchOptions &options) {
    auto violations = pair_violations(state, pair);
    if (!violations.empty()) {
        throw SynthesisError("invalid rewiring pair: " + violations.front());
    }
    return simulate_step_branches(state, rewiring_steps(state, pair), options);
}

BranchReport simulate_step_branches(const TableauState &state, const std::array<ScheduleStep, 3> &steps,
                                    const BranchOptions &options) {
    BranchReport report;
    const auto initial_group = canonical_group(state.generators);
    std::optional<LogicalAction> reference_action;
    for (size_t bits = 0; bits < 8; bits++) {
        report.branches++;
        std::string name = outcome_label(bits, 3);
        try {
            TableauState current = state;
            for (size_t i = 0; i < 3; i++) {
                bool minus = (bits >> i) & 1;
                bool correct = !(options.omit_correction_step && *options.omit_correction_step == i);
                current = measure_step(current, steps[i], minus, correct);
            }
            if (canonical_group(current.generators) != initial_group) {
                report.divergences.push_back("branch " + name + ": stabilizer group not restored");
                continue;
            }
            LogicalAction action = extract_logical_action(state.logicals, current.logicals, current.generators);
            if (!reference_action) {
                reference_action = action;
                report.agreeing++;
            } else if (action != *reference_action) {
                report.divergences.push_back("branch " + name + ": logical action " + action.str() +
                                             " differs from " + reference_action->str());
            } else {
                report.agreeing++;
            }
        } catch (const std::exception &e) {
            report.divergences.push_back("branch " + name + ": " + e.what());
        }
    }
    report.consistent = report.divergences.empty();
    report.action = reference_action;
    return report;
}

}  // namespace rewire
