#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rewire/code.h"
#include "rewire/gf2.h"
#include "rewire/logical_action.h"
#include "rewire/program.h"

namespace rewire {

/// Desired commutation bits (a_j, b_j) = (c(g', X_L(j)), c(g', Z_L(j))) per logical qubit.
struct CommutationTargets {
    std::vector<bool> a;
    std::vector<bool> b;

    static CommutationTargets none(size_t k) {
        return {std::vector<bool>(k, false), std::vector<bool>(k, false)};
    }
    /// (a, b) on `qubit`, zero elsewhere.
    static CommutationTargets on(size_t k, size_t qubit, bool a, bool b);
    size_t size() const {
        return a.size();
    }
    bool operator==(const CommutationTargets &other) const = default;
};

/// Observables (g, g') paired with the replaced generator index m.
struct RewiringPair {
    size_t m = 0;
    PauliOperator g;
    PauliOperator g_prime;
    CommutationTargets targets;

    /// Same pair with g' negated.
    RewiringPair with_negated_prime() const;
    bool operator==(const RewiringPair &other) const = default;
};

/// Signed stabilizer generators and signed logical pairs, evolved in the
/// Heisenberg picture.
struct TableauState {
    std::vector<PauliOperator> generators;
    std::vector<LogicalPair> logicals;

    static TableauState from_code(const StabilizerCode &code);
    size_t num_qubits() const {
        return generators.empty() ? logicals.at(0).x.num_qubits() : generators[0].num_qubits();
    }
};

/// One measure-and-correct step: measure `measure`; on outcome -1 apply `correct_on_minus`.
struct ScheduleStep {
    PauliOperator measure;
    PauliOperator correct_on_minus;

    bool operator==(const ScheduleStep &other) const = default;
};

/// Solutions of  Lambda(M, L) (alpha_z ; alpha_x) = e_m : every member gives a g
/// that anticommutes with generator m only and commutes with every logical.
/// `m` is a 0-based generator index.
AffineSolutionSpace find_first_observable(const StabilizerCode &code, size_t m);

/// Solutions of  Lambda(M, alpha, L) (beta_z ; beta_x) = (e_m, 1, a_1, b_1, ...).
/// Throws SynthesisError when the code has no generators.
AffineSolutionSpace find_second_observable(const StabilizerCode &code, size_t m, const PauliOperator &g,
                                           const CommutationTargets &targets);

/// Hermitian observable from a solution column (beta_z ; beta_x) of length 2n.
PauliOperator observable_from_solution(const BitVector &solution);

/// Every violated pair condition, by name; empty when the pair is valid for `state`.
std::vector<std::string> pair_violations(const TableauState &state, const RewiringPair &pair);

/// Measures `measured` taking outcome +1. The generator equal (up to sign) to
/// `correction` is replaced by +measured; every other generator or logical h
/// anticommuting with `measured` becomes current_generator * h.
TableauState measurement_update(const TableauState &state, const PauliOperator &measured,
                           const PauliOperator &correction);

/// Measures with an explicit outcome. After the measurement-update bookkeeping the
/// stabilizer is outcome * measured; on outcome -1 the state is conjugated by
/// `correction` when `apply_correction` is set.
TableauState measure_step(const TableauState &state, const ScheduleStep &step, bool outcome_minus,
                          bool apply_correction = true);

/// The three steps (g, g_m), (g', g), (g_m, g') of an elementary rewiring on `state`.
std::array<ScheduleStep, 3> rewiring_steps(const TableauState &state, const RewiringPair &pair);

/// Canonical signed form of the group generated by `generators`: reduced row
/// echelon form over (x | z) with products tracked exactly.
std::vector<PauliOperator> canonical_group(const std::vector<PauliOperator> &generators);

/// Expresses each final logical over the initial logicals after reduction
/// modulo the signed stabilizer group. Throws InvariantError on leakage or an
/// imaginary phase.
LogicalAction extract_logical_action(const std::vector<LogicalPair> &initial, const std::vector<LogicalPair> &final,
                                     const std::vector<PauliOperator> &stabilizers);

struct RewiringResult {
    TableauState state;
    LogicalAction action;
};

/// Runs the three steps on the +1 path, checks that the signed stabilizer
/// group is restored, and extracts the induced action.
RewiringResult elementary_rewiring(const TableauState &state, const RewiringPair &pair);

/// Returns the pair, or the pair with g' negated, whichever induces exactly
/// `desired` on `qubit` (identity elsewhere). `desired` must be one of
/// S, Sdg, SX, SXdg, SY, SYdg, and the pair's action must be of its type.
RewiringPair fix_sign(const StabilizerCode &code, const RewiringPair &pair, GateKind desired, size_t qubit = 0);

struct BranchReport {
    bool consistent = true;
    size_t branches = 0;
    size_t agreeing = 0;
    std::vector<std::string> divergences;
    std::optional<LogicalAction> action;
};

struct BranchOptions {
    /// Step index (0..2) whose correction is skipped; a negative control only.
    std::optional<size_t> omit_correction_step;
};

/// Simulates all 8 outcome triples with explicit corrections and checks that
/// they agree on the final signed group and on the logical action.
BranchReport simulate_all_branches(const TableauState &state, const RewiringPair &pair,
                                   const BranchOptions &options = {});

/// Branch enumeration over an explicit three-step sequence, with actions
/// extracted relative to `state`'s logicals and groups compared to `state`'s.
BranchReport simulate_step_branches(const TableauState &state, const std::array<ScheduleStep, 3> &steps,
                                    const BranchOptions &options = {});

/// Runs an arbitrary step sequence with the given outcomes (bit i = outcome of
/// step i is -1). Missing outcome bits default to +1.
TableauState run_steps(const TableauState &state, const std::vector<ScheduleStep> &steps,
                       const std::vector<bool> &outcomes_minus = {});

}  // namespace rewire
