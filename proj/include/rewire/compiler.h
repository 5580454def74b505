#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rewire/code.h"
#include "rewire/engine.h"
#include "rewire/errors.h"
#include "rewire/logical_action.h"
#include "rewire/program.h"

namespace rewire {

/// Which generator an elementary rewiring replaces.
struct GmPolicy {
    enum class Kind { Last, Index, Gauge };
    Kind kind = Kind::Last;
    size_t index = 0;

    /// "last", "gauge", or a 0-based generator index.
    static GmPolicy parse(const std::string &text);
    std::string str() const;
};

struct CompileOptions {
    /// Both intermediate codes of every rewiring must reach this distance.
    std::optional<size_t> min_distance;
    GmPolicy gm;
    /// Maximum number of candidate observables examined per rewiring.
    size_t search_budget = 1 << 16;
    /// Weight cap for audit distances (raised to min_distance when that is larger).
    size_t audit_weight = 3;
};

/// Thrown when no candidate within budget meets min_distance.
struct DistanceConstraintError : SynthesisError {
    DistanceConstraintError(const std::string &what, size_t best_found, size_t examined)
        : SynthesisError(what), best_found(best_found), examined(examined) {
    }
    /// Largest guaranteed intermediate distance among examined candidates.
    size_t best_found;
    size_t examined;
};

struct GateLowering {
    std::vector<RewiringPair> pairs;
    std::vector<LogicalAction> pair_actions;
    /// Logical Pauli (k qubits) applied after the pairs.
    PauliOperator fixup;
};

/// Rewiring pair realizing `targets`, honouring the gm policy and distance bound.
RewiringPair synthesize_pair(const StabilizerCode &code, const CommutationTargets &targets,
                             const CompileOptions &options);

GateLowering compile_gate(const StabilizerCode &code, const Gate &gate, const CompileOptions &options = {});

/// Distance and CSS flag of the code in force after one step.
struct AuditEntry {
    std::vector<PauliOperator> generators;
    DistanceResult distance;
    bool css = false;

    bool operator==(const AuditEntry &other) const = default;
};

struct Schedule {
    std::string code_name;
    std::string code_hash;
    std::vector<ScheduleStep> steps;
    /// Physical representative of the trailing logical Pauli correction.
    PauliOperator pauli_fixup;
    LogicalAction claimed_action;
    std::vector<AuditEntry> audit;

    size_t num_rewirings() const {
        return steps.size() / 3;
    }
};

Schedule compile_program(const StabilizerCode &code, const GateProgram &program, const CompileOptions &options = {});

/// Physical operator for a logical Pauli: product of logical representatives, sign '+'.
PauliOperator physical_pauli(const StabilizerCode &code, const PauliOperator &logical);

/// Audit entries for each step of `steps` run from the code's tableau.
std::vector<AuditEntry> audit_steps(const StabilizerCode &code, const std::vector<ScheduleStep> &steps,
                                    size_t max_weight);

struct VerifyOptions {
    bool all_branches = false;
    bool audit = true;
    size_t audit_weight = 3;
};

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;
    std::vector<std::string> failures;
    std::optional<LogicalAction> recomputed;

    void fail(std::string message) {
        pass = false;
        failures.push_back(std::move(message));
    }
};

/// Independent re-check: structure of every triple, re-simulation, group
/// restoration, action, audit recomputation and the mixed-observable rule for
/// CSS codes. Throws CodeError when the schedule's code hash does not match.
Verdict verify_schedule(const StabilizerCode &code, const Schedule &schedule,
                        const std::optional<LogicalAction> &expected, const VerifyOptions &options = {});
Verdict verify_schedule(const StabilizerCode &code, const Schedule &schedule, const GateProgram &expected,
                        const VerifyOptions &options = {});

}  // namespace rewire
