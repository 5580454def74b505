#include "rewire/compiler.h"

#include <algorithm>
#include <map>

#include "rewire/code_io.h"

namespace rewire {

GmPolicy GmPolicy::parse(const std::string &text) {
    if (text == "last") {
        return {Kind::Last, 0};
    }
    if (text == "gauge") {
        return {Kind::Gauge, 0};
    }
    std::string digits = text.rfind("index:", 0) == 0 ? text.substr(6) : text;
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return {Kind::Index, std::stoul(digits)};
    }
    throw ParseError("unknown gm policy '" + text + "' (expected last, gauge or a generator index)");
}

std::string GmPolicy::str() const {
    switch (kind) {
        case Kind::Last:
            return "last";
        case Kind::Gauge:
            return "gauge";
        default:
            return std::to_string(index);
    }
}

namespace {

std::vector<size_t> candidate_generators(const StabilizerCode &code, const GmPolicy &policy) {
    size_t m = code.generators.size();
    switch (policy.kind) {
        case GmPolicy::Kind::Last:
            return {m - 1};
        case GmPolicy::Kind::Index:
            if (policy.index >= m) {
                throw SynthesisError("gm index " + std::to_string(policy.index) + " out of range for " +
                                     std::to_string(m) + " generators");
            }
            return {policy.index};
        case GmPolicy::Kind::Gauge:
            if (code.gauge_fixed.empty()) {
                throw SynthesisError("gm policy 'gauge' needs a code with gauge-fixing generators");
            }
            return code.gauge_fixed;
    }
    return {};
}

/// Distance of the code with generator m replaced by `op`, searched up to
/// weight bound - 1: returns the exact value when below `bound`, else `bound`.
size_t replaced_distance(const StabilizerCode &code, size_t m, const PauliOperator &op, size_t bound) {
    if (bound <= 1) {
        return bound;
    }
    std::vector<PauliOperator> gens = code.generators;
    gens[m] = op;
    DistanceResult r = min_nontrivial_weight(code.n, gens, gens, bound - 1);
    return r.exact ? r.value : bound;
}

std::string generators_key(const std::vector<PauliOperator> &gens) {
    std::string key;
    for (const auto &g : gens) {
        key += g.str();
        key.push_back(',');
    }
    return key;
}

}  // namespace

RewiringPair synthesize_pair(const StabilizerCode &code, const CommutationTargets &targets,
                             const CompileOptions &options) {
    if (code.generators.empty()) {
        throw SynthesisError("unsupported code: rewiring needs at least one stabilizer generator");
    }
    size_t bound = options.min_distance.value_or(0);
    size_t examined = 0;
    size_t best = 0;
    for (size_t m : candidate_generators(code, options.gm)) {
        AffineSolutionSpace alpha = find_first_observable(code, m);
        for (uint64_t a = 0; a < alpha.size(); a++) {
            if (examined >= options.search_budget) {
                break;
            }
            examined++;
            PauliOperator g = observable_from_solution(alpha.member(a));
            size_t d1 = replaced_distance(code, m, g, bound);
            if (d1 < bound) {
                best = std::max(best, d1);
                continue;
            }
            AffineSolutionSpace beta = find_second_observable(code, m, g, targets);
            for (uint64_t b = 0; b < beta.size(); b++) {
                if (examined >= options.search_budget) {
                    break;
                }
                examined++;
                PauliOperator g_prime = observable_from_solution(beta.member(b));
                size_t d2 = replaced_distance(code, m, g_prime, bound);
                if (d2 >= bound) {
                    RewiringPair pair{m, g, g_prime, targets};
                    auto violations = pair_violations(TableauState::from_code(code), pair);
                    if (!violations.empty()) {
                        throw InvariantError("solver produced an invalid pair: " + violations.front());
                    }
                    return pair;
                }
                best = std::max(best, std::min(d1, d2));
            }
        }
    }
    throw DistanceConstraintError("distance constraint unsatisfiable within budget: no rewiring pair with "
                                  "intermediate distance >= " +
                                      std::to_string(bound) + " among " + std::to_string(examined) +
                                      " candidates (best found " + std::to_string(best) + ")",
                                  best, examined);
}

GateLowering compile_gate(const StabilizerCode &code, const Gate &gate, const CompileOptions &options) {
    size_t k = code.num_logical();
    LogicalAction target = gate_action(gate, k);
    TableauState state = TableauState::from_code(code);
    GateLowering out;
    auto add = [&](const RewiringPair &pair) {
        out.pair_actions.push_back(elementary_rewiring(state, pair).action);
        out.pairs.push_back(pair);
    };
    auto square_root = [&](GateKind kind, size_t q) {
        bool a = kind == GateKind::S || kind == GateKind::Sdg || kind == GateKind::SY || kind == GateKind::SYdg;
        bool b = kind == GateKind::SX || kind == GateKind::SXdg || kind == GateKind::SY || kind == GateKind::SYdg;
        RewiringPair pair = synthesize_pair(code, CommutationTargets::on(k, q, a, b), options);
        return fix_sign(code, pair, kind, q);
    };

    switch (gate.kind) {
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::SX:
        case GateKind::SXdg:
        case GateKind::SY:
        case GateKind::SYdg:
            add(square_root(gate.kind, gate.qubit));
            break;
        case GateKind::H:
            add(synthesize_pair(code, CommutationTargets::on(k, gate.qubit, true, true), options));
            break;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            break;
        case GateKind::CNOT: {
            size_t c = gate.qubit;
            size_t t = gate.target;
            CommutationTargets targets = CommutationTargets::none(k);
            targets.a[c] = true;
            targets.b[t] = true;
            RewiringPair first = synthesize_pair(code, targets, options);
            LogicalAction first_action = elementary_rewiring(state, first).action;
            // Clean up with a sqrt(Z)-type rewiring on the control and a sqrt(X)-type
            // one on the target, choosing the variants that land exactly on CNOT.
            GateKind control_fix = GateKind::S;
            GateKind target_fix = GateKind::SX;
            bool exact = false;
            for (GateKind cf : {GateKind::S, GateKind::Sdg}) {
                for (GateKind tf : {GateKind::SX, GateKind::SXdg}) {
                    LogicalAction trial = first_action.then(gate_action({cf, c}, k)).then(gate_action({tf, t}, k));
                    if (!exact && trial == target) {
                        control_fix = cf;
                        target_fix = tf;
                        exact = true;
                    }
                }
            }
            add(first);
            add(square_root(control_fix, c));
            add(square_root(target_fix, t));
            break;
        }
    }
    LogicalAction total = LogicalAction::identity(k);
    for (const auto &a : out.pair_actions) {
        total = total.then(a);
    }
    auto fixup = pauli_correction(total, target);
    if (!fixup) {
        throw InvariantError("lowering of " + to_string(gate) + " has the wrong symplectic action " + total.str());
    }
    out.fixup = *fixup;
    return out;
}

PauliOperator physical_pauli(const StabilizerCode &code, const PauliOperator &logical) {
    PauliOperator acc(code.n);
    for (size_t j = 0; j < code.num_logical(); j++) {
        if (logical.x()[j]) {
            acc = acc * code.logicals[j].x;
        }
        if (logical.z()[j]) {
            acc = acc * code.logicals[j].z;
        }
    }
    return acc.positive();
}

std::vector<AuditEntry> audit_steps(const StabilizerCode &code, const std::vector<ScheduleStep> &steps,
                                    size_t max_weight) {
    std::map<std::string, DistanceResult> cache;
    std::vector<AuditEntry> out;
    TableauState current = TableauState::from_code(code);
    for (const auto &step : steps) {
        current = measurement_update(current, step.measure, step.correct_on_minus);
        AuditEntry entry;
        entry.generators = current.generators;
        std::string key = generators_key(canonical_group(current.generators));
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, min_nontrivial_weight(code.n, current.generators, current.generators, max_weight))
                     .first;
        }
        entry.distance = it->second;
        entry.css = std::all_of(current.generators.begin(), current.generators.end(),
                                [](const PauliOperator &g) { return g.is_css_type(); });
        out.push_back(std::move(entry));
    }
    return out;
}

Schedule compile_program(const StabilizerCode &code, const GateProgram &program, const CompileOptions &options) {
    ValidationReport report = validate(code);
    if (!report.ok()) {
        throw CodeError("cannot compile for an invalid code: " + report.str());
    }
    size_t k = code.num_logical();
    TableauState state = TableauState::from_code(code);
    Schedule schedule;
    schedule.code_name = code.name;
    schedule.code_hash = code_hash(code);
    LogicalAction total = LogicalAction::identity(k);
    for (const auto &gate : program.gates) {
        GateLowering lowering = compile_gate(code, gate, options);
        for (size_t i = 0; i < lowering.pairs.size(); i++) {
            for (const auto &step : rewiring_steps(state, lowering.pairs[i])) {
                schedule.steps.push_back(step);
            }
            total = total.then(lowering.pair_actions[i]);
        }
    }
    // Per-gate fix-ups commute to the end as one logical Pauli.
    LogicalAction target = program_action(program, k);
    auto fixup = pauli_correction(total, target);
    if (!fixup) {
        throw InvariantError("compiled rewirings do not realize the program's symplectic action");
    }
    schedule.pauli_fixup = physical_pauli(code, *fixup);
    schedule.claimed_action = total.then(LogicalAction::pauli_frame(*fixup));
    if (schedule.claimed_action != target) {
        throw InvariantError("fix-up absorption left residual signs");
    }
    size_t weight = std::max(options.audit_weight, options.min_distance.value_or(0));
    schedule.audit = audit_steps(code, schedule.steps, std::min(weight, code.n));
    return schedule;
}

Verdict verify_schedule(const StabilizerCode &code, const Schedule &schedule, const GateProgram &expected,
                        const VerifyOptions &options) {
    return verify_schedule(code, schedule, program_action(expected, code.num_logical()), options);
}

Verdict verify_schedule(const StabilizerCode &code, const Schedule &schedule,
                        const std::optional<LogicalAction> &expected, const VerifyOptions &options) {
    if (schedule.code_hash != code_hash(code)) {
        throw CodeError("schedule was compiled for code hash " + schedule.code_hash + " but the given code hashes to " +
                        code_hash(code));
    }
    Verdict verdict;
    const auto &steps = schedule.steps;
    if (steps.size() % 3 != 0) {
        verdict.fail("step count " + std::to_string(steps.size()) + " is not a multiple of three");
        return verdict;
    }
    const TableauState initial = TableauState::from_code(code);
    const auto initial_group = canonical_group(initial.generators);
    TableauState current = initial;
    bool css_code = code.is_css();
    bool simulated = true;
    for (size_t t = 0; t < steps.size() / 3; t++) {
        std::string where = "rewiring " + std::to_string(t) + " (steps " + std::to_string(3 * t) + "-" +
                            std::to_string(3 * t + 2) + ")";
        const ScheduleStep &s1 = steps[3 * t];
        const ScheduleStep &s2 = steps[3 * t + 1];
        const ScheduleStep &s3 = steps[3 * t + 2];
        if (!s2.correct_on_minus.same_support(s1.measure) || !s3.correct_on_minus.same_support(s2.measure) ||
            !s3.measure.same_support(s1.correct_on_minus)) {
            verdict.fail(where + ": steps do not form a measure g / g' / g_m triple");
        }
        size_t m = current.generators.size();
        for (size_t j = 0; j < current.generators.size(); j++) {
            if (current.generators[j].same_support(s1.correct_on_minus)) {
                m = j;
            }
        }
        if (m == current.generators.size()) {
            verdict.fail(where + ": step " + std::to_string(3 * t) + " corrects with a non-generator");
            simulated = false;
            break;
        }
        if (s3.measure != current.generators[m]) {
            verdict.fail(where + ": step " + std::to_string(3 * t + 2) + " measures " + s3.measure.str() +
                         " but the replaced generator is " + current.generators[m].str());
        }
        CommutationTargets targets = CommutationTargets::none(code.num_logical());
        for (size_t j = 0; j < code.num_logical(); j++) {
            targets.a[j] = anticommutes(s2.measure, initial.logicals[j].x);
            targets.b[j] = anticommutes(s2.measure, initial.logicals[j].z);
        }
        // Pairs are defined against the code's own logical representatives.
        RewiringPair pair{m, s1.measure, s2.measure, targets};
        for (const auto &v : pair_violations(TableauState{current.generators, initial.logicals}, pair)) {
            verdict.fail(where + ": " + v);
        }
        if (css_code && s1.measure.is_css_type() && s2.measure.is_css_type() && s3.measure.is_css_type()) {
            verdict.fail(where + ": CSS code but no measured observable has mixed X/Z support");
        }
        if (options.all_branches) {
            BranchReport br = simulate_step_branches(current, {s1, s2, s3});
            for (const auto &d : br.divergences) {
                verdict.fail(where + ": " + d);
            }
        }
        try {
            for (size_t i = 0; i < 3; i++) {
                try {
                    current = measure_step(current, steps[3 * t + i], false);
                } catch (const std::exception &e) {
                    throw SynthesisError("step " + std::to_string(3 * t + i) + ": " + e.what());
                }
            }
        } catch (const std::exception &e) {
            verdict.fail(where + ": " + e.what());
            simulated = false;
            break;
        }
        if (canonical_group(current.generators) != initial_group) {
            verdict.fail(where + ": signed stabilizer group not restored after step " + std::to_string(3 * t + 2));
            simulated = false;
            break;
        }
    }
    if (simulated) {
        for (auto &pair : current.logicals) {
            if (anticommutes(pair.x, schedule.pauli_fixup)) pair.x = pair.x.negated();
            if (anticommutes(pair.z, schedule.pauli_fixup)) pair.z = pair.z.negated();
        }
        try {
            LogicalAction action = extract_logical_action(initial.logicals, current.logicals, current.generators);
            verdict.recomputed = action;
            if (action != schedule.claimed_action) {
                verdict.fail("recomputed action " + action.str() + " differs from claimed " +
                             schedule.claimed_action.str());
            }
            if (expected && action != *expected) {
                verdict.fail("recomputed action " + action.str() + " differs from expected " + expected->str());
            }
        } catch (const std::exception &e) {
            verdict.fail(std::string("action extraction failed: ") + e.what());
        }
    }
    if (options.audit && simulated) {
        size_t weight = options.audit_weight;
        for (const auto &entry : schedule.audit) {
            if (!entry.distance.exact) {
                weight = std::max(weight, entry.distance.value - 1);
            } else {
                weight = std::max(weight, entry.distance.value);
            }
        }
        auto audit = audit_steps(code, steps, std::min(weight, code.n));
        if (!schedule.audit.empty() && schedule.audit.size() != audit.size()) {
            verdict.fail("audit has " + std::to_string(schedule.audit.size()) + " entries for " +
                         std::to_string(audit.size()) + " steps");
        } else if (!schedule.audit.empty()) {
            for (size_t i = 0; i < audit.size(); i++) {
                if (audit[i].generators != schedule.audit[i].generators) {
                    verdict.fail("step " + std::to_string(i) + ": intermediate generators differ from the audit");
                } else if (audit[i].distance != schedule.audit[i].distance) {
                    verdict.fail("step " + std::to_string(i) + ": audit distance " + schedule.audit[i].distance.str() +
                                 " recomputes as " + audit[i].distance.str());
                } else if (audit[i].css != schedule.audit[i].css) {
                    verdict.fail("step " + std::to_string(i) + ": audit CSS flag mismatch");
                }
            }
        }
        verdict.notes.push_back("audit recomputed for " + std::to_string(audit.size()) + " steps");
    }
    verdict.notes.push_back(std::to_string(steps.size() / 3) + " rewiring(s), " + std::to_string(steps.size()) +
                            " measurement(s)");
    return verdict;
}

}  // namespace rewire
