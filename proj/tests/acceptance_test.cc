// Acceptance checks: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "rewire/catalog.h"
#include "rewire/compiler.h"
#include "rewire/dense.h"
#include "rewire/engine.h"

using namespace rewire;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) detail = why;
        pass = false;
    }
};

/// Schedules and codes produced by criteria 1-4, reused by 5 and 6.
struct Corpus {
    std::vector<std::pair<StabilizerCode, Schedule>> schedules;
    size_t upto_criterion3 = 0;
};

Schedule single_pair_schedule(const StabilizerCode &code, const RewiringPair &pair) {
    TableauState s = TableauState::from_code(code);
    auto steps = rewiring_steps(s, pair);
    Schedule out;
    out.code_name = code.name;
    out.steps = {steps.begin(), steps.end()};
    out.pauli_fixup = PauliOperator(code.n);
    out.claimed_action = elementary_rewiring(s, pair).action;
    return out;
}

Outcome rewiring_types(Corpus &corpus) {
    Outcome o;
    const RewiringType expected[2][2] = {{RewiringType::Identity, RewiringType::SqrtX},
                                         {RewiringType::SqrtZ, RewiringType::SqrtY}};
    size_t rows = 0;
    for (const auto &code : {toy2_code(), five_qubit_code(), steane_code()}) {
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                RewiringPair pair = synthesize_pair(code, CommutationTargets::on(1, 0, a, b), {});
                LogicalAction act = elementary_rewiring(TableauState::from_code(code), pair).action;
                if (classify(act) != expected[a][b]) {
                    o.fail(code.name + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ") gave " +
                           to_string(classify(act)));
                }
                corpus.schedules.emplace_back(code, single_pair_schedule(code, pair));
                rows++;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(rows) + " rows match";
    return o;
}

Outcome exact_roots(Corpus &corpus) {
    Outcome o;
    StabilizerCode code = five_qubit_code();
    size_t checked = 0;
    for (GateKind kind : {GateKind::SX, GateKind::SXdg, GateKind::SY, GateKind::SYdg, GateKind::S, GateKind::Sdg}) {
        bool a = kind == GateKind::S || kind == GateKind::Sdg || kind == GateKind::SY || kind == GateKind::SYdg;
        bool b = kind == GateKind::SX || kind == GateKind::SXdg || kind == GateKind::SY || kind == GateKind::SYdg;
        RewiringPair pair = synthesize_pair(code, CommutationTargets::on(1, 0, a, b), {});
        RewiringPair fixed = fix_sign(code, pair, kind);
        Schedule s = single_pair_schedule(code, fixed);
        LogicalAction oracle = oracle_action(code, s.steps, s.pauli_fixup).action;
        if (oracle != gate_action({kind, 0}, 1)) {
            o.fail(std::string(gate_name(kind)) + ": oracle gives " + oracle.str());
        }
        corpus.schedules.emplace_back(code, s);
        checked++;
    }
    if (o.pass) o.detail = std::to_string(checked) + " exact roots certified by state vector";
    return o;
}

Outcome clifford_generation(Corpus &corpus) {
    Outcome o;
    StabilizerCode ff4 = four_two_two_code();
    std::vector<GateProgram> programs;
    for (const char *text : {"H 0", "S 0", "CNOT 0 1", "CNOT 1 0"}) programs.push_back(parse_program(text, 2));
    std::mt19937_64 rng(2024);
    while (programs.size() < 54) {
        GateProgram p;
        size_t len = 1 + rng() % 6;
        while (p.gates.size() < len) {
            GateKind kind = static_cast<GateKind>(rng() % 11);
            size_t q = rng() % 2;
            p.gates.push_back({kind, q, kind == GateKind::CNOT ? 1 - q : 0});
        }
        programs.push_back(p);
    }
    for (const auto &p : programs) {
        Schedule s = compile_program(ff4, p);
        LogicalAction target = program_action(p, 2);
        Verdict v = verify_schedule(ff4, s, p);
        LogicalAction oracle = oracle_action(ff4, s.steps, s.pauli_fixup).action;
        if (!v.pass) o.fail(to_string(p) + ": " + v.failures.front());
        if (oracle != s.claimed_action || s.claimed_action != target) {
            o.fail(to_string(p) + ": oracle " + oracle.str() + " vs claimed " + s.claimed_action.str());
        }
        corpus.schedules.emplace_back(ff4, s);
    }
    corpus.upto_criterion3 = corpus.schedules.size();
    if (o.pass) o.detail = std::to_string(programs.size()) + " programs, oracle = claimed = target";
    return o;
}

Outcome qrm_headline(Corpus &corpus) {
    Outcome o;
    StabilizerCode qrm = qrm15_code();
    CompileOptions options;
    options.min_distance = 3;
    options.gm = GmPolicy::parse("gauge");
    Schedule s = compile_program(qrm, parse_program("SY 0"), options);
    if (s.steps.size() != 3) o.fail(std::to_string(s.steps.size()) + " measurement steps");
    if (classify(s.claimed_action) != RewiringType::SqrtY) o.fail("action is not of sqrt(Y) type");
    size_t m = qrm.generators.size();
    for (size_t j = 0; j < qrm.generators.size(); j++)
        if (qrm.generators[j].same_support(s.steps[0].correct_on_minus)) m = j;
    bool gauge = std::find(qrm.gauge_fixed.begin(), qrm.gauge_fixed.end(), m) != qrm.gauge_fixed.end();
    if (!gauge) o.fail("replaced generator is not a gauge-fixing generator");
    std::vector<std::string> dists;
    for (const PauliOperator &obs : {s.steps[0].measure, s.steps[1].measure}) {
        StabilizerCode inter = qrm;
        inter.generators[m] = obs;
        DistanceResult d = distance(inter, 3);
        dists.push_back(d.str());
        if (!d.at_least(3)) o.fail("intermediate code distance " + d.str());
    }
    if (!verify_schedule(qrm, s, parse_program("SY 0")).pass) o.fail("verification failed");
    corpus.schedules.emplace_back(qrm, s);
    if (o.pass) o.detail = "3 steps, intermediate distances " + dists[0] + ", " + dists[1];
    return o;
}

Outcome outcome_independence(const Corpus &corpus) {
    Outcome o;
    size_t triples = 0, trials = 0;
    for (size_t i = 0; i < corpus.upto_criterion3; i++) {
        const auto &[code, s] = corpus.schedules[i];
        TableauState state = TableauState::from_code(code);
        for (size_t t = 0; t < s.num_rewirings(); t++) {
            std::array<ScheduleStep, 3> triple = {s.steps[3 * t], s.steps[3 * t + 1], s.steps[3 * t + 2]};
            BranchReport r = simulate_step_branches(state, triple);
            if (!r.consistent || r.agreeing != 8) o.fail(code.name + ": " + r.divergences.front());
            state = run_steps(state, {triple.begin(), triple.end()});
            triples++;
        }
        if (code.n > 7) continue;
        for (uint64_t seed = 0; seed < 100; seed++) {
            OracleOptions opts;
            opts.sample_seed = seed * 7919 + i;
            opts.closed_form_check = seed < 10;
            if (oracle_action(code, s.steps, s.pauli_fixup, opts).action != s.claimed_action) {
                o.fail(code.name + ": sampled trial " + std::to_string(seed) + " disagrees");
            }
            trials++;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(triples) + " triples x 8 branches, " + std::to_string(trials) + " dense trials";
    }
    return o;
}

Outcome non_css(const Corpus &corpus) {
    Outcome o;
    size_t triples = 0;
    for (const auto &[code, s] : corpus.schedules) {
        if (!code.is_css()) continue;
        for (size_t t = 0; t < s.num_rewirings(); t++) {
            bool mixed = false;
            for (size_t i = 3 * t; i < 3 * t + 3; i++) mixed = mixed || !s.steps[i].measure.is_css_type();
            if (!mixed) o.fail(code.name + ": triple " + std::to_string(t) + " has only CSS-type observables");
            triples++;
        }
    }
    if (o.pass) o.detail = std::to_string(triples) + " triples on CSS codes, each with a mixed observable";
    return o;
}

Outcome catalog_distances() {
    Outcome o;
    struct Row {
        std::string name;
        DistanceResult got;
        size_t want;
    };
    std::vector<Row> rows = {
        {"[[4,2,2]]", distance(four_two_two_code(), 4), 2}, {"[[5,1,3]]", distance(five_qubit_code(), 5), 3},
        {"steane", distance(steane_code(), 7), 3},          {"qrm15", distance(qrm15_code(), 3), 3},
        {"qrm15-parent (dressed)", distance(qrm15_parent_code(), 3), 3},
    };
    std::ostringstream detail;
    for (const auto &r : rows) {
        if (!r.got.exact || r.got.value != r.want) o.fail(r.name + " gave " + r.got.str());
        detail << r.name << "=" << r.got.str() << " ";
    }
    if (o.pass) o.detail = detail.str();
    return o;
}

Outcome restoration_and_symplecticity() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::vector<StabilizerCode> codes = {toy2_code(), four_two_two_code(), five_qubit_code(), steane_code(),
                                         qrm15_code()};
    const size_t runs = 600;
    for (size_t t = 0; t < runs; t++) {
        const StabilizerCode &code = codes[rng() % codes.size()];
        size_t k = code.num_logical();
        size_t m = rng() % code.generators.size();
        AffineSolutionSpace alpha = find_first_observable(code, m);
        PauliOperator g = observable_from_solution(alpha.member(rng() % alpha.size()));
        CommutationTargets targets = CommutationTargets::none(k);
        for (size_t j = 0; j < k; j++) {
            targets.a[j] = rng() & 1;
            targets.b[j] = rng() & 1;
        }
        AffineSolutionSpace beta = find_second_observable(code, m, g, targets);
        RewiringPair pair{m, g, observable_from_solution(beta.member(rng() % beta.size())), targets};
        TableauState s = TableauState::from_code(code);
        if (!pair_violations(s, pair).empty()) {
            o.fail(code.name + ": " + pair_violations(s, pair).front());
            continue;
        }
        RewiringResult r = elementary_rewiring(s, pair);
        if (canonical_group(r.state.generators) != canonical_group(s.generators)) o.fail(code.name + ": group");
        if (!r.action.is_symplectic()) o.fail(code.name + ": non-symplectic " + r.action.str());
    }
    if (o.pass) o.detail = std::to_string(runs) + " randomized syntheses";
    return o;
}

}  // namespace

int main() {
    Corpus corpus;
    struct Criterion {
        int id;
        std::string name;
        double limit;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "(a,b) selects the rewiring type on toy2, [[5,1,3]], Steane", 1, [&] { return rewiring_types(corpus); }},
        {2, "exact square roots on [[5,1,3]]", 1, [&] { return exact_roots(corpus); }},
        {3, "full Clifford generation on [[4,2,2]]", 10, [&] { return clifford_generation(corpus); }},
        {4, "QRM(4) sqrt(Y)-type in 3 measurements at distance 3", 30, [&] { return qrm_headline(corpus); }},
        {5, "outcome independence", 30, [&] { return outcome_independence(corpus); }},
        {6, "mixed observable in every CSS rewiring", 1e9, [&] { return non_css(corpus); }},
        {7, "catalog distances", 60, [] { return catalog_distances(); }},
        {8, "group restoration and symplecticity", 60, [] { return restoration_and_symplecticity(); }},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.limit) o.fail("took " + std::to_string(secs) + " s");
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed
             << std::setprecision(3) << secs << " s";
        if (c.limit < 1e8) line << ", limit " << std::setprecision(0) << c.limit << " s";
        line << "): " << o.detail;
        std::cout << line.str() << "\n";
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
