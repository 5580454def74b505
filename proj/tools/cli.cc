#include "cli.h"

#include <chrono>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rewire/catalog.h"
#include "rewire/code_io.h"
#include "rewire/compiler.h"
#include "rewire/dense.h"
#include "rewire/errors.h"
#include "rewire/schedule_io.h"

namespace rewire::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Machine-readable report; text mode prints `lines` instead.
struct Report {
    json doc;
    std::vector<std::string> lines;

    explicit Report(const std::string &command) {
        doc["command"] = command;
        doc["inputs"] = json::object();
        doc["verdicts"] = json::object();
        doc["timings"] = json::object();
        doc["artifacts"] = json::object();
    }
    void line(const std::string &text) {
        lines.push_back(text);
    }
    void emit(std::ostream &out, bool as_json) const {
        if (as_json) {
            out << doc.dump(2) << "\n";
        } else {
            for (const auto &l : lines) {
                out << l << "\n";
            }
        }
    }
};

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

AnyCode resolve_code(const std::string &name_or_path, bool check = true) {
    if (auto code = find_catalog_code(name_or_path)) {
        return *code;
    }
    return load_code_file(name_or_path, check);
}

json code_inputs(const AnyCode &code) {
    const StabilizerCode &base = base_of(code);
    return {{"name", base.name}, {"n", base.n}, {"hash", code_hash(base)}};
}

/// Tableau re-run of a schedule with fixed outcomes, then the Pauli fix-up.
std::optional<std::string> check_branch(const StabilizerCode &code, const Schedule &schedule,
                                        const std::vector<bool> &outcomes) {
    TableauState initial = TableauState::from_code(code);
    TableauState final = run_steps(initial, schedule.steps, outcomes);
    if (canonical_group(final.generators) != canonical_group(initial.generators)) {
        return std::string("signed stabilizer group not restored");
    }
    for (auto &pair : final.logicals) {
        if (anticommutes(pair.x, schedule.pauli_fixup)) pair.x = pair.x.negated();
        if (anticommutes(pair.z, schedule.pauli_fixup)) pair.z = pair.z.negated();
    }
    LogicalAction action = extract_logical_action(initial.logicals, final.logicals, final.generators);
    if (action != schedule.claimed_action) {
        return "action " + action.str() + " differs from claimed";
    }
    return std::nullopt;
}

std::string outcome_string(const std::vector<bool> &outcomes) {
    std::string s;
    for (bool b : outcomes) {
        s.push_back(b ? '-' : '+');
    }
    return s;
}

int cmd_codes_list(Report &report) {
    json entries = json::array();
    for (const auto &e : catalog_entries()) {
        std::string line = e.name + "  " + e.parameters + "  " + e.description;
        if (!e.aliases.empty()) {
            line += " (aliases:";
            for (const auto &a : e.aliases) {
                line += " " + a;
            }
            line += ")";
        }
        report.line(line);
        entries.push_back(
            {{"name", e.name}, {"parameters", e.parameters}, {"description", e.description}, {"aliases", e.aliases}});
    }
    report.doc["artifacts"]["codes"] = entries;
    return kOk;
}

int cmd_codes_show(Report &report, const std::string &name) {
    auto code = find_catalog_code(name);
    if (!code) {
        throw CodeError("unknown catalog code '" + name + "' (see 'codes list')");
    }
    json doc = code_to_json(*code);
    report.doc["inputs"]["name"] = name;
    report.doc["artifacts"]["code"] = doc;
    report.line(doc.dump(2));
    return kOk;
}

int cmd_validate(Report &report, const std::string &path) {
    AnyCode code = resolve_code(path, false);
    report.doc["inputs"]["code"] = code_inputs(code);
    ValidationReport v = std::visit([](const auto &c) { return validate(c); }, code);
    report.doc["verdicts"]["valid"] = v.ok();
    report.doc["verdicts"]["failures"] = v.failures;
    if (v.ok()) {
        report.line("valid: " + base_of(code).name);
        return kOk;
    }
    report.line("invalid: " + base_of(code).name);
    for (const auto &f : v.failures) {
        report.line("  " + f);
    }
    return kFailed;
}

struct SynthesizeArgs {
    std::string code;
    std::string program;
    std::optional<size_t> min_distance;
    std::string gm = "last";
    std::optional<size_t> budget;
    std::string out;
};

int cmd_synthesize(Report &report, const SynthesizeArgs &args) {
    AnyCode any = resolve_code(args.code);
    if (std::holds_alternative<SubsystemCode>(any)) {
        throw CodeError("'" + base_of(any).name + "' is a subsystem code; gauge-fix first (e.g. use qrm15)");
    }
    const StabilizerCode &code = std::get<StabilizerCode>(any);
    GateProgram program = parse_program(args.program, code.num_logical());
    CompileOptions options;
    options.min_distance = args.min_distance;
    options.gm = GmPolicy::parse(args.gm);
    if (args.budget) {
        options.search_budget = *args.budget;
    }
    report.doc["inputs"]["code"] = code_inputs(any);
    report.doc["inputs"]["program"] = to_string(program);
    report.doc["inputs"]["gm"] = options.gm.str();
    report.doc["inputs"]["min_distance"] = args.min_distance ? json(*args.min_distance) : json(nullptr);
    report.doc["inputs"]["budget"] = options.search_budget;

    Stopwatch compile_clock;
    Schedule schedule;
    try {
        schedule = compile_program(code, program, options);
    } catch (const DistanceConstraintError &e) {
        report.doc["timings"]["compile_s"] = compile_clock.seconds();
        report.doc["verdicts"]["synthesized"] = false;
        report.doc["verdicts"]["best_found"] = e.best_found;
        report.doc["verdicts"]["examined"] = e.examined;
        report.line(std::string("unsatisfiable: ") + e.what());
        report.line("best intermediate distance found: " + std::to_string(e.best_found));
        return kFailed;
    }
    report.doc["timings"]["compile_s"] = compile_clock.seconds();

    Stopwatch verify_clock;
    Verdict verdict = verify_schedule(code, schedule, program);
    report.doc["timings"]["verify_s"] = verify_clock.seconds();
    save_schedule_file(schedule, args.out);

    size_t min_audit = SIZE_MAX;
    for (const auto &a : schedule.audit) {
        min_audit = std::min(min_audit, a.distance.value);
    }
    report.doc["verdicts"]["synthesized"] = true;
    report.doc["verdicts"]["verified"] = verdict.pass;
    report.doc["verdicts"]["failures"] = verdict.failures;
    report.doc["verdicts"]["steps"] = schedule.steps.size();
    report.doc["verdicts"]["rewirings"] = schedule.num_rewirings();
    report.doc["verdicts"]["claimed_action"] = schedule.claimed_action.str();
    report.doc["verdicts"]["pauli_fixup"] = schedule.pauli_fixup.str();
    json audit = json::array();
    for (const auto &a : schedule.audit) {
        audit.push_back({{"distance", a.distance.str()}, {"css", a.css}});
    }
    report.doc["verdicts"]["audit"] = audit;
    report.doc["artifacts"]["schedule"] = args.out;

    report.line("program: " + to_string(program));
    report.line("steps: " + std::to_string(schedule.steps.size()) + " (" + std::to_string(schedule.num_rewirings()) +
                " rewiring(s))");
    for (size_t i = 0; i < schedule.steps.size(); i++) {
        const auto &s = schedule.steps[i];
        std::string line = "  " + std::to_string(i) + ": measure " + s.measure.str() + ", on -1 apply " +
                           s.correct_on_minus.str();
        if (i < schedule.audit.size()) {
            line += "  [distance " + schedule.audit[i].distance.str() + (schedule.audit[i].css ? ", css]" : ", non-css]");
        }
        report.line(line);
    }
    report.line("pauli fix-up: " + schedule.pauli_fixup.str());
    report.line("claimed action: " + schedule.claimed_action.str());
    if (!schedule.audit.empty()) {
        report.line("minimum audited distance: " + std::to_string(min_audit));
    }
    report.line(std::string("verification: ") + (verdict.pass ? "pass" : "FAIL"));
    for (const auto &f : verdict.failures) {
        report.line("  " + f);
    }
    report.line("wrote " + args.out);
    return verdict.pass ? kOk : kFailed;
}

struct SimulateArgs {
    std::string code;
    std::string schedule;
    std::vector<std::string> branches;
    bool oracle = false;
    std::optional<std::string> expect;
};

int cmd_simulate(Report &report, const SimulateArgs &args) {
    AnyCode any = resolve_code(args.code);
    if (std::holds_alternative<SubsystemCode>(any)) {
        throw CodeError("'" + base_of(any).name + "' is a subsystem code; schedules run on gauge-fixed codes");
    }
    const StabilizerCode &code = std::get<StabilizerCode>(any);
    Schedule schedule = load_schedule_file(args.schedule);
    report.doc["inputs"]["code"] = code_inputs(any);
    report.doc["inputs"]["schedule"] = {{"path", args.schedule},
                                        {"hash", fnv1a_hex(schedule_to_json(schedule).dump())}};

    bool all_branches = false;
    size_t samples = 0;
    if (!args.branches.empty()) {
        if (args.branches[0] == "all" && args.branches.size() == 1) {
            all_branches = true;
        } else if (args.branches[0] == "sample" && args.branches.size() == 2) {
            try {
                samples = std::stoul(args.branches[1]);
            } catch (const std::exception &) {
                throw ParseError("--branches sample needs a count, got '" + args.branches[1] + "'");
            }
        } else {
            throw ParseError("--branches expects 'all' or 'sample N'");
        }
    }
    std::optional<LogicalAction> expected;
    if (args.expect) {
        GateProgram program = parse_program(*args.expect, code.num_logical());
        expected = program_action(program, code.num_logical());
        report.doc["inputs"]["expect"] = to_string(program);
    }

    bool pass = true;
    Stopwatch verify_clock;
    VerifyOptions vopts;
    vopts.all_branches = all_branches;
    Verdict verdict = verify_schedule(code, schedule, expected, vopts);
    report.doc["timings"]["verify_s"] = verify_clock.seconds();
    pass = pass && verdict.pass;
    report.doc["verdicts"]["verified"] = verdict.pass;
    report.doc["verdicts"]["failures"] = verdict.failures;
    report.doc["verdicts"]["branches"] = all_branches ? "all" : (samples ? "sample" : "+1 path");
    if (verdict.recomputed) {
        report.doc["verdicts"]["recomputed_action"] = verdict.recomputed->str();
    }
    report.line("schedule: " + std::to_string(schedule.steps.size()) + " steps on " + code.name);
    report.line("claimed action: " + schedule.claimed_action.str());
    if (verdict.recomputed) {
        report.line("recomputed action: " + verdict.recomputed->str());
    }
    if (all_branches) {
        report.line("branches: all outcome triples checked per rewiring");
    }

    if (samples > 0) {
        Stopwatch clock;
        std::mt19937_64 rng(0);
        std::bernoulli_distribution coin(0.5);
        size_t agreeing = 0;
        json divergences = json::array();
        for (size_t t = 0; t < samples; t++) {
            std::vector<bool> outcomes(schedule.steps.size());
            for (size_t i = 0; i < outcomes.size(); i++) {
                outcomes[i] = coin(rng);
            }
            std::optional<std::string> problem;
            try {
                problem = check_branch(code, schedule, outcomes);
            } catch (const std::exception &e) {
                problem = e.what();
            }
            if (problem) {
                divergences.push_back(outcome_string(outcomes) + ": " + *problem);
            } else {
                agreeing++;
            }
        }
        report.doc["timings"]["sample_s"] = clock.seconds();
        report.doc["verdicts"]["sampled"] = samples;
        report.doc["verdicts"]["sampled_agreeing"] = agreeing;
        report.line("sampled branches: " + std::to_string(agreeing) + "/" + std::to_string(samples) + " agree");
        for (const auto &d : divergences) {
            report.line("  divergence " + d.get<std::string>());
        }
        pass = pass && agreeing == samples;
    }

    if (args.oracle) {
        if (code.n > kMaxDenseQubits) {
            throw DimensionError("--oracle supports at most " + std::to_string(kMaxDenseQubits) + " qubits");
        }
        Stopwatch clock;
        bool agree = true;
        std::string detail;
        try {
            OracleReport r = oracle_action(code, schedule.steps, schedule.pauli_fixup);
            agree = r.action == schedule.claimed_action;
            detail = r.action.str();
            for (size_t t = 0; agree && t < samples; t++) {
                OracleOptions opts;
                opts.sample_seed = t;
                agree = oracle_action(code, schedule.steps, schedule.pauli_fixup, opts).action == schedule.claimed_action;
            }
        } catch (const std::exception &e) {
            agree = false;
            detail = e.what();
        }
        report.doc["timings"]["oracle_s"] = clock.seconds();
        report.doc["verdicts"]["oracle_agrees"] = agree;
        report.doc["verdicts"]["oracle_action"] = detail;
        report.line(std::string("oracle/tableau agreement: ") + (agree ? "yes" : "NO") + " (" + detail + ")");
        pass = pass && agree;
    }
    for (const auto &f : verdict.failures) {
        report.line("  " + f);
    }
    report.doc["verdicts"]["pass"] = pass;
    report.line(std::string("verdict: ") + (pass ? "pass" : "FAIL"));
    return pass ? kOk : kFailed;
}

int cmd_distance(Report &report, const std::string &name_or_path, std::optional<size_t> max_weight) {
    AnyCode any = resolve_code(name_or_path);
    const StabilizerCode &base = base_of(any);
    size_t w = std::min(max_weight.value_or(base.n), base.n);
    report.doc["inputs"]["code"] = code_inputs(any);
    report.doc["inputs"]["max_weight"] = w;
    Stopwatch clock;
    DistanceResult d = std::visit([w](const auto &c) { return distance(c, w); }, any);
    report.doc["timings"]["distance_s"] = clock.seconds();
    report.doc["verdicts"]["distance"] = d.exact ? json{{"exact", d.value}} : json{{"at_least", d.value}};
    bool dressed = std::holds_alternative<SubsystemCode>(any);
    report.doc["verdicts"]["dressed"] = dressed;
    report.line(std::string(dressed ? "dressed distance: " : "distance: ") + d.str());
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Compile logical Clifford gates into measurement schedules and verify them", "rewire"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the report as JSON");

    auto *codes = app.add_subcommand("codes", "Built-in code catalog");
    codes->require_subcommand(1);
    auto *codes_list = codes->add_subcommand("list", "List catalog codes");
    auto *codes_show = codes->add_subcommand("show", "Print a catalog code as a code file");
    std::string show_name;
    codes_show->add_option("name", show_name, "Catalog name")->required();

    auto *validate_cmd = app.add_subcommand("validate", "Validate a code file");
    std::string validate_path;
    validate_cmd->add_option("--code", validate_path, "Code file")->required();

    auto *synth = app.add_subcommand("synthesize", "Compile a gate program to a schedule");
    SynthesizeArgs sargs;
    synth->add_option("--code", sargs.code, "Code file or catalog name")->required();
    synth->add_option("--program", sargs.program, "Gate program, e.g. \"H 0; CNOT 0 1\"")->required();
    synth->add_option("--min-distance", sargs.min_distance, "Required intermediate distance");
    synth->add_option("--gm", sargs.gm, "Replaced generator: last, gauge, or an index");
    synth->add_option("--budget", sargs.budget, "Candidate budget per rewiring");
    synth->add_option("--out", sargs.out, "Schedule output file")->required();

    auto *sim = app.add_subcommand("simulate", "Verify a schedule by re-simulation");
    SimulateArgs margs;
    sim->add_option("--code", margs.code, "Code file or catalog name")->required();
    sim->add_option("--schedule", margs.schedule, "Schedule file")->required();
    sim->add_option("--branches", margs.branches, "all | sample N")->expected(1, 2);
    sim->add_flag("--oracle", margs.oracle, "Cross-check with the state-vector oracle");
    sim->add_option("--expect", margs.expect, "Expected gate program");

    auto *dist = app.add_subcommand("distance", "Brute-force code distance");
    std::string dist_code;
    std::optional<size_t> max_weight;
    dist->add_option("--code", dist_code, "Code file or catalog name")->required();
    dist->add_option("--max-weight", max_weight, "Largest weight enumerated");

    for (auto *sub : {codes_list, codes_show, validate_cmd, synth, sim, dist}) {
        sub->add_flag("--json", as_json, "Emit the report as JSON");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    std::string command;
    for (auto *sub : app.get_subcommands()) {
        command = sub->get_name();
        for (auto *inner : sub->get_subcommands()) {
            command += " " + inner->get_name();
        }
    }
    Report report(command);
    int rc = kOk;
    try {
        if (codes_list->parsed()) {
            rc = cmd_codes_list(report);
        } else if (codes_show->parsed()) {
            rc = cmd_codes_show(report, show_name);
        } else if (validate_cmd->parsed()) {
            rc = cmd_validate(report, validate_path);
        } else if (synth->parsed()) {
            rc = cmd_synthesize(report, sargs);
        } else if (sim->parsed()) {
            rc = cmd_simulate(report, margs);
        } else if (dist->parsed()) {
            rc = cmd_distance(report, dist_code, max_weight);
        }
    } catch (const CodeError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SynthesisError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    report.emit(out, as_json);
    return rc;
}

}  // namespace rewire::cli
