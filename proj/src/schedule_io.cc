#include "rewire/schedule_io.h"

#include <fstream>

#include "rewire/errors.h"

namespace rewire {

using nlohmann::json;

namespace {

const json &field(const json &doc, const char *name, const std::string &where) {
    if (!doc.is_object() || !doc.contains(name)) {
        throw CodeError("schema error: missing field '" + std::string(name) + "' in " + where);
    }
    return doc.at(name);
}

PauliOperator pauli_field(const json &doc, const char *name, const std::string &where) {
    const json &v = field(doc, name, where);
    if (!v.is_string()) {
        throw CodeError("schema error: " + where + "." + name + " must be a Pauli string");
    }
    try {
        return PauliOperator::parse(v.get<std::string>());
    } catch (const ParseError &e) {
        throw CodeError("invalid Pauli string in " + where + "." + name + ": " + e.what());
    }
}

}  // namespace

json action_to_json(const LogicalAction &action) {
    GF2Matrix a = action.symplectic();
    json rows = json::array();
    for (size_t r = 0; r < a.rows(); r++) {
        json row = json::array();
        for (size_t c = 0; c < a.cols(); c++) {
            row.push_back(a.get(r, c) ? 1 : 0);
        }
        rows.push_back(row);
    }
    json signs = json::array();
    BitVector s = action.signs();
    for (size_t i = 0; i < s.size(); i++) {
        signs.push_back(s[i] ? 1 : 0);
    }
    return {{"symplectic", rows}, {"signs", signs}};
}

LogicalAction action_from_json(const json &doc) {
    const json &rows = field(doc, "symplectic", "claimed_action");
    const json &signs = field(doc, "signs", "claimed_action");
    if (!rows.is_array() || !signs.is_array() || rows.size() != signs.size() || rows.size() % 2 != 0) {
        throw CodeError("schema error: claimed_action needs a 2k x 2k 'symplectic' matrix and 2k 'signs'");
    }
    size_t dim = rows.size();
    GF2Matrix a(dim, dim);
    BitVector s(dim);
    for (size_t r = 0; r < dim; r++) {
        if (!rows[r].is_array() || rows[r].size() != dim) {
            throw CodeError("schema error: claimed_action.symplectic row " + std::to_string(r) + " has wrong length");
        }
        for (size_t c = 0; c < dim; c++) {
            if (!rows[r][c].is_number_integer()) {
                throw CodeError("schema error: claimed_action.symplectic entries must be 0 or 1");
            }
            a.set(r, c, rows[r][c].get<int>() & 1);
        }
        if (!signs[r].is_number_integer()) {
            throw CodeError("schema error: claimed_action.signs entries must be 0 or 1");
        }
        s.set(r, signs[r].get<int>() & 1);
    }
    try {
        return LogicalAction::from_symplectic(a, s);
    } catch (const std::exception &e) {
        throw CodeError(std::string("invalid claimed_action: ") + e.what());
    }
}

json schedule_to_json(const Schedule &schedule) {
    json doc;
    doc["code"] = {{"name", schedule.code_name}, {"hash", schedule.code_hash}};
    json steps = json::array();
    for (const auto &s : schedule.steps) {
        steps.push_back({{"measure", s.measure.str()}, {"correct_on_minus", s.correct_on_minus.str()}});
    }
    doc["steps"] = steps;
    doc["pauli_fixup"] = schedule.pauli_fixup.str();
    doc["claimed_action"] = action_to_json(schedule.claimed_action);
    json audit = json::array();
    for (const auto &e : schedule.audit) {
        json gens = json::array();
        for (const auto &g : e.generators) {
            gens.push_back(g.str());
        }
        json dist = {{e.distance.exact ? "exact" : "at_least", e.distance.value}};
        audit.push_back({{"generators", gens}, {"distance", dist}, {"css", e.css}});
    }
    doc["audit"] = audit;
    return doc;
}

Schedule schedule_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw CodeError("schema error: schedule document must be a JSON object");
    }
    Schedule s;
    const json &code = field(doc, "code", "schedule");
    if (!field(code, "name", "code").is_string() || !field(code, "hash", "code").is_string()) {
        throw CodeError("schema error: code.name and code.hash must be strings");
    }
    s.code_name = code.at("name").get<std::string>();
    s.code_hash = code.at("hash").get<std::string>();
    const json &steps = field(doc, "steps", "schedule");
    if (!steps.is_array()) {
        throw CodeError("schema error: 'steps' must be an array");
    }
    for (size_t i = 0; i < steps.size(); i++) {
        std::string where = "steps[" + std::to_string(i) + "]";
        s.steps.push_back({pauli_field(steps[i], "measure", where), pauli_field(steps[i], "correct_on_minus", where)});
    }
    s.pauli_fixup = pauli_field(doc, "pauli_fixup", "schedule");
    s.claimed_action = action_from_json(field(doc, "claimed_action", "schedule"));
    if (doc.contains("audit")) {
        const json &audit = doc.at("audit");
        if (!audit.is_array()) {
            throw CodeError("schema error: 'audit' must be an array");
        }
        for (size_t i = 0; i < audit.size(); i++) {
            std::string where = "audit[" + std::to_string(i) + "]";
            AuditEntry e;
            const json &gens = field(audit[i], "generators", where);
            if (!gens.is_array()) {
                throw CodeError("schema error: " + where + ".generators must be an array");
            }
            for (size_t j = 0; j < gens.size(); j++) {
                if (!gens[j].is_string()) {
                    throw CodeError("schema error: " + where + ".generators entries must be strings");
                }
                try {
                    e.generators.push_back(PauliOperator::parse(gens[j].get<std::string>()));
                } catch (const ParseError &err) {
                    throw CodeError("invalid Pauli string in " + where + ".generators[" + std::to_string(j) +
                                    "]: " + err.what());
                }
            }
            const json &dist = field(audit[i], "distance", where);
            if (dist.contains("exact") && dist.at("exact").is_number_unsigned()) {
                e.distance = {dist.at("exact").get<size_t>(), true};
            } else if (dist.contains("at_least") && dist.at("at_least").is_number_unsigned()) {
                e.distance = {dist.at("at_least").get<size_t>(), false};
            } else {
                throw CodeError("schema error: " + where + ".distance must be {\"exact\": n} or {\"at_least\": n}");
            }
            const json &css = field(audit[i], "css", where);
            if (!css.is_boolean()) {
                throw CodeError("schema error: " + where + ".css must be a boolean");
            }
            e.css = css.get<bool>();
            s.audit.push_back(std::move(e));
        }
    }
    if (!s.steps.empty()) {
        size_t n = s.steps[0].measure.num_qubits();
        for (const auto &st : s.steps) {
            if (st.measure.num_qubits() != n || st.correct_on_minus.num_qubits() != n) {
                throw CodeError("schema error: steps act on different numbers of qubits");
            }
        }
    }
    return s;
}

Schedule load_schedule_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CodeError("cannot open schedule file '" + path + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw CodeError("malformed JSON in '" + path + "': " + e.what());
    }
    return schedule_from_json(doc);
}

void save_schedule_file(const Schedule &schedule, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw CodeError("cannot write schedule file '" + path + "'");
    }
    out << schedule_to_json(schedule).dump(2) << "\n";
}

}  // namespace rewire
