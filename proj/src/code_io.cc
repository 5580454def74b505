#include "rewire/code_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rewire/errors.h"

namespace rewire {

using nlohmann::json;

namespace {

json pauli_list(const std::vector<PauliOperator> &ops) {
    json arr = json::array();
    for (const auto &p : ops) {
        arr.push_back(p.str());
    }
    return arr;
}

json base_json(const StabilizerCode &code) {
    json doc;
    doc["name"] = code.name;
    doc["n"] = code.n;
    doc["stabilizers"] = pauli_list(code.generators);
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (const auto &l : code.logicals) {
        xs.push_back(l.x);
        zs.push_back(l.z);
    }
    doc["logical_x"] = pauli_list(xs);
    doc["logical_z"] = pauli_list(zs);
    if (!code.gauge_fixed.empty()) {
        doc["gauge_fixed"] = code.gauge_fixed;
    }
    return doc;
}

std::vector<PauliOperator> read_paulis(const json &doc, const char *field, size_t n, bool required) {
    if (!doc.contains(field)) {
        if (required) {
            throw CodeError(std::string("schema error: missing field '") + field + "'");
        }
        return {};
    }
    const json &arr = doc.at(field);
    if (!arr.is_array()) {
        throw CodeError(std::string("schema error: field '") + field + "' must be an array of Pauli strings");
    }
    std::vector<PauliOperator> out;
    for (size_t i = 0; i < arr.size(); i++) {
        if (!arr[i].is_string()) {
            throw CodeError(std::string("schema error: ") + field + "[" + std::to_string(i) + "] is not a string");
        }
        try {
            out.push_back(PauliOperator::parse(arr[i].get<std::string>()));
        } catch (const ParseError &e) {
            throw CodeError(std::string("invalid Pauli string in ") + field + "[" + std::to_string(i) +
                            "]: " + e.what());
        }
        if (out.back().num_qubits() != n) {
            throw CodeError(std::string("schema error: ") + field + "[" + std::to_string(i) + "] has " +
                            std::to_string(out.back().num_qubits()) + " qubits, expected n = " + std::to_string(n));
        }
    }
    return out;
}

std::vector<LogicalPair> zip_pairs(std::vector<PauliOperator> xs, std::vector<PauliOperator> zs, const char *what) {
    if (xs.size() != zs.size()) {
        throw CodeError(std::string("schema error: ") + what + "_x and " + what + "_z have different lengths (" +
                        std::to_string(xs.size()) + " vs " + std::to_string(zs.size()) + ")");
    }
    std::vector<LogicalPair> out;
    for (size_t i = 0; i < xs.size(); i++) {
        out.push_back({std::move(xs[i]), std::move(zs[i])});
    }
    return out;
}

}  // namespace

json code_to_json(const StabilizerCode &code) {
    return base_json(code);
}

json code_to_json(const SubsystemCode &code) {
    json doc = base_json(code.base);
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (const auto &g : code.gauge_pairs) {
        xs.push_back(g.x);
        zs.push_back(g.z);
    }
    doc["gauge_x"] = pauli_list(xs);
    doc["gauge_z"] = pauli_list(zs);
    return doc;
}

json code_to_json(const AnyCode &code) {
    return std::visit([](const auto &c) { return code_to_json(c); }, code);
}

AnyCode code_from_json(const json &doc, bool check) {
    if (!doc.is_object()) {
        throw CodeError("schema error: code document must be a JSON object");
    }
    if (!doc.contains("n") || !doc.at("n").is_number_unsigned()) {
        throw CodeError("schema error: missing or non-integer field 'n'");
    }
    StabilizerCode base;
    base.n = doc.at("n").get<size_t>();
    if (base.n == 0) {
        throw CodeError("schema error: 'n' must be positive");
    }
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) {
            throw CodeError("schema error: 'name' must be a string");
        }
        base.name = doc.at("name").get<std::string>();
    }
    base.generators = read_paulis(doc, "stabilizers", base.n, true);
    base.logicals = zip_pairs(read_paulis(doc, "logical_x", base.n, true),
                              read_paulis(doc, "logical_z", base.n, true), "logical");
    if (doc.contains("gauge_fixed")) {
        const json &gf = doc.at("gauge_fixed");
        if (!gf.is_array()) {
            throw CodeError("schema error: 'gauge_fixed' must be an array of generator indices");
        }
        for (const auto &v : gf) {
            if (!v.is_number_unsigned()) {
                throw CodeError("schema error: 'gauge_fixed' entries must be non-negative integers");
            }
            base.gauge_fixed.push_back(v.get<size_t>());
        }
    }
    bool has_gauge = doc.contains("gauge_x") || doc.contains("gauge_z");
    AnyCode out;
    if (has_gauge) {
        SubsystemCode sub;
        sub.gauge_pairs = zip_pairs(read_paulis(doc, "gauge_x", base.n, true),
                                    read_paulis(doc, "gauge_z", base.n, true), "gauge");
        sub.base = std::move(base);
        out = std::move(sub);
    } else {
        out = std::move(base);
    }
    if (check) {
        ValidationReport report = std::visit([](const auto &c) { return validate(c); }, out);
        if (!report.ok()) {
            throw CodeError("validation failed: " + report.str());
        }
    }
    return out;
}

AnyCode load_code_file(const std::string &path, bool check) {
    std::ifstream in(path);
    if (!in) {
        throw CodeError("cannot open code file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw CodeError("malformed JSON in '" + path + "': " + e.what());
    }
    return code_from_json(doc, check);
}

void save_code_file(const AnyCode &code, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw CodeError("cannot write code file '" + path + "'");
    }
    out << code_to_json(code).dump(2) << "\n";
}

std::string fnv1a_hex(const std::string &bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string code_hash(const StabilizerCode &code) {
    return fnv1a_hex(code_to_json(code).dump());
}

const StabilizerCode &base_of(const AnyCode &code) {
    if (const auto *s = std::get_if<StabilizerCode>(&code)) {
        return *s;
    }
    return std::get<SubsystemCode>(code).base;
}

}  // namespace rewire
