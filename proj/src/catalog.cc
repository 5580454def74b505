#include "rewire/catalog.h"

#include "rewire/errors.h"

namespace rewire {

namespace {

LogicalPair pair_of(const char *x, const char *z) {
    return {PauliOperator::parse(x), PauliOperator::parse(z)};
}

PauliOperator typed_on(size_t n, const BitVector &support, char letter) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        if (support[q]) {
            p = p * PauliOperator::single(n, q, letter);
        }
    }
    return p;
}

// Reed-Muller layout: qubit q carries the nonzero 4-bit label v = q + 1.
constexpr size_t kRmQubits = 15;

BitVector rm_support(std::initializer_list<size_t> bits) {
    BitVector s(kRmQubits);
    for (size_t q = 0; q < kRmQubits; q++) {
        size_t v = q + 1;
        bool all = true;
        for (size_t b : bits) {
            all &= ((v >> b) & 1) != 0;
        }
        s.set(q, all);
    }
    return s;
}

std::vector<std::pair<size_t, size_t>> rm_gauge_indices() {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = i + 1; j < 4; j++) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

StabilizerCode rm_shared_base() {
    StabilizerCode code;
    code.n = kRmQubits;
    for (size_t b = 0; b < 4; b++) {
        code.generators.push_back(typed_on(kRmQubits, rm_support({b}), 'X'));
    }
    for (size_t b = 0; b < 4; b++) {
        code.generators.push_back(typed_on(kRmQubits, rm_support({b}), 'Z'));
    }
    BitVector all(kRmQubits);
    for (size_t q = 0; q < kRmQubits; q++) {
        all.set(q, true);
    }
    code.logicals.push_back({typed_on(kRmQubits, all, 'X'), typed_on(kRmQubits, all, 'Z')});
    return code;
}

}  // namespace

StabilizerCode toy2_code() {
    StabilizerCode code;
    code.name = "toy2";
    code.n = 2;
    code.generators = {PauliOperator::parse("+ZZ")};
    code.logicals = {pair_of("+XX", "+ZI")};
    return code;
}

StabilizerCode four_two_two_code() {
    StabilizerCode code;
    code.name = "ff4";
    code.n = 4;
    code.generators = {PauliOperator::parse("+XXXX"), PauliOperator::parse("+ZZZZ")};
    code.logicals = {pair_of("+XXII", "+ZIZI"), pair_of("+XIXI", "+ZZII")};
    return code;
}

StabilizerCode five_qubit_code() {
    StabilizerCode code;
    code.name = "perfect5";
    code.n = 5;
    for (const char *g : {"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"}) {
        code.generators.push_back(PauliOperator::parse(g));
    }
    code.logicals = {pair_of("+XXXXX", "+ZZZZZ")};
    return code;
}

StabilizerCode steane_code() {
    StabilizerCode code;
    code.name = "steane";
    code.n = 7;
    // Parity checks of the [7,4] Hamming code, column q holding the binary form of q + 1.
    const char *checks[] = {"0001111", "0110011", "1010101"};
    for (char letter : {'X', 'Z'}) {
        for (const char *row : checks) {
            code.generators.push_back(typed_on(7, BitVector::from_string(row), letter));
        }
    }
    code.logicals = {pair_of("+XXXXXXX", "+ZZZZZZZ")};
    return code;
}

SubsystemCode qrm15_parent_code() {
    SubsystemCode parent;
    parent.base = rm_shared_base();
    parent.base.name = "qrm15-parent";

    // Gauge Z operators live on the weight-4 sets {v : v_i = v_j = 1}. Each X
    // partner is the first solution of: even overlap with every weight-8 set
    // and with the full set, odd overlap with its own gauge Z set only.
    auto gauges = rm_gauge_indices();
    std::vector<BitVector> constraint_rows;
    for (size_t b = 0; b < 4; b++) {
        constraint_rows.push_back(rm_support({b}));
    }
    BitVector all(kRmQubits);
    for (size_t q = 0; q < kRmQubits; q++) {
        all.set(q, true);
    }
    constraint_rows.push_back(all);
    for (auto [i, j] : gauges) {
        constraint_rows.push_back(rm_support({i, j}));
    }
    GF2Matrix constraints = GF2Matrix::from_rows(constraint_rows);
    for (size_t g = 0; g < gauges.size(); g++) {
        BitVector rhs(constraints.rows());
        rhs.set(5 + g, true);
        auto sol = constraints.solve_affine(rhs);
        if (!sol) {
            throw InvariantError("Reed-Muller gauge partner system is inconsistent");
        }
        auto [i, j] = gauges[g];
        parent.gauge_pairs.push_back(
            {typed_on(kRmQubits, sol->particular, 'X'), typed_on(kRmQubits, rm_support({i, j}), 'Z')});
    }
    return parent;
}

StabilizerCode qrm15_code() {
    StabilizerCode code = rm_shared_base();
    code.name = "qrm15";
    for (auto [i, j] : rm_gauge_indices()) {
        code.gauge_fixed.push_back(code.generators.size());
        code.generators.push_back(typed_on(kRmQubits, rm_support({i, j}), 'Z'));
    }
    return code;
}

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"toy2", "[[2,1,1]]", "two-qubit worked example, stabilizer ZZ", {}},
        {"ff4", "[[4,2,2]]", "four-qubit error-detecting code", {"[[4,2,2]]", "422"}},
        {"perfect5", "[[5,1,3]]", "five-qubit perfect code (non-CSS)", {"[[5,1,3]]", "513"}},
        {"steane", "[[7,1,3]]", "Steane code from the [7,4] Hamming code", {"[[7,1,3]]"}},
        {"qrm15", "[[15,1,3]]", "quantum Reed-Muller code QRM(4), six gauge qubits Z-fixed", {"[[15,1,3]]"}},
        {"qrm15-parent", "[[15,7,3]]", "subsystem parent of QRM(4) with six gauge qubits", {"[[15,7,3]]"}},
    };
}

std::optional<AnyCode> find_catalog_code(const std::string &name) {
    std::string canonical;
    for (const auto &e : catalog_entries()) {
        if (e.name == name) {
            canonical = e.name;
        }
        for (const auto &a : e.aliases) {
            if (a == name) {
                canonical = e.name;
            }
        }
    }
    if (canonical == "toy2") return toy2_code();
    if (canonical == "ff4") return four_two_two_code();
    if (canonical == "perfect5") return five_qubit_code();
    if (canonical == "steane") return steane_code();
    if (canonical == "qrm15") return qrm15_code();
    if (canonical == "qrm15-parent") return qrm15_parent_code();
    return std::nullopt;
}

}  // namespace rewire
