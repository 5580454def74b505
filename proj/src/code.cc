#include "rewire/code.h"

#include <array>
#include <atomic>
#include <mutex>

#include "rewire/errors.h"
#include "rewire/parallel.h"

namespace rewire {

GF2Matrix StabilizerCode::check_matrix() const {
    std::vector<BitVector> rows;
    rows.reserve(generators.size());
    for (const auto &g : generators) {
        rows.push_back(g.symplectic_row());
    }
    return GF2Matrix::from_rows(std::move(rows), 2 * n);
}

std::vector<BitVector> StabilizerCode::logical_rows() const {
    std::vector<BitVector> rows;
    for (const auto &pair : logicals) {
        rows.push_back(pair.x.symplectic_row());
        rows.push_back(pair.z.symplectic_row());
    }
    return rows;
}

bool StabilizerCode::is_css() const {
    for (const auto &g : generators) {
        if (!g.is_css_type()) {
            return false;
        }
    }
    return true;
}

std::string ValidationReport::str() const {
    if (ok()) {
        return "valid";
    }
    std::string out;
    for (const auto &f : failures) {
        if (!out.empty()) {
            out += "; ";
        }
        out += f;
    }
    return out;
}

namespace {

std::string label(const char *kind, size_t index) {
    return std::string(kind) + "[" + std::to_string(index) + "]";
}

struct Named {
    std::string name;
    const PauliOperator *op;
};

void check_pairs(const std::vector<Named> &xs, const std::vector<Named> &zs, std::vector<std::string> &out) {
    for (size_t i = 0; i < xs.size(); i++) {
        for (size_t j = 0; j < zs.size(); j++) {
            bool c = anticommutes(*xs[i].op, *zs[j].op);
            if (c != (i == j)) {
                out.push_back("pairing c(" + xs[i].name + ", " + zs[j].name + ") = " + std::to_string(c) +
                              ", expected " + std::to_string(i == j));
            }
        }
        for (size_t j = i + 1; j < xs.size(); j++) {
            if (anticommutes(*xs[i].op, *xs[j].op)) {
                out.push_back("pairing c(" + xs[i].name + ", " + xs[j].name + ") = 1, expected 0");
            }
            if (anticommutes(*zs[i].op, *zs[j].op)) {
                out.push_back("pairing c(" + zs[i].name + ", " + zs[j].name + ") = 1, expected 0");
            }
        }
    }
}

ValidationReport validate_with_gauge(const StabilizerCode &code, const std::vector<LogicalPair> &gauge) {
    ValidationReport report;
    auto &f = report.failures;
    if (code.n == 0) {
        f.push_back("code has zero qubits");
        return report;
    }
    auto check_size = [&](const PauliOperator &p, const std::string &name) {
        if (p.num_qubits() != code.n) {
            f.push_back(name + " acts on " + std::to_string(p.num_qubits()) + " qubits, expected " +
                        std::to_string(code.n));
            return false;
        }
        return true;
    };
    bool sizes_ok = true;
    for (size_t i = 0; i < code.generators.size(); i++) {
        sizes_ok &= check_size(code.generators[i], label("stabilizer", i));
    }
    for (size_t j = 0; j < code.logicals.size(); j++) {
        sizes_ok &= check_size(code.logicals[j].x, label("logical_x", j));
        sizes_ok &= check_size(code.logicals[j].z, label("logical_z", j));
    }
    for (size_t j = 0; j < gauge.size(); j++) {
        sizes_ok &= check_size(gauge[j].x, label("gauge_x", j));
        sizes_ok &= check_size(gauge[j].z, label("gauge_z", j));
    }
    if (!sizes_ok) {
        return report;
    }

    std::vector<Named> gens;
    for (size_t i = 0; i < code.generators.size(); i++) {
        gens.push_back({label("stabilizer", i), &code.generators[i]});
    }
    std::vector<Named> xs;
    std::vector<Named> zs;
    for (size_t j = 0; j < code.logicals.size(); j++) {
        xs.push_back({label("logical_x", j), &code.logicals[j].x});
        zs.push_back({label("logical_z", j), &code.logicals[j].z});
    }
    for (size_t j = 0; j < gauge.size(); j++) {
        xs.push_back({label("gauge_x", j), &gauge[j].x});
        zs.push_back({label("gauge_z", j), &gauge[j].z});
    }

    for (const auto &g : gens) {
        if (!g.op->is_hermitian()) {
            f.push_back(g.name + " has imaginary sign");
        }
        if (g.op->is_identity()) {
            f.push_back(g.name + " is the identity");
        }
    }
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (anticommutes(*gens[i].op, *gens[j].op)) {
                f.push_back(gens[i].name + " anticommutes with " + gens[j].name);
            }
        }
    }
    size_t rank = code.check_matrix().rank();
    if (rank != code.generators.size()) {
        f.push_back("stabilizer generators are dependent (rank " + std::to_string(rank) + " of " +
                    std::to_string(code.generators.size()) + ")");
    }
    for (const auto *list : {&xs, &zs}) {
        for (const auto &l : *list) {
            if (!l.op->is_hermitian()) {
                f.push_back(l.name + " has imaginary sign");
            }
            for (const auto &g : gens) {
                if (anticommutes(*l.op, *g.op)) {
                    f.push_back(l.name + " anticommutes with " + g.name);
                }
            }
        }
    }
    check_pairs(xs, zs, f);
    size_t expected = code.n;
    size_t actual = code.generators.size() + code.logicals.size() + gauge.size();
    if (actual != expected) {
        f.push_back("generator count " + std::to_string(code.generators.size()) + " plus " +
                    std::to_string(code.logicals.size() + gauge.size()) + " encoded qubits does not equal n = " +
                    std::to_string(code.n));
    }
    for (size_t idx : code.gauge_fixed) {
        if (idx >= code.generators.size()) {
            f.push_back("gauge_fixed index " + std::to_string(idx) + " out of range");
        }
    }
    return report;
}

}  // namespace

ValidationReport validate(const StabilizerCode &code) {
    return validate_with_gauge(code, {});
}

ValidationReport validate(const SubsystemCode &code) {
    return validate_with_gauge(code.base, code.gauge_pairs);
}

StabilizerCode gauge_fix(const SubsystemCode &code, const std::vector<GaugeChoice> &choices) {
    if (choices.size() > code.gauge_pairs.size()) {
        throw CodeError("gauge selection names " + std::to_string(choices.size()) + " gauge qubits but the code has " +
                        std::to_string(code.gauge_pairs.size()));
    }
    StabilizerCode out = code.base;
    out.gauge_fixed.clear();
    bool any_fixed = false;
    std::vector<LogicalPair> promoted;
    for (size_t j = 0; j < code.gauge_pairs.size(); j++) {
        GaugeChoice c = j < choices.size() ? choices[j] : GaugeChoice::Skip;
        if (c == GaugeChoice::Skip) {
            promoted.push_back(code.gauge_pairs[j]);
            continue;
        }
        any_fixed = true;
        out.gauge_fixed.push_back(out.generators.size());
        out.generators.push_back(c == GaugeChoice::FixX ? code.gauge_pairs[j].x : code.gauge_pairs[j].z);
    }
    if (!any_fixed) {
        throw CodeError("gauge fixing requires at least one non-skip choice");
    }
    for (auto &p : promoted) {
        out.logicals.push_back(std::move(p));
    }
    ValidationReport report = validate(out);
    if (!report.ok()) {
        throw InvariantError("gauge-fixed code failed validation: " + report.str());
    }
    return out;
}

std::string DistanceResult::str() const {
    return exact ? std::to_string(value) : "\u2265 " + std::to_string(value);
}

namespace {

/// Reduced basis of span(rows) with pivot columns, for membership tests.
struct SpanReducer {
    std::vector<BitVector> rows;
    std::vector<size_t> pivots;

    explicit SpanReducer(const std::vector<BitVector> &input, size_t width) {
        GF2Matrix r = GF2Matrix::from_rows(input, width).rref();
        for (size_t i = 0; i < r.rows(); i++) {
            if (r.row(i).none()) {
                break;
            }
            size_t c = 0;
            while (!r.row(i)[c]) {
                c++;
            }
            rows.push_back(r.row(i));
            pivots.push_back(c);
        }
    }

    bool contains(BitVector v) const {
        for (size_t i = 0; i < rows.size(); i++) {
            if (v[pivots[i]]) {
                v ^= rows[i];
            }
        }
        return v.none();
    }
};

struct Enumerator {
    size_t n;
    size_t target_weight;
    // syndrome[q][l] for letters X, Z, Y.
    std::vector<std::array<BitVector, 3>> syndrome;
    const SpanReducer *trivial;
    std::atomic<bool> *found;

    bool search(size_t start, size_t depth, BitVector &syn, BitVector &vec) const {
        if (found->load(std::memory_order_relaxed)) {
            return false;
        }
        if (depth == target_weight) {
            return syn.none() && !trivial->contains(vec);
        }
        for (size_t q = start; q + (target_weight - depth) <= n; q++) {
            for (int l = 0; l < 3; l++) {
                bool has_x = l != 1;
                bool has_z = l != 0;
                syn ^= syndrome[q][l];
                if (has_x) vec.flip(q);
                if (has_z) vec.flip(n + q);
                bool hit = search(q + 1, depth + 1, syn, vec);
                syn ^= syndrome[q][l];
                if (has_x) vec.flip(q);
                if (has_z) vec.flip(n + q);
                if (hit) {
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

DistanceResult min_nontrivial_weight(size_t n, const std::vector<PauliOperator> &stabilizers,
                                     const std::vector<PauliOperator> &trivial, size_t max_weight) {
    max_weight = std::min(max_weight, n);
    size_t m = stabilizers.size();
    std::vector<std::array<BitVector, 3>> syndrome(n);
    for (size_t q = 0; q < n; q++) {
        BitVector sx(m);
        BitVector sz(m);
        for (size_t i = 0; i < m; i++) {
            sx.set(i, stabilizers[i].z()[q]);
            sz.set(i, stabilizers[i].x()[q]);
        }
        syndrome[q] = {sx, sz, sx ^ sz};
    }
    std::vector<BitVector> trivial_rows;
    for (const auto &t : trivial) {
        trivial_rows.push_back(t.symplectic_row());
    }
    SpanReducer reducer(trivial_rows, 2 * n);

    for (size_t w = 1; w <= max_weight; w++) {
        std::atomic<bool> found{false};
        Enumerator e{n, w, syndrome, &reducer, &found};
        parallel_for(n, [&](size_t first) {
            if (first + w > n) {
                return;
            }
            BitVector syn(m);
            BitVector vec(2 * n);
            for (int l = 0; l < 3; l++) {
                syn ^= syndrome[first][l];
                if (l != 1) vec.flip(first);
                if (l != 0) vec.flip(n + first);
                bool hit = e.search(first + 1, 1, syn, vec);
                syn ^= syndrome[first][l];
                if (l != 1) vec.flip(first);
                if (l != 0) vec.flip(n + first);
                if (hit) {
                    found.store(true);
                    return;
                }
            }
        });
        if (found.load()) {
            return {w, true};
        }
    }
    return {max_weight + 1, false};
}

DistanceResult distance(const StabilizerCode &code, size_t max_weight) {
    return min_nontrivial_weight(code.n, code.generators, code.generators, max_weight);
}

DistanceResult distance(const SubsystemCode &code, size_t max_weight) {
    std::vector<PauliOperator> trivial = code.base.generators;
    for (const auto &g : code.gauge_pairs) {
        trivial.push_back(g.x);
        trivial.push_back(g.z);
    }
    return min_nontrivial_weight(code.base.n, code.base.generators, trivial, max_weight);
}

}  // namespace rewire
