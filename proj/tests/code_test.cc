#include "rewire/code.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "rewire/catalog.h"
#include "rewire/code_io.h"
#include "rewire/engine.h"
#include "rewire/errors.h"
#include "test_util.h"

using namespace rewire;
using namespace rewire::testing;

namespace {

bool mentions(const ValidationReport &r, const std::string &needle) {
    for (const auto &f : r.failures)
        if (f.find(needle) != std::string::npos) return true;
    return false;
}

/// Brute-force distance straight from the definition: smallest weight of a
/// Pauli commuting with every generator and outside span(trivial), found by
/// enumerating all 4^n operators. Only for small n.
size_t definition_distance(size_t n, const std::vector<PauliOperator> &gens, const std::vector<PauliOperator> &trivial) {
    std::vector<BitVector> rows;
    for (const auto &t : trivial) rows.push_back(t.symplectic_row());
    size_t base_rank = GF2Matrix::from_rows(rows, 2 * n).rank();
    size_t best = SIZE_MAX;
    for (uint64_t code = 1; code < (uint64_t{1} << (2 * n)); code++) {
        BitVector x(n), z(n);
        for (size_t q = 0; q < n; q++) {
            x.set(q, (code >> q) & 1);
            z.set(q, (code >> (n + q)) & 1);
        }
        PauliOperator p = PauliOperator::hermitian(x, z);
        if (p.weight() >= best) continue;
        bool commutes = true;
        for (const auto &g : gens) commutes = commutes && !anticommutes(p, g);
        if (!commutes) continue;
        auto with = rows;
        with.push_back(p.symplectic_row());
        if (GF2Matrix::from_rows(with, 2 * n).rank() > base_rank) best = p.weight();
    }
    return best;
}

}  // namespace

TEST(Validate, catalog_codes_pass) {
    for (const auto &entry : catalog_entries()) {
        auto code = find_catalog_code(entry.name);
        ASSERT_TRUE(code) << entry.name;
        ValidationReport r = std::visit([](const auto &c) { return validate(c); }, *code);
        EXPECT_TRUE(r.ok()) << entry.name << ": " << r.str();
        for (const auto &alias : entry.aliases) {
            EXPECT_TRUE(find_catalog_code(alias)) << alias;
        }
    }
    EXPECT_FALSE(find_catalog_code("nope"));
}

TEST(Validate, toy2_by_hand) {
    StabilizerCode toy{"toy2", 2, {PauliOperator::parse("+ZZ")},
                       {{PauliOperator::parse("+XX"), PauliOperator::parse("+ZI")}}, {}};
    EXPECT_TRUE(validate(toy).ok());
    EXPECT_EQ(toy, toy2_code());
}

TEST(Validate, logical_replaced_by_stabilizer_breaks_pairing) {
    StabilizerCode steane = steane_code();
    steane.logicals[0].z = steane.generators[3];
    ValidationReport r = validate(steane);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(mentions(r, "c(logical_x[0], logical_z[0])")) << r.str();
}

TEST(Validate, names_each_violation) {
    StabilizerCode toy = toy2_code();
    toy.generators.push_back(PauliOperator::parse("+XI"));
    ValidationReport r = validate(toy);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(mentions(r, "stabilizer[0] anticommutes with stabilizer[1]")) << r.str();

    StabilizerCode dependent = steane_code();
    dependent.generators[5] = dependent.generators[3] * dependent.generators[4];
    EXPECT_TRUE(mentions(validate(dependent), "rank")) << validate(dependent).str();

    StabilizerCode imaginary = toy2_code();
    imaginary.generators[0] = PauliOperator::parse("+iZZ");
    EXPECT_FALSE(validate(imaginary).ok());
}

TEST(Distance, catalog_values) {
    EXPECT_EQ(distance(four_two_two_code(), 4), (DistanceResult{2, true}));
    EXPECT_EQ(distance(five_qubit_code(), 5), (DistanceResult{3, true}));
    EXPECT_EQ(distance(steane_code(), 3), (DistanceResult{3, true}));
    EXPECT_EQ(distance(qrm15_code(), 3), (DistanceResult{3, true}));
    EXPECT_EQ(distance(qrm15_parent_code(), 3), (DistanceResult{3, true}));
    EXPECT_EQ(distance(toy2_code(), 2), (DistanceResult{1, true}));
}

TEST(Distance, bound_semantics) {
    DistanceResult r = distance(steane_code(), 1);
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.str(), "≥ 2");
    EXPECT_TRUE(r.at_least(2));
}

TEST(Distance, trivial_code_has_distance_one) {
    StabilizerCode bare{"bare", 1, {}, {{PauliOperator::parse("+X"), PauliOperator::parse("+Z")}}, {}};
    ASSERT_TRUE(validate(bare).ok());
    EXPECT_EQ(distance(bare, 1), (DistanceResult{1, true}));
}

TEST(Distance, matches_definition_on_small_codes) {
    for (const StabilizerCode &code : {toy2_code(), four_two_two_code(), five_qubit_code(), steane_code()}) {
        EXPECT_EQ(distance(code, code.n).value, definition_distance(code.n, code.generators, code.generators))
            << code.name;
    }
}

TEST(Distance, invariant_under_generator_basis_change) {
    std::mt19937_64 rng(21);
    for (const StabilizerCode &code : {four_two_two_code(), five_qubit_code(), steane_code(), qrm15_code()}) {
        DistanceResult ref = distance(code, 3);
        for (int t = 0; t < 5; t++) {
            StabilizerCode mixed = code;
            size_t m = mixed.generators.size();
            for (int op = 0; op < 20; op++) {
                size_t i = rng() % m, j = rng() % m;
                if (i != j) mixed.generators[i] = mixed.generators[i] * mixed.generators[j];
            }
            ASSERT_TRUE(validate(mixed).ok()) << validate(mixed).str();
            EXPECT_EQ(distance(mixed, 3), ref) << code.name;
        }
    }
}

TEST(Distance, thread_count_does_not_change_result) {
    setenv("REWIRE_THREADS", "1", 1);
    DistanceResult one = distance(qrm15_code(), 3);
    setenv("REWIRE_THREADS", "4", 1);
    DistanceResult four = distance(qrm15_code(), 3);
    unsetenv("REWIRE_THREADS");
    EXPECT_EQ(one, four);
}

TEST(GaugeFix, six_z_fixes_reproduce_qrm15) {
    SubsystemCode parent = qrm15_parent_code();
    ASSERT_EQ(parent.gauge_pairs.size(), 6u);
    StabilizerCode fixed = gauge_fix(parent, std::vector<GaugeChoice>(6, GaugeChoice::FixZ));
    StabilizerCode qrm = qrm15_code();
    EXPECT_EQ(fixed.n, 15u);
    EXPECT_EQ(fixed.num_logical(), 1u);
    EXPECT_EQ(canonical_group(fixed.generators), canonical_group(qrm.generators));
    // same logical class: X_L and Z_L agree modulo the stabilizer group
    for (bool x : {true, false}) {
        auto a = fixed.generators, b = qrm.generators;
        a.push_back(x ? fixed.logicals[0].x : fixed.logicals[0].z);
        b.push_back(x ? qrm.logicals[0].x : qrm.logicals[0].z);
        EXPECT_EQ(canonical_group(a), canonical_group(b));
    }
    EXPECT_EQ(fixed.gauge_fixed, (std::vector<size_t>{8, 9, 10, 11, 12, 13}));
    EXPECT_EQ(distance(fixed, 3), (DistanceResult{3, true}));
}

TEST(GaugeFix, skip_all_but_one) {
    SubsystemCode parent = qrm15_parent_code();
    std::vector<GaugeChoice> choices(6, GaugeChoice::Skip);
    choices[2] = GaugeChoice::FixZ;
    StabilizerCode fixed = gauge_fix(parent, choices);
    EXPECT_TRUE(validate(fixed).ok());
    EXPECT_EQ(fixed.n, 15u);
    EXPECT_EQ(fixed.num_logical(), 6u);
    EXPECT_TRUE(distance(fixed, 2).at_least(3));
}

TEST(GaugeFix, toy_subsystem_from_four_two_two) {
    StabilizerCode ff4 = four_two_two_code();
    SubsystemCode toy{ff4, {ff4.logicals[1]}};
    toy.base.logicals.pop_back();
    ASSERT_TRUE(validate(toy).ok()) << validate(toy).str();
    StabilizerCode fixed = gauge_fix(toy, {GaugeChoice::FixX});
    EXPECT_EQ(fixed.num_logical(), 1u);
    EXPECT_EQ(fixed.generators.back(), ff4.logicals[1].x);
    EXPECT_TRUE(validate(fixed).ok());
}

TEST(GaugeFix, errors) {
    SubsystemCode parent = qrm15_parent_code();
    EXPECT_THROW(gauge_fix(parent, std::vector<GaugeChoice>(7, GaugeChoice::FixZ)), CodeError);
    EXPECT_THROW(gauge_fix(parent, std::vector<GaugeChoice>(6, GaugeChoice::Skip)), CodeError);
}

TEST(GaugeFix, never_below_parent_dressed_distance_exhaustive_weight_two) {
    SubsystemCode parent = qrm15_parent_code();
    size_t checked = 0;
    std::vector<std::vector<GaugeChoice>> all;
    for (int code = 0; code < 729; code++) {
        std::vector<GaugeChoice> choices;
        int c = code;
        for (int j = 0; j < 6; j++, c /= 3) choices.push_back(static_cast<GaugeChoice>(c % 3));
        all.push_back(choices);
    }
    std::mt19937_64 rng(22);
    for (size_t i = 0; i < all.size(); i++) {
        const auto &choices = all[i];
        if (std::all_of(choices.begin(), choices.end(), [](GaugeChoice g) { return g == GaugeChoice::Skip; }))
            continue;
        StabilizerCode fixed = gauge_fix(parent, choices);
        ASSERT_TRUE(distance(fixed, 2).at_least(3)) << "choice " << i;
        checked++;
        if (rng() % 40 == 0) {
            EXPECT_EQ(distance(fixed, 3), (DistanceResult{3, true})) << "choice " << i;
        }
    }
    EXPECT_EQ(checked, 728u);
}

TEST(CodeIO, round_trip_catalog) {
    for (const auto &entry : catalog_entries()) {
        AnyCode code = *find_catalog_code(entry.name);
        nlohmann::json doc = code_to_json(code);
        AnyCode back = code_from_json(doc);
        EXPECT_EQ(back, code) << entry.name;
        EXPECT_EQ(code_to_json(back), doc);
    }
}

TEST(CodeIO, steane_document_loads) {
    nlohmann::json doc = nlohmann::json::parse(R"({
        "name": "steane", "n": 7,
        "stabilizers": ["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
        "logical_x": ["XXXXXXX"], "logical_z": ["ZZZZZZZ"]})");
    AnyCode code = code_from_json(doc);
    ASSERT_TRUE(std::holds_alternative<StabilizerCode>(code));
    EXPECT_TRUE(validate(std::get<StabilizerCode>(code)).ok());
    EXPECT_EQ(code_to_json(code)["stabilizers"][0], "+IIIXXXX");
}

TEST(CodeIO, schema_errors_are_named) {
    nlohmann::json doc = code_to_json(steane_code());
    doc.erase("logical_z");
    try {
        code_from_json(doc);
        FAIL();
    } catch (const CodeError &e) {
        EXPECT_NE(std::string(e.what()).find("logical_z"), std::string::npos) << e.what();
    }
    nlohmann::json bad = code_to_json(steane_code());
    bad["stabilizers"][2] = "+XQXIXIX";
    try {
        code_from_json(bad);
        FAIL();
    } catch (const CodeError &e) {
        EXPECT_NE(std::string(e.what()).find("stabilizers[2]"), std::string::npos) << e.what();
    }
    nlohmann::json broken = code_to_json(steane_code());
    broken["logical_z"][0] = "+ZZZZZZI";
    EXPECT_THROW(code_from_json(broken), CodeError);
    EXPECT_NO_THROW(code_from_json(broken, false));
}

TEST(CodeIO, files_and_hash) {
    auto path = std::filesystem::temp_directory_path() / "rewire_code_io_test.json";
    save_code_file(AnyCode{steane_code()}, path.string());
    AnyCode back = load_code_file(path.string());
    EXPECT_EQ(std::get<StabilizerCode>(back), steane_code());
    EXPECT_EQ(code_hash(steane_code()), code_hash(std::get<StabilizerCode>(back)));
    EXPECT_NE(code_hash(steane_code()), code_hash(qrm15_code()));
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    EXPECT_THROW(load_code_file(path.string()), CodeError);
    std::filesystem::remove(path);
}
