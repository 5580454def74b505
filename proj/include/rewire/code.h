#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rewire/gf2.h"
#include "rewire/pauli.h"

namespace rewire {

/// An anticommuting (X, Z) pair of logical operators for one encoded qubit.
struct LogicalPair {
    PauliOperator x;
    PauliOperator z;

    bool operator==(const LogicalPair &other) const = default;
};

/// An [[n, k]] stabilizer code given by independent generators and k logical pairs.
///
/// `gauge_fixed` lists indices into `generators` that came from fixing gauge
/// qubits of a parent subsystem code; the compiler may restrict the replaced
/// generator to these.
struct StabilizerCode {
    std::string name;
    size_t n = 0;
    std::vector<PauliOperator> generators;
    std::vector<LogicalPair> logicals;
    std::vector<size_t> gauge_fixed;

    size_t num_logical() const {
        return logicals.size();
    }
    /// Rows (x | z) of the generators.
    GF2Matrix check_matrix() const;
    /// Symplectic rows of X_L(1), Z_L(1), X_L(2), ...
    std::vector<BitVector> logical_rows() const;
    /// Every generator is purely X-type or purely Z-type.
    bool is_css() const;

    bool operator==(const StabilizerCode &other) const = default;
};

/// A subsystem code: the stabilizer data of C-hat plus r gauge pairs.
struct SubsystemCode {
    StabilizerCode base;
    std::vector<LogicalPair> gauge_pairs;

    bool operator==(const SubsystemCode &other) const = default;
};

/// Either kind of code, as loaded from a document or the catalog.
using AnyCode = std::variant<StabilizerCode, SubsystemCode>;

/// Outcome of structural checks; each failure names the offending operators.
struct ValidationReport {
    std::vector<std::string> failures;

    bool ok() const {
        return failures.empty();
    }
    std::string str() const;
};

ValidationReport validate(const StabilizerCode &code);
ValidationReport validate(const SubsystemCode &code);

enum class GaugeChoice { Skip, FixX, FixZ };

/// Promotes the selected gauge operator of each non-skipped gauge pair to a
/// stabilizer generator (appended in gauge order). Skipped gauge pairs become
/// extra logical pairs of the result, after the original logicals.
StabilizerCode gauge_fix(const SubsystemCode &code, const std::vector<GaugeChoice> &choices);

/// Result of the brute-force distance search. When `exact` is false the
/// distance is only known to be at least `value`.
struct DistanceResult {
    size_t value = 0;
    bool exact = false;

    bool at_least(size_t d) const {
        return value >= d;
    }
    std::string str() const;
    bool operator==(const DistanceResult &other) const = default;
};

/// Minimum weight of a Pauli operator that commutes with every generator but is
/// not in the stabilizer group. Enumerates weights 1..max_weight.
DistanceResult distance(const StabilizerCode &code, size_t max_weight);
/// Dressed distance: minimum weight of an operator commuting with the
/// stabilizers but outside the group generated by stabilizers and gauge operators.
DistanceResult distance(const SubsystemCode &code, size_t max_weight);
/// Generic form: operators commuting with `stabilizers`, outside span(`trivial`).
DistanceResult min_nontrivial_weight(size_t n, const std::vector<PauliOperator> &stabilizers,
                                     const std::vector<PauliOperator> &trivial, size_t max_weight);

}  // namespace rewire
