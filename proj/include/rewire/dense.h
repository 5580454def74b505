#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "rewire/code.h"
#include "rewire/engine.h"
#include "rewire/logical_action.h"

namespace rewire {

/// State vector over n qubits; qubit q is bit q of the basis index.
using Amplitudes = std::vector<std::complex<double>>;

/// Largest n the state-vector oracle accepts.
inline constexpr size_t kMaxDenseQubits = 20;

/// psi <- P psi for P = i^phase X^x Z^z.
void apply_pauli(const PauliOperator &p, Amplitudes &psi);

double norm(const Amplitudes &psi);
std::complex<double> inner(const Amplitudes &a, const Amplitudes &b);
/// <psi| P |psi>
std::complex<double> expectation(const PauliOperator &p, const Amplitudes &psi);

/// Logical basis |a> (bit j of the index is a_j), built by projecting a seed
/// onto the code space and onto Z_L(j) = +1, then applying X_L(j)^{a_j}.
std::vector<Amplitudes> codespace_basis(const StabilizerCode &code);

struct OracleOptions {
    /// Outcome of step i is -1 when bit i is set; missing bits mean +1.
    std::vector<bool> outcomes_minus;
    /// Draw each outcome uniformly from this seed instead (overrides outcomes_minus).
    std::optional<uint64_t> sample_seed;
    /// Also compare against the product of closed-form unitaries (I + P S)/sqrt(2).
    bool closed_form_check = true;
};

struct OracleReport {
    LogicalAction action;
    std::vector<bool> outcomes_minus;
    /// Largest deviation of a measurement probability from 1/2.
    double max_probability_error = 0.0;
    /// Largest deviation from the closed-form product, up to a global phase.
    double closed_form_error = 0.0;
    /// Largest deviation of the logical images from exact +-Pauli operators.
    double pauli_error = 0.0;
};

/// Runs the steps (then the physical Pauli fix-up) on every logical basis
/// state, reads off W_ba = <b|V|a>, and returns the Clifford action of W.
/// Throws DimensionError for n > kMaxDenseQubits and InvariantError when a
/// probability is not 1/2 or W does not map Paulis to Paulis.
OracleReport oracle_action(const StabilizerCode &code, const std::vector<ScheduleStep> &steps,
                           const PauliOperator &pauli_fixup, const OracleOptions &options = {});

}  // namespace rewire
