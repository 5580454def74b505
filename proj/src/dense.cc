#include "rewire/dense.h"

#include <bit>
#include <cmath>
#include <random>

#include "rewire/errors.h"

namespace rewire {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kOpTol = 1e-8;

uint64_t mask_of(const BitVector &bits) {
    uint64_t m = 0;
    for (size_t q = 0; q < bits.size(); q++) {
        if (bits[q]) {
            m |= uint64_t{1} << q;
        }
    }
    return m;
}

std::complex<double> i_power(int e) {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((e % 4) + 4) % 4];
}

void scale(Amplitudes &psi, std::complex<double> s) {
    for (auto &a : psi) {
        a *= s;
    }
}

/// psi <- (I + sign P) psi / 2
void project(const PauliOperator &p, bool minus, Amplitudes &psi) {
    Amplitudes moved = psi;
    apply_pauli(p, moved);
    double s = minus ? -1.0 : 1.0;
    for (size_t b = 0; b < psi.size(); b++) {
        psi[b] = 0.5 * (psi[b] + s * moved[b]);
    }
}

using Matrix = std::vector<Amplitudes>;  // row-major

Matrix multiply(const Matrix &a, const Matrix &b) {
    size_t d = a.size();
    Matrix out(d, Amplitudes(d));
    for (size_t i = 0; i < d; i++) {
        for (size_t l = 0; l < d; l++) {
            if (a[i][l] == 0.0) {
                continue;
            }
            for (size_t j = 0; j < d; j++) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

Matrix adjoint(const Matrix &a) {
    size_t d = a.size();
    Matrix out(d, Amplitudes(d));
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            out[j][i] = std::conj(a[i][j]);
        }
    }
    return out;
}

Matrix pauli_matrix(const PauliOperator &p) {
    size_t d = size_t{1} << p.num_qubits();
    Matrix out(d, Amplitudes(d));
    for (size_t c = 0; c < d; c++) {
        Amplitudes e(d);
        e[c] = 1.0;
        apply_pauli(p, e);
        for (size_t r = 0; r < d; r++) {
            out[r][c] = e[r];
        }
    }
    return out;
}

/// Finds +-Q with Q Hermitian and M = +-Q, reporting the residual.
PauliOperator identify_pauli(const Matrix &m, size_t k, double &error) {
    size_t d = size_t{1} << k;
    double best = 1e9;
    PauliOperator found(k);
    for (uint64_t xm = 0; xm < d; xm++) {
        for (uint64_t zm = 0; zm < d; zm++) {
            BitVector x(k), z(k);
            for (size_t q = 0; q < k; q++) {
                x.set(q, (xm >> q) & 1);
                z.set(q, (zm >> q) & 1);
            }
            PauliOperator q = PauliOperator::hermitian(x, z);
            // tr(Q M) / d with Q[c ^ x, c] = i^phase (-1)^{c.z}
            std::complex<double> t = 0;
            for (uint64_t c = 0; c < d; c++) {
                double s = (std::popcount(c & zm) & 1) ? -1.0 : 1.0;
                t += s * m[c][c ^ xm];
            }
            t *= i_power(q.phase()) / double(d);
            for (bool minus : {false, true}) {
                double err = std::abs(t - (minus ? -1.0 : 1.0));
                if (err < best) {
                    best = err;
                    found = minus ? q.negated() : q;
                }
            }
        }
    }
    error = best;
    return found;
}

}  // namespace

void apply_pauli(const PauliOperator &p, Amplitudes &psi) {
    uint64_t xm = mask_of(p.x());
    uint64_t zm = mask_of(p.z());
    std::complex<double> ph = i_power(p.phase());
    Amplitudes out(psi.size());
    for (uint64_t b = 0; b < psi.size(); b++) {
        double s = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
        out[b ^ xm] = ph * s * psi[b];
    }
    psi.swap(out);
}

double norm(const Amplitudes &psi) {
    double s = 0;
    for (const auto &a : psi) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::complex<double> inner(const Amplitudes &a, const Amplitudes &b) {
    std::complex<double> s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

std::complex<double> expectation(const PauliOperator &p, const Amplitudes &psi) {
    Amplitudes moved = psi;
    apply_pauli(p, moved);
    return inner(psi, moved);
}

std::vector<Amplitudes> codespace_basis(const StabilizerCode &code) {
    if (code.n > kMaxDenseQubits) {
        throw DimensionError("state-vector oracle supports at most " + std::to_string(kMaxDenseQubits) +
                             " qubits, got " + std::to_string(code.n));
    }
    size_t dim = size_t{1} << code.n;
    Amplitudes zero;
    for (size_t seed = 0; seed < dim && zero.empty(); seed++) {
        Amplitudes psi(dim);
        psi[seed] = 1.0;
        for (const auto &g : code.generators) {
            project(g, false, psi);
        }
        for (const auto &l : code.logicals) {
            project(l.z, false, psi);
        }
        double nrm = norm(psi);
        if (nrm > 1e-6) {
            scale(psi, 1.0 / nrm);
            zero = std::move(psi);
        }
    }
    if (zero.empty()) {
        throw InvariantError("code space is empty");
    }
    size_t k = code.num_logical();
    std::vector<Amplitudes> basis;
    for (size_t a = 0; a < (size_t{1} << k); a++) {
        Amplitudes psi = zero;
        for (size_t j = 0; j < k; j++) {
            if ((a >> j) & 1) {
                apply_pauli(code.logicals[j].x, psi);
            }
        }
        basis.push_back(std::move(psi));
    }
    return basis;
}

OracleReport oracle_action(const StabilizerCode &code, const std::vector<ScheduleStep> &steps,
                           const PauliOperator &pauli_fixup, const OracleOptions &options) {
    std::vector<Amplitudes> basis = codespace_basis(code);
    size_t k = code.num_logical();
    size_t d = basis.size();
    OracleReport report;

    report.outcomes_minus.assign(steps.size(), false);
    if (options.sample_seed) {
        std::mt19937_64 rng(*options.sample_seed);
        std::bernoulli_distribution coin(0.5);
        for (size_t i = 0; i < steps.size(); i++) {
            report.outcomes_minus[i] = coin(rng);
        }
    } else {
        for (size_t i = 0; i < steps.size() && i < options.outcomes_minus.size(); i++) {
            report.outcomes_minus[i] = options.outcomes_minus[i];
        }
    }

    std::vector<Amplitudes> out = basis;
    std::vector<Amplitudes> closed = basis;
    for (size_t i = 0; i < steps.size(); i++) {
        const ScheduleStep &step = steps[i];
        bool minus = report.outcomes_minus[i];
        // Pivot sign read from the current code state: the correction is a
        // stabilizer (up to sign) before the measurement.
        double pivot_sign = 1.0;
        if (options.closed_form_check) {
            std::complex<double> e = expectation(step.correct_on_minus, closed[0]);
            if (std::abs(std::abs(e) - 1.0) > kOpTol || std::abs(e.imag()) > kOpTol) {
                throw InvariantError("step " + std::to_string(i) + ": correction is not a stabilizer of the state");
            }
            pivot_sign = e.real() > 0 ? 1.0 : -1.0;
        }
        for (size_t a = 0; a < d; a++) {
            Amplitudes &psi = out[a];
            project(step.measure, minus, psi);
            double p = std::pow(norm(psi), 2);
            report.max_probability_error = std::max(report.max_probability_error, std::abs(p - 0.5));
            if (std::abs(p - 0.5) > kNormTol) {
                throw InvariantError("step " + std::to_string(i) + ": outcome probability " + std::to_string(p) +
                                     " is not 1/2");
            }
            scale(psi, std::sqrt(2.0));
            if (minus) {
                apply_pauli(step.correct_on_minus, psi);
            }
            if (options.closed_form_check) {
                // (I + P S) / sqrt(2)
                Amplitudes &phi = closed[a];
                Amplitudes moved = phi;
                apply_pauli(step.correct_on_minus, moved);
                apply_pauli(step.measure, moved);
                for (size_t b = 0; b < phi.size(); b++) {
                    phi[b] = (phi[b] + pivot_sign * moved[b]) / std::sqrt(2.0);
                }
            }
        }
    }
    for (auto &psi : out) {
        apply_pauli(pauli_fixup, psi);
    }

    if (options.closed_form_check) {
        for (auto &phi : closed) {
            apply_pauli(pauli_fixup, phi);
        }
        // Branch corrections may contribute a global sign.
        std::complex<double> phase = inner(closed[0], out[0]);
        if (std::abs(std::abs(phase) - 1.0) > kOpTol) {
            throw InvariantError("channel output is not proportional to the closed-form product");
        }
        for (size_t a = 0; a < d; a++) {
            for (size_t b = 0; b < out[a].size(); b++) {
                report.closed_form_error =
                    std::max(report.closed_form_error, std::abs(out[a][b] - phase * closed[a][b]));
            }
        }
        if (report.closed_form_error > kOpTol) {
            throw InvariantError("channel differs from the closed-form product by " +
                                 std::to_string(report.closed_form_error));
        }
    }

    Matrix w(d, Amplitudes(d));
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            w[b][a] = inner(basis[b], out[a]);
        }
    }
    Matrix wd = adjoint(w);
    std::vector<PauliOperator> images;
    for (size_t j = 0; j < k; j++) {
        for (char letter : {'X', 'Z'}) {
            Matrix m = multiply(multiply(w, pauli_matrix(PauliOperator::single(k, j, letter))), wd);
            double err = 0;
            images.push_back(identify_pauli(m, k, err));
            report.pauli_error = std::max(report.pauli_error, err);
        }
    }
    if (report.pauli_error > kOpTol) {
        throw InvariantError("logical map is not Clifford on the code space (residual " +
                             std::to_string(report.pauli_error) + ")");
    }
    report.action = LogicalAction(images);
    return report;
}

}  // namespace rewire
