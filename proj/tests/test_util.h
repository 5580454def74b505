#pragma once

#include <complex>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "rewire/pauli.h"

namespace rewire {

inline void PrintTo(const PauliOperator &p, std::ostream *os) {
    *os << p.str();
}

}  // namespace rewire

namespace rewire::testing {

using Complex = std::complex<double>;
using Mat = std::vector<std::vector<Complex>>;

inline BitVector random_bits(std::mt19937_64 &rng, size_t n) {
    BitVector b(n);
    for (size_t i = 0; i < n; i++) {
        b.set(i, rng() & 1);
    }
    return b;
}

inline PauliOperator random_pauli(std::mt19937_64 &rng, size_t n, bool any_phase = true) {
    PauliOperator p = PauliOperator::hermitian(random_bits(rng, n), random_bits(rng, n));
    if (any_phase) {
        uint8_t extra = rng() & 3;
        return PauliOperator((p.phase() + extra) & 3, p.x(), p.z());
    }
    return (rng() & 1) ? p.negated() : p;
}

inline Mat kron(const Mat &a, const Mat &b) {
    size_t ra = a.size(), rb = b.size();
    Mat out(ra * rb, std::vector<Complex>(ra * rb));
    for (size_t i = 0; i < ra; i++)
        for (size_t j = 0; j < ra; j++)
            for (size_t k = 0; k < rb; k++)
                for (size_t l = 0; l < rb; l++) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
}

inline Mat matmul(const Mat &a, const Mat &b) {
    size_t d = a.size();
    Mat out(d, std::vector<Complex>(d));
    for (size_t i = 0; i < d; i++)
        for (size_t k = 0; k < d; k++)
            for (size_t j = 0; j < d; j++) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline double distance(const Mat &a, const Mat &b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < a.size(); j++) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

/// Dense matrix of a rendered Pauli string, built letter by letter with
/// Kronecker products (independent of the symplectic encoding).
inline Mat dense_from_text(const std::string &text) {
    size_t pos = 0;
    Complex sign = 1;
    if (text.rfind("+i", 0) == 0) {
        sign = Complex(0, 1), pos = 2;
    } else if (text.rfind("-i", 0) == 0) {
        sign = Complex(0, -1), pos = 2;
    } else if (text[0] == '+') {
        pos = 1;
    } else if (text[0] == '-') {
        sign = -1, pos = 1;
    }
    const Mat I = {{1, 0}, {0, 1}};
    const Mat X = {{0, 1}, {1, 0}};
    const Mat Y = {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
    const Mat Z = {{1, 0}, {0, -1}};
    Mat out = {{sign}};
    for (; pos < text.size(); pos++) {
        char c = text[pos];
        out = kron(out, c == 'X' ? X : c == 'Y' ? Y : c == 'Z' ? Z : I);
    }
    return out;
}

inline Mat dense(const PauliOperator &p) {
    return dense_from_text(p.str());
}

}  // namespace rewire::testing
