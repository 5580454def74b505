#include "rewire/pauli.h"

#include "rewire/errors.h"

namespace rewire {

namespace {

void require_same_size(const PauliOperator &p, const PauliOperator &q, const char *what) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError(std::string(what) + ": operators act on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace

PauliOperator::PauliOperator(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {
}

PauliOperator::PauliOperator(uint8_t phase, BitVector x, BitVector z)
    : phase_(phase & 3), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw DimensionError("Pauli x and z parts have lengths " + std::to_string(x_.size()) + " and " +
                             std::to_string(z_.size()));
    }
}

PauliOperator PauliOperator::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty Pauli string");
    }
    size_t pos = 0;
    uint8_t sign = 0;
    if (text[0] == '+' || text[0] == '-') {
        sign = text[0] == '-' ? 2 : 0;
        pos = 1;
        if (pos < text.size() && text[pos] == 'i') {
            sign += 1;
            pos++;
        }
    }
    size_t n = text.size() - pos;
    if (n == 0) {
        throw ParseError("Pauli string '" + std::string(text) + "' has no qubits");
    }
    BitVector x(n);
    BitVector z(n);
    uint8_t phase = sign;
    for (size_t q = 0; q < n; q++) {
        char c = text[pos + q];
        switch (c) {
            case 'I':
                break;
            case 'X':
                x.set(q, true);
                break;
            case 'Z':
                z.set(q, true);
                break;
            case 'Y':
                x.set(q, true);
                z.set(q, true);
                phase++;
                break;
            default:
                throw ParseError("Pauli string '" + std::string(text) + "' has invalid character '" +
                                 std::string(1, c) + "' at position " + std::to_string(pos + q));
        }
    }
    return PauliOperator(phase, std::move(x), std::move(z));
}

PauliOperator PauliOperator::hermitian(const BitVector &x, const BitVector &z) {
    if (x.size() != z.size()) {
        throw DimensionError("hermitian: support vectors have lengths " + std::to_string(x.size()) + " and " +
                             std::to_string(z.size()));
    }
    return PauliOperator(static_cast<uint8_t>(x.overlap(z) & 3), x, z);
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t qubit, char letter) {
    PauliOperator p(num_qubits);
    if (letter == 'X' || letter == 'Y') {
        p.x_.set(qubit, true);
    }
    if (letter == 'Z' || letter == 'Y') {
        p.z_.set(qubit, true);
    }
    if (letter == 'Y') {
        p.phase_ = 1;
    }
    return p;
}

char PauliOperator::letter(size_t qubit) const {
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x_[qubit] ? 1 : 0) | (z_[qubit] ? 2 : 0)];
}

size_t PauliOperator::weight() const {
    size_t total = 0;
    for (size_t q = 0; q < num_qubits(); q++) {
        total += x_[q] || z_[q];
    }
    return total;
}

uint8_t PauliOperator::sign_exponent() const {
    return static_cast<uint8_t>((phase_ + 4 - (x_.overlap(z_) & 3)) & 3);
}

PauliOperator PauliOperator::negated() const {
    return PauliOperator(static_cast<uint8_t>(phase_ + 2), x_, z_);
}

PauliOperator PauliOperator::positive() const {
    return hermitian(x_, z_);
}

std::string PauliOperator::str() const {
    static constexpr const char *kSigns[] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[sign_exponent()];
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(letter(q));
    }
    return out;
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q, "multiply");
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    uint8_t phase = static_cast<uint8_t>(p.phase() + q.phase() + 2 * (p.z().overlap(q.x()) & 1));
    return PauliOperator(phase, p.x() ^ q.x(), p.z() ^ q.z());
}

bool anticommutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q, "commutation");
    return ((p.x().overlap(q.z()) + p.z().overlap(q.x())) & 1) != 0;
}

PauliOperator product(size_t num_qubits, const std::vector<PauliOperator> &factors) {
    PauliOperator acc(num_qubits);
    for (const auto &f : factors) {
        acc = acc * f;
    }
    return acc;
}

}  // namespace rewire
