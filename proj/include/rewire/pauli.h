#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rewire/bit_vector.h"

namespace rewire {

/// An n-qubit Pauli operator  i^phase * X^x * Z^z  in symplectic form.
///
/// The X factors are written to the left of the Z factors, so a Y on qubit q
/// is stored as x[q] = z[q] = 1 with one unit of phase (Y = i X Z). The text
/// form puts qubit 0 leftmost and always carries an explicit sign on output
/// ("+", "-", "+i", "-i").
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliOperator(size_t num_qubits);
    PauliOperator(uint8_t phase, BitVector x, BitVector z);

    /// Parses `[+|-|+i|-i]?[IXYZ]+`.
    static PauliOperator parse(std::string_view text);
    /// The Hermitian operator  i^{|x.z|} X^x Z^z.
    static PauliOperator hermitian(const BitVector &x, const BitVector &z);
    /// A single-qubit letter ('X', 'Y' or 'Z') placed on `qubit`.
    static PauliOperator single(size_t num_qubits, size_t qubit, char letter);

    size_t num_qubits() const {
        return x_.size();
    }
    uint8_t phase() const {
        return phase_;
    }
    const BitVector &x() const {
        return x_;
    }
    const BitVector &z() const {
        return z_;
    }

    /// 'I', 'X', 'Y' or 'Z' on the given qubit.
    char letter(size_t qubit) const;
    size_t weight() const;
    /// Exponent of i in front of the letter string (the rendered sign).
    uint8_t sign_exponent() const;
    /// True when the operator squares to +I, i.e. its rendered sign is +1 or -1.
    bool is_hermitian() const {
        return (sign_exponent() & 1) == 0;
    }
    /// True for a Hermitian operator whose rendered sign is -1.
    bool is_negative() const {
        return sign_exponent() == 2;
    }
    bool is_identity() const {
        return x_.none() && z_.none();
    }
    /// Purely X-type or purely Z-type (or identity).
    bool is_css_type() const {
        return x_.none() || z_.none();
    }

    PauliOperator negated() const;
    /// Same support, phase chosen so the rendered sign is '+'.
    PauliOperator positive() const;
    /// The symplectic row (x | z) of length 2n.
    BitVector symplectic_row() const {
        return x_.concat(z_);
    }
    bool same_support(const PauliOperator &other) const {
        return x_ == other.x_ && z_ == other.z_;
    }

    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;

   private:
    uint8_t phase_ = 0;
    BitVector x_;
    BitVector z_;
};

/// Exact product p * q, including phase.
PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);

/// The commutation bit c(p, q): false when the operators commute, true when
/// they anticommute. Computed as  p.x . q.z + p.z . q.x  (mod 2).
bool anticommutes(const PauliOperator &p, const PauliOperator &q);

/// Product of several operators left to right; identity on `num_qubits` when empty.
PauliOperator product(size_t num_qubits, const std::vector<PauliOperator> &factors);

}  // namespace rewire
