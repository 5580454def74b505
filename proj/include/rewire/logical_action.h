#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rewire/gf2.h"
#include "rewire/pauli.h"

namespace rewire {

/// A logical Clifford on k encoded qubits, recorded by conjugation images
/// U P U^dagger of the generators X_1, Z_1, X_2, Z_2, ... .
///
/// Images are k-qubit Pauli operators and must be Hermitian (sign +1 or -1).
/// The symplectic matrix uses interleaved coordinates (x_1, z_1, x_2, z_2, ...),
/// so column i is the image of generator i and J is block-diagonal [[0,1],[1,0]].
class LogicalAction {
   public:
    LogicalAction() = default;
    /// `images` has length 2k in generator order X_1, Z_1, ...
    explicit LogicalAction(std::vector<PauliOperator> images);
    static LogicalAction identity(size_t k);
    /// Rebuilds images from a 2k x 2k symplectic matrix and 2k sign bits (1 = minus).
    static LogicalAction from_symplectic(const GF2Matrix &matrix, const BitVector &signs);
    /// Conjugation by a k-qubit Pauli operator.
    static LogicalAction pauli_frame(const PauliOperator &pauli);

    size_t num_qubits() const {
        return images_.size() / 2;
    }
    const std::vector<PauliOperator> &images() const {
        return images_;
    }
    const PauliOperator &image_x(size_t qubit) const {
        return images_[2 * qubit];
    }
    const PauliOperator &image_z(size_t qubit) const {
        return images_[2 * qubit + 1];
    }

    /// Image U P U^dagger of an arbitrary k-qubit Pauli, with exact phase.
    PauliOperator apply(const PauliOperator &p) const;
    /// The action of "this first, then `next`".
    LogicalAction then(const LogicalAction &next) const;

    GF2Matrix symplectic() const;
    /// Bit i set when image i carries a minus sign.
    BitVector signs() const;
    /// A^T J A = J over GF(2).
    bool is_symplectic() const;
    bool is_identity() const;
    /// Images agree up to sign.
    bool same_symplectic(const LogicalAction &other) const;

    /// "X0->+X0, Z0->+Y0, ..." listing.
    std::string str() const;

    bool operator==(const LogicalAction &other) const = default;

   private:
    std::vector<PauliOperator> images_;
};

/// Coarse class of a single-qubit action, by symplectic part only.
enum class RewiringType { Identity, SqrtX, SqrtZ, SqrtY, Other };

const char *to_string(RewiringType type);

/// Classifies the action restricted to `qubit`, returning Other unless every
/// other logical qubit is untouched (up to sign) and the qubit's images match one
/// of the four rows: identity, X->X Z->Y, X->Y Z->Z, X->Z Z->X (signs ignored).
RewiringType classify(const LogicalAction &action, size_t qubit = 0);

/// The k-qubit Pauli F with  then(action, pauli_frame(F)) == target, if the two
/// actions share a symplectic part.
std::optional<PauliOperator> pauli_correction(const LogicalAction &action, const LogicalAction &target);

}  // namespace rewire
