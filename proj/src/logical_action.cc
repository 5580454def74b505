#include "rewire/logical_action.h"

#include "rewire/errors.h"

namespace rewire {

namespace {

BitVector interleaved(const PauliOperator &p) {
    BitVector v(2 * p.num_qubits());
    for (size_t q = 0; q < p.num_qubits(); q++) {
        v.set(2 * q, p.x()[q]);
        v.set(2 * q + 1, p.z()[q]);
    }
    return v;
}

}  // namespace

LogicalAction::LogicalAction(std::vector<PauliOperator> images) : images_(std::move(images)) {
    if (images_.size() % 2 != 0) {
        throw DimensionError("logical action needs an even number of images");
    }
    size_t k = images_.size() / 2;
    for (size_t i = 0; i < images_.size(); i++) {
        if (images_[i].num_qubits() != k) {
            throw DimensionError("logical action image " + std::to_string(i) + " acts on " +
                                 std::to_string(images_[i].num_qubits()) + " qubits, expected " + std::to_string(k));
        }
        if (!images_[i].is_hermitian()) {
            throw InvariantError("phase convention violation: logical image " + images_[i].str() +
                                 " is not Hermitian");
        }
    }
}

LogicalAction LogicalAction::identity(size_t k) {
    std::vector<PauliOperator> images;
    for (size_t q = 0; q < k; q++) {
        images.push_back(PauliOperator::single(k, q, 'X'));
        images.push_back(PauliOperator::single(k, q, 'Z'));
    }
    return LogicalAction(std::move(images));
}

LogicalAction LogicalAction::from_symplectic(const GF2Matrix &matrix, const BitVector &signs) {
    size_t dim = matrix.rows();
    if (matrix.cols() != dim || dim % 2 != 0 || signs.size() != dim) {
        throw DimensionError("symplectic matrix must be 2k x 2k with 2k sign bits");
    }
    size_t k = dim / 2;
    std::vector<PauliOperator> images;
    for (size_t col = 0; col < dim; col++) {
        BitVector x(k);
        BitVector z(k);
        for (size_t q = 0; q < k; q++) {
            x.set(q, matrix.get(2 * q, col));
            z.set(q, matrix.get(2 * q + 1, col));
        }
        PauliOperator p = PauliOperator::hermitian(x, z);
        images.push_back(signs[col] ? p.negated() : p);
    }
    return LogicalAction(std::move(images));
}

LogicalAction LogicalAction::pauli_frame(const PauliOperator &pauli) {
    LogicalAction out = identity(pauli.num_qubits());
    for (auto &img : out.images_) {
        if (anticommutes(img, pauli)) {
            img = img.negated();
        }
    }
    return out;
}

PauliOperator LogicalAction::apply(const PauliOperator &p) const {
    size_t k = num_qubits();
    if (p.num_qubits() != k) {
        throw DimensionError("applying a " + std::to_string(k) + "-qubit action to a " +
                             std::to_string(p.num_qubits()) + "-qubit Pauli");
    }
    // p = i^phase prod_q X_q^{x_q} Z_q^{z_q}; conjugation is multiplicative.
    PauliOperator acc(static_cast<uint8_t>(p.phase()), BitVector(k), BitVector(k));
    for (size_t q = 0; q < k; q++) {
        if (p.x()[q]) {
            acc = acc * image_x(q);
        }
        if (p.z()[q]) {
            acc = acc * image_z(q);
        }
    }
    return acc;
}

LogicalAction LogicalAction::then(const LogicalAction &next) const {
    if (next.num_qubits() != num_qubits()) {
        throw DimensionError("composing logical actions on different qubit counts");
    }
    std::vector<PauliOperator> images;
    images.reserve(images_.size());
    for (const auto &img : images_) {
        images.push_back(next.apply(img));
    }
    return LogicalAction(std::move(images));
}

GF2Matrix LogicalAction::symplectic() const {
    size_t dim = images_.size();
    GF2Matrix m(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        BitVector v = interleaved(images_[col]);
        for (size_t r = 0; r < dim; r++) {
            m.set(r, col, v[r]);
        }
    }
    return m;
}

BitVector LogicalAction::signs() const {
    BitVector s(images_.size());
    for (size_t i = 0; i < images_.size(); i++) {
        s.set(i, images_[i].is_negative());
    }
    return s;
}

bool LogicalAction::is_symplectic() const {
    size_t dim = images_.size();
    GF2Matrix a = symplectic();
    GF2Matrix j(dim, dim);
    for (size_t q = 0; q < dim / 2; q++) {
        j.set(2 * q, 2 * q + 1, true);
        j.set(2 * q + 1, 2 * q, true);
    }
    return a.transposed().multiply(j).multiply(a) == j;
}

bool LogicalAction::is_identity() const {
    return *this == identity(num_qubits());
}

bool LogicalAction::same_symplectic(const LogicalAction &other) const {
    if (images_.size() != other.images_.size()) {
        return false;
    }
    for (size_t i = 0; i < images_.size(); i++) {
        if (!images_[i].same_support(other.images_[i])) {
            return false;
        }
    }
    return true;
}

std::string LogicalAction::str() const {
    std::string out;
    for (size_t i = 0; i < images_.size(); i++) {
        if (i) {
            out += ", ";
        }
        out += (i % 2 == 0 ? "X" : "Z") + std::to_string(i / 2) + "->";
        const auto &img = images_[i];
        out += img.is_negative() ? "-" : "+";
        bool any = false;
        for (size_t q = 0; q < img.num_qubits(); q++) {
            char c = img.letter(q);
            if (c != 'I') {
                out += c + std::to_string(q);
                any = true;
            }
        }
        if (!any) {
            out += "I";
        }
    }
    return out;
}

const char *to_string(RewiringType type) {
    switch (type) {
        case RewiringType::Identity:
            return "identity";
        case RewiringType::SqrtX:
            return "sqrt(X)-type";
        case RewiringType::SqrtZ:
            return "sqrt(Z)-type";
        case RewiringType::SqrtY:
            return "sqrt(Y)-type";
        default:
            return "other";
    }
}

RewiringType classify(const LogicalAction &action, size_t qubit) {
    size_t k = action.num_qubits();
    for (size_t q = 0; q < k; q++) {
        if (q == qubit) {
            continue;
        }
        if (!action.image_x(q).same_support(PauliOperator::single(k, q, 'X')) ||
            !action.image_z(q).same_support(PauliOperator::single(k, q, 'Z'))) {
            return RewiringType::Other;
        }
    }
    auto is = [&](const PauliOperator &img, char letter) {
        return img.same_support(PauliOperator::single(k, qubit, letter));
    };
    const auto &x = action.image_x(qubit);
    const auto &z = action.image_z(qubit);
    if (is(x, 'X') && is(z, 'Z')) return RewiringType::Identity;
    if (is(x, 'X') && is(z, 'Y')) return RewiringType::SqrtX;
    if (is(x, 'Y') && is(z, 'Z')) return RewiringType::SqrtZ;
    if (is(x, 'Z') && is(z, 'X')) return RewiringType::SqrtY;
    return RewiringType::Other;
}

std::optional<PauliOperator> pauli_correction(const LogicalAction &action, const LogicalAction &target) {
    if (!action.same_symplectic(target)) {
        return std::nullopt;
    }
    size_t k = action.num_qubits();
    // Conjugating image i by F flips its sign iff c(F, image_i) = 1.
    std::vector<BitVector> rows;
    BitVector rhs(2 * k);
    for (size_t i = 0; i < 2 * k; i++) {
        rows.push_back(action.images()[i].symplectic_row());
        rhs.set(i, action.images()[i].is_negative() != target.images()[i].is_negative());
    }
    auto sol = GF2Matrix::from_rows(rows).solve_affine(rhs);
    if (!sol) {
        throw InvariantError("images of a symplectic action are not independent");
    }
    // Unknown column is (f_z ; f_x).
    BitVector fz = sol->particular.slice(0, k);
    BitVector fx = sol->particular.slice(k, k);
    return PauliOperator::hermitian(fx, fz);
}

}  // namespace rewire
