#include "rewire/gf2.h"

#include <limits>
#include <utility>

#include "rewire/errors.h"

namespace rewire {

uint64_t AffineSolutionSpace::size() const {
    if (basis.size() >= 63) {
        return uint64_t{1} << 63;
    }
    return uint64_t{1} << basis.size();
}

BitVector AffineSolutionSpace::member(uint64_t index) const {
    BitVector result = particular;
    size_t d = basis.size();
    for (size_t i = 0; i < d; i++) {
        size_t shift = d - 1 - i;
        if (shift < 64 && ((index >> shift) & 1)) {
            result ^= basis[i];
        }
    }
    return result;
}

BitVector AffineSolutionSpace::combine(const BitVector &coefficients) const {
    if (coefficients.size() != basis.size()) {
        throw DimensionError("coefficient vector has length " + std::to_string(coefficients.size()) +
                             " but the nullspace has dimension " + std::to_string(basis.size()));
    }
    BitVector result = particular;
    for (size_t i = 0; i < basis.size(); i++) {
        if (coefficients[i]) {
            result ^= basis[i];
        }
    }
    return result;
}

GF2Matrix::GF2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
}

GF2Matrix GF2Matrix::from_rows(std::vector<BitVector> rows, size_t cols) {
    GF2Matrix m;
    m.cols_ = rows.empty() ? cols : rows[0].size();
    for (const auto &r : rows) {
        if (r.size() != m.cols_) {
            throw DimensionError("matrix rows have inconsistent widths " + std::to_string(m.cols_) + " and " +
                                 std::to_string(r.size()));
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

GF2Matrix GF2Matrix::identity(size_t size) {
    GF2Matrix m(size, size);
    for (size_t k = 0; k < size; k++) {
        m.set(k, k, true);
    }
    return m;
}

void GF2Matrix::append_row(BitVector row) {
    if (rows_.empty() && cols_ == 0) {
        cols_ = row.size();
    }
    if (row.size() != cols_) {
        throw DimensionError("appended row has width " + std::to_string(row.size()) + ", expected " +
                             std::to_string(cols_));
    }
    rows_.push_back(std::move(row));
}

GF2Matrix GF2Matrix::rref() const {
    GF2Matrix m = *this;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols_ && pivot_row < m.rows(); c++) {
        size_t found = pivot_row;
        while (found < m.rows() && !m.rows_[found][c]) {
            found++;
        }
        if (found == m.rows()) {
            continue;
        }
        std::swap(m.rows_[pivot_row], m.rows_[found]);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != pivot_row && m.rows_[r][c]) {
                m.rows_[r] ^= m.rows_[pivot_row];
            }
        }
        pivot_row++;
    }
    return m;
}

size_t GF2Matrix::rank() const {
    GF2Matrix reduced = rref();
    size_t r = 0;
    while (r < reduced.rows() && reduced.rows_[r].any()) {
        r++;
    }
    return r;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitVector GF2Matrix::multiply(const BitVector &column) const {
    if (column.size() != cols_) {
        throw DimensionError("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                             std::to_string(column.size()));
    }
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        out.set(r, rows_[r].dot(column));
    }
    return out;
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix &other) const {
    if (other.rows() != cols_) {
        throw DimensionError("matrix product shape mismatch");
    }
    GF2Matrix t = other.transposed();
    GF2Matrix out(rows(), other.cols());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < other.cols(); c++) {
            out.set(r, c, rows_[r].dot(t.rows_[c]));
        }
    }
    return out;
}

std::optional<AffineSolutionSpace> GF2Matrix::solve_affine(const BitVector &rhs) const {
    if (rhs.size() != rows()) {
        throw DimensionError("right-hand side has length " + std::to_string(rhs.size()) + " but the matrix has " +
                             std::to_string(rows()) + " rows");
    }
    // Row-reduce the augmented matrix [M | rhs].
    std::vector<BitVector> aug;
    aug.reserve(rows());
    for (size_t r = 0; r < rows(); r++) {
        BitVector extra(1);
        extra.set(0, rhs[r]);
        aug.push_back(rows_[r].concat(extra));
    }
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols_ && pivot_row < aug.size(); c++) {
        size_t found = pivot_row;
        while (found < aug.size() && !aug[found][c]) {
            found++;
        }
        if (found == aug.size()) {
            continue;
        }
        std::swap(aug[pivot_row], aug[found]);
        for (size_t r = 0; r < aug.size(); r++) {
            if (r != pivot_row && aug[r][c]) {
                aug[r] ^= aug[pivot_row];
            }
        }
        pivots.push_back(c);
        pivot_row++;
    }
    for (size_t r = pivot_row; r < aug.size(); r++) {
        if (aug[r][cols_]) {
            return std::nullopt;
        }
    }

    AffineSolutionSpace space;
    space.particular = BitVector(cols_);
    for (size_t i = 0; i < pivots.size(); i++) {
        space.particular.set(pivots[i], aug[i][cols_]);
    }
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    for (size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(cols_);
        v.set(free, true);
        for (size_t i = 0; i < pivots.size(); i++) {
            if (aug[i][free]) {
                v.set(pivots[i], true);
            }
        }
        space.basis.push_back(std::move(v));
    }
    return space;
}

std::string GF2Matrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out.push_back('\n');
    }
    return out;
}

GF2Matrix build_lambda(const GF2Matrix &check, const std::optional<BitVector> &alpha,
                       std::span<const BitVector> logical_rows) {
    GF2Matrix out = GF2Matrix::from_rows({}, check.cols());
    for (size_t r = 0; r < check.rows(); r++) {
        out.append_row(check.row(r));
    }
    if (alpha.has_value()) {
        out.append_row(*alpha);
    }
    for (const auto &row : logical_rows) {
        out.append_row(row);
    }
    return out;
}

}  // namespace rewire
