#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rewire/bit_vector.h"

namespace rewire {

/// The full solution set  particular + span(basis)  of a linear system over GF(2).
struct AffineSolutionSpace {
    BitVector particular;
    std::vector<BitVector> basis;

    size_t dimension() const {
        return basis.size();
    }
    /// Number of members, saturating at 2^63.
    uint64_t size() const;
    /// Member number `index` in lexicographic order of the coefficient vector,
    /// the coefficient of basis[0] being the most significant. index 0 is the
    /// particular solution.
    BitVector member(uint64_t index) const;
    /// particular + sum of basis[i] where coefficients[i] is set.
    BitVector combine(const BitVector &coefficients) const;
};

/// Dense row-major matrix over GF(2).
class GF2Matrix {
   public:
    GF2Matrix() = default;
    GF2Matrix(size_t rows, size_t cols);
    /// All rows must share one length. An empty list yields a 0 x `cols` matrix.
    static GF2Matrix from_rows(std::vector<BitVector> rows, size_t cols = 0);
    static GF2Matrix identity(size_t size);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    void append_row(BitVector row);

    /// Reduced row echelon form; zero rows are kept at the bottom so the shape is unchanged.
    GF2Matrix rref() const;
    size_t rank() const;
    GF2Matrix transposed() const;
    BitVector multiply(const BitVector &column) const;
    GF2Matrix multiply(const GF2Matrix &other) const;

    /// All x with M x = rhs, or nullopt when rhs is outside the column space.
    std::optional<AffineSolutionSpace> solve_affine(const BitVector &rhs) const;

    bool operator==(const GF2Matrix &other) const = default;
    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Builds the stacked matrix
///
///     [ check rows ]
///     [ alpha row  ]   (when present)
///     [ L_X(1)     ]
///     [ L_Z(1)     ]
///     [ ...        ]
///
/// Each row is an operator's symplectic row (x | z). Multiplying by the
/// column (beta_z ; beta_x) pairs the X block with beta_z and the Z block with
/// beta_x, so row r of the product is the commutation bit between row
/// operator r and the candidate  X^{beta_x} Z^{beta_z}.
GF2Matrix build_lambda(const GF2Matrix &check, const std::optional<BitVector> &alpha,
                       std::span<const BitVector> logical_rows);

}  // namespace rewire
