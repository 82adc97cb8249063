#pragma once

#include "blrc/gf.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace blrc {

/// Dense row-major matrix over a binary extension field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries);

    static Matrix identity(Field field, std::size_t order);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Symbol> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::vector<Symbol> column(std::size_t c) const;
    const std::vector<Symbol>& entries() const noexcept { return data_; }

    Matrix submatrix(std::span<const int> rowIdx, std::span<const int> colIdx) const;
    Matrix selectRows(std::span<const int> rowIdx) const;
    Matrix selectColumns(std::span<const int> colIdx) const;
    Matrix transpose() const;

    Matrix operator*(const Matrix& rhs) const;
    std::vector<Symbol> apply(std::span<const Symbol> x) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

// Rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

// Unique x with A x = b. A must have full column rank; throws NoSolution for
// rank-deficient or inconsistent systems.
std::vector<Symbol> solve(const Matrix& a, std::span<const Symbol> b);

// Some x with A x = b (free variables set to zero). Throws NoSolution when
// b is outside the column span.
std::vector<Symbol> solveAny(const Matrix& a, std::span<const Symbol> b);

// Inverse of a square matrix; throws NoSolution when singular.
Matrix inverse(const Matrix& a);

// True iff target lies in the column span of `columns`.
bool inSpan(std::span<const Symbol> target, const Matrix& columns);

// Basis of { y : y^T A = 0 }, one vector per row of the result.
Matrix leftNullspace(const Matrix& a);

} // namespace blrc
