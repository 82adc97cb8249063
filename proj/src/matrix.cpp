#include "blrc/matrix.hpp"

#include "blrc/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace blrc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match dimensions");
    for (Symbol s : data_) {
        if (!field_.contains(s))
            throw std::invalid_argument("matrix entry outside field");
    }
}

Matrix Matrix::identity(Field field, std::size_t order)
{
    Matrix m(std::move(field), order, order);
    for (std::size_t i = 0; i < order; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Symbol> Matrix::column(std::size_t c) const
{
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::submatrix(std::span<const int> rowIdx, std::span<const int> colIdx) const
{
    Matrix out(field_, rowIdx.size(), colIdx.size());
    for (std::size_t i = 0; i < rowIdx.size(); ++i)
        for (std::size_t j = 0; j < colIdx.size(); ++j)
            out(i, j) = (*this)(static_cast<std::size_t>(rowIdx[i]), static_cast<std::size_t>(colIdx[j]));
    return out;
}

Matrix Matrix::selectRows(std::span<const int> rowIdx) const
{
    Matrix out(field_, rowIdx.size(), cols_);
    for (std::size_t i = 0; i < rowIdx.size(); ++i)
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rowIdx[i] * cols_), cols_,
                    out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    return out;
}

Matrix Matrix::selectColumns(std::span<const int> colIdx) const
{
    Matrix out(field_, rows_, colIdx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < colIdx.size(); ++j)
            out(r, j) = (*this)(r, static_cast<std::size_t>(colIdx[j]));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (!(field_ == rhs.field_))
        throw FieldMismatch();
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Symbol a = (*this)(i, t);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) ^= field_.mul(a, rhs(t, j));
        }
    return out;
}

std::vector<Symbol> Matrix::apply(std::span<const Symbol> x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("vector length does not match matrix columns");
    std::vector<Symbol> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Symbol acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc ^= field_.mul((*this)(i, j), x[j]);
        out[i] = acc;
    }
    return out;
}

namespace {

// Reduces `m` in place to row echelon form, touching only the first
// `pivotCols` columns for pivot selection. Returns pivot column per pivot row.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t pivotCols, bool reduced)
{
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivotCols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(p, c), m(row, c));
        const Symbol scale = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) = f.mul(m(row, c), scale);
        for (std::size_t r = reduced ? 0 : row + 1; r < m.rows(); ++r) {
            if (r == row)
                continue;
            const Symbol factor = m(r, col);
            if (factor == 0)
                continue;
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) ^= f.mul(factor, m(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix augment(const Matrix& a, std::span<const Symbol> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("right-hand side length does not match rows");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    return aug;
}

} // namespace

std::size_t rank(const Matrix& m)
{
    Matrix work = m;
    return eliminate(work, work.cols(), false).size();
}

std::vector<Symbol> solveAny(const Matrix& a, std::span<const Symbol> b)
{
    Matrix aug = augment(a, b);
    const auto pivots = eliminate(aug, a.cols(), true);
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
        if (aug(r, a.cols()) != 0)
            throw NoSolution("inconsistent linear system");
    }
    std::vector<Symbol> x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, a.cols());
    return x;
}

std::vector<Symbol> solve(const Matrix& a, std::span<const Symbol> b)
{
    if (rank(a) != a.cols())
        throw NoSolution("singular linear system");
    return solveAny(a, b);
}

Matrix inverse(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    if (eliminate(aug, n, true).size() != n)
        throw NoSolution("singular matrix");
    Matrix out(a.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = aug(r, n + c);
    return out;
}

bool inSpan(std::span<const Symbol> target, const Matrix& columns)
{
    Matrix aug = augment(columns, target);
    const auto pivots = eliminate(aug, aug.cols(), false);
    return pivots.empty() || pivots.back() != columns.cols();
}

Matrix leftNullspace(const Matrix& a)
{
    // y^T A = 0  <=>  A^T y = 0.
    Matrix t = a.transpose();
    const auto pivots = eliminate(t, t.cols(), true);
    std::vector<bool> isPivot(t.cols(), false);
    for (auto p : pivots)
        isPivot[p] = true;
    const std::size_t nullity = t.cols() - pivots.size();
    Matrix basis(a.field(), nullity, t.cols());
    std::size_t out = 0;
    for (std::size_t freeCol = 0; freeCol < t.cols(); ++freeCol) {
        if (isPivot[freeCol])
            continue;
        basis(out, freeCol) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(out, pivots[i]) = t(i, freeCol); // characteristic 2: -x == x
        ++out;
    }
    return basis;
}

} // namespace blrc
