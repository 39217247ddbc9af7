#pragma once

#include "weightcx/linalg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace weightcx::linalg {

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rat>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_identity() const;
    QMatrix transpose() const;
    Rat trace() const;

    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const QMatrix& block);
    QMatrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

    QMatrix column(std::size_t c) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rat& s, const QMatrix& a);

/// Side-by-side concatenation; row counts must agree.
QMatrix hstack(const std::vector<QMatrix>& parts);
/// Block-diagonal sum.
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);

/// Exact rank by Gaussian elimination with full pivoting.
std::size_t rank(const QMatrix& m);

/// Basis of the null space as column vectors (cols x 1). The basis is the
/// standard one read off the reduced row echelon form: one vector per free
/// column, with a 1 in that column.
std::vector<QMatrix> kernel_basis(const QMatrix& m);

/// Columns of `m` that form a basis of its column space (pivot columns),
/// packed into a matrix.
QMatrix column_space_basis(const QMatrix& m);

/// For a matrix with linearly independent columns, a left inverse L with
/// L * m = I.
QMatrix left_inverse(const QMatrix& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
QMatrix inverse(const QMatrix& m);

} // namespace weightcx::linalg
