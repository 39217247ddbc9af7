#include "weightcx/linalg/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace weightcx::linalg {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols)
{
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

bool QMatrix::is_zero() const
{
    for (const Rat& x : entries_)
        if (x != 0)
            return false;
    return true;
}

bool QMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Rat QMatrix::trace() const
{
    Rat t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

void QMatrix::set_block(std::size_t r, std::size_t c, const QMatrix& block)
{
    if (r + block.rows() > rows_ || c + block.cols() > cols_)
        throw std::out_of_range("block does not fit");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            (*this)(r + i, c + j) = block(i, j);
}

QMatrix QMatrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const
{
    if (r + rows > rows_ || c + cols > cols_)
        throw std::out_of_range("block out of range");
    QMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = (*this)(r + i, c + j);
    return b;
}

QMatrix QMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

bool operator==(const QMatrix& a, const QMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string QMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ", ";
            out += linalg::to_string((*this)(r, c));
        }
        out += "]";
    }
    return out + "]";
}

QMatrix operator+(const QMatrix& a, const QMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    QMatrix s(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            s(r, c) = a(r, c) + b(r, c);
    return s;
}

QMatrix operator-(const QMatrix& a) { return Rat(-1) * a; }

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + (-b); }

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    QMatrix p(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& x = a(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (sgn(b(k, c)) != 0)
                    p(r, c) += x * b(k, c);
        }
    return p;
}

QMatrix operator*(const Rat& s, const QMatrix& a)
{
    QMatrix p(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            p(r, c) = s * a(r, c);
    return p;
}

QMatrix hstack(const std::vector<QMatrix>& parts)
{
    if (parts.empty())
        return {};
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != parts.front().rows())
            throw std::invalid_argument("hstack row mismatch");
        cols += p.cols();
    }
    QMatrix out(parts.front().rows(), cols);
    std::size_t at = 0;
    for (const auto& p : parts) {
        out.set_block(0, at, p);
        at += p.cols();
    }
    return out;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b)
{
    QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

std::size_t rank(const QMatrix& m)
{
    // Full pivoting: at step k any nonzero entry of the trailing submatrix is
    // swapped into (k, k). Over Q every nonzero pivot is exact, so the search
    // stops at the first one found.
    QMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t c = k; c < cols && pr == rows; ++c)
            for (std::size_t r = k; r < rows; ++r)
                if (a(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == rows)
            break;
        if (pr != k)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(a(pr, c), a(k, c));
        if (pc != k)
            for (std::size_t r = 0; r < rows; ++r)
                std::swap(a(r, pc), a(r, k));
        const Rat pivot = a(k, k);
        std::vector<std::size_t> support;
        for (std::size_t c = k; c < cols; ++c)
            if (sgn(a(k, c)) != 0)
                support.push_back(c);
        for (std::size_t r = k + 1; r < rows; ++r) {
            if (sgn(a(r, k)) == 0)
                continue;
            const Rat factor = a(r, k) / pivot;
            for (auto c : support)
                a(r, c) -= factor * a(k, c);
        }
    }
    return k;
}

namespace {

/// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> rref(QMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t pr = a.rows();
        for (std::size_t r = row; r < a.rows(); ++r)
            if (a(r, c) != 0) {
                pr = r;
                break;
            }
        if (pr == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(pr, j), a(row, j));
        const Rat inv = 1 / a(row, c);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c) == 0)
                continue;
            const Rat factor = a(r, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(r, j) -= factor * a(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<QMatrix> kernel_basis(const QMatrix& m)
{
    QMatrix a = m;
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<QMatrix> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        QMatrix v(a.cols(), 1);
        v(free, 0) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v(pivots[i], 0) = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix column_space_basis(const QMatrix& m)
{
    QMatrix a = m;
    const auto pivots = rref(a);
    QMatrix out(m.rows(), pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.set_block(0, i, m.column(pivots[i]));
    return out;
}

QMatrix inverse(const QMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug = hstack({m, QMatrix::identity(n)});
    const auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw std::domain_error("matrix is singular");
    return aug.block(0, n, n, n);
}

QMatrix left_inverse(const QMatrix& m)
{
    const QMatrix t = m.transpose();
    return inverse(t * m) * t;
}

} // namespace weightcx::linalg
