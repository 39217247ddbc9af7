#pragma once

#include "weightcx/linalg/matrix.hpp"

#include <utility>
#include <vector>

namespace weightcx::linalg {

/// Column-compressed exact matrix. Each column is sorted by row and holds
/// no explicit zeros.
class SparseQMatrix {
public:
    using Column = std::vector<std::pair<std::size_t, Rat>>;

    SparseQMatrix() = default;
    SparseQMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
    static SparseQMatrix from_dense(const QMatrix& m);
    static SparseQMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t c) const { return columns_.at(c); }
    std::size_t nonzeros() const;
    bool is_zero() const;

    Rat at(std::size_t r, std::size_t c) const;
    /// Adds v to entry (r, c).
    void add(std::size_t r, std::size_t c, const Rat& v);

    QMatrix to_dense() const;
    SparseQMatrix transpose() const;

    friend bool operator==(const SparseQMatrix&, const SparseQMatrix&) = default;

private:
    friend SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b);

    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b);
SparseQMatrix operator+(const SparseQMatrix& a, const SparseQMatrix& b);
SparseQMatrix operator-(const SparseQMatrix& a, const SparseQMatrix& b);
SparseQMatrix operator*(const Rat& s, const SparseQMatrix& a);

/// Exact rank by column reduction: each column is reduced against stored
/// pivots keyed by their lowest nonzero row until it vanishes or opens a
/// new pivot.
std::size_t rank(const SparseQMatrix& m);

} // namespace weightcx::linalg
