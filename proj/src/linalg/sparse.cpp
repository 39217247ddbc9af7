#include "weightcx/linalg/sparse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace weightcx::linalg {

namespace {

/// a + s·b for sorted sparse columns.
SparseQMatrix::Column axpy(const SparseQMatrix::Column& a, const Rat& s, const SparseQMatrix::Column& b)
{
    SparseQMatrix::Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rat v = a[i].second + s * b[j].second;
            if (sgn(v) != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseQMatrix SparseQMatrix::from_dense(const QMatrix& m)
{
    SparseQMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, c)) != 0)
                s.columns_[c].emplace_back(r, m(r, c));
    return s;
}

SparseQMatrix SparseQMatrix::identity(std::size_t n)
{
    SparseQMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        s.columns_[i].emplace_back(i, Rat(1));
    return s;
}

std::size_t SparseQMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

bool SparseQMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

Rat SparseQMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it == col.end() || it->first != r)
        return 0;
    return it->second;
}

void SparseQMatrix::add(std::size_t r, std::size_t c, const Rat& v)
{
    if (r >= rows_ || c >= columns_.size())
        throw std::out_of_range("sparse entry out of range");
    if (sgn(v) == 0)
        return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        it->second += v;
        if (sgn(it->second) == 0)
            col.erase(it);
    } else {
        col.insert(it, {r, v});
    }
}

QMatrix SparseQMatrix::to_dense() const
{
    QMatrix m(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c])
            m(r, c) = v;
    return m;
}

SparseQMatrix SparseQMatrix::transpose() const
{
    SparseQMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c])
            t.columns_[r].emplace_back(c, v);
    return t;
}

SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("sparse product shape mismatch");
    SparseQMatrix p(a.rows(), b.cols());
    std::vector<Rat> acc(a.rows());
    std::vector<char> seen(a.rows(), 0);
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        touched.clear();
        for (const auto& [k, bv] : b.column(j))
            for (const auto& [i, av] : a.column(k)) {
                if (!seen[i]) {
                    seen[i] = 1;
                    acc[i] = 0;
                    touched.push_back(i);
                }
                acc[i] += av * bv;
            }
        std::sort(touched.begin(), touched.end());
        auto& col = p.columns_[j];
        for (auto i : touched) {
            seen[i] = 0;
            if (sgn(acc[i]) != 0)
                col.emplace_back(i, acc[i]);
        }
    }
    return p;
}

SparseQMatrix operator+(const SparseQMatrix& a, const SparseQMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sparse sum shape mismatch");
    SparseQMatrix s(a.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (const auto& [r, v] : axpy(a.column(c), Rat(1), b.column(c)))
            s.add(r, c, v);
    return s;
}

SparseQMatrix operator*(const Rat& s, const SparseQMatrix& a)
{
    SparseQMatrix out(a.rows(), a.cols());
    if (sgn(s) == 0)
        return out;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (const auto& [r, v] : a.column(c))
            out.add(r, c, s * v);
    return out;
}

SparseQMatrix operator-(const SparseQMatrix& a, const SparseQMatrix& b) { return a + Rat(-1) * b; }

std::size_t rank(const SparseQMatrix& m)
{
    std::vector<std::optional<SparseQMatrix::Column>> pivot(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        SparseQMatrix::Column v = m.column(c);
        while (!v.empty()) {
            const std::size_t low = v.back().first;
            auto& p = pivot[low];
            if (!p) {
                p = std::move(v);
                ++r;
                break;
            }
            const Rat factor = -v.back().second / p->back().second;
            v = axpy(v, factor, *p);
        }
    }
    return r;
}

} // namespace weightcx::linalg
