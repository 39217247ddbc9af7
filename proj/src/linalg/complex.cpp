#include "weightcx/linalg/complex.hpp"

#include <string>

namespace weightcx::linalg {

QComplex::QComplex(int lo, std::vector<std::size_t> dims, std::vector<QMatrix> differentials)
    : lo_(lo), dims_(std::move(dims))
{
    d_.reserve(differentials.size());
    for (const auto& m : differentials)
        d_.push_back(SparseQMatrix::from_dense(m));
    check_shapes();
}

QComplex::QComplex(int lo, std::vector<std::size_t> dims, std::vector<SparseQMatrix> differentials)
    : lo_(lo), dims_(std::move(dims)), d_(std::move(differentials))
{
    check_shapes();
}

void QComplex::check_shapes() const
{
    if (d_.size() != dims_.size())
        throw ComplexError("expected " + std::to_string(dims_.size()) + " differentials, got " +
                           std::to_string(d_.size()));
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const std::size_t below = k == 0 ? 0 : dims_[k - 1];
        if (d_[k].rows() != below || d_[k].cols() != dims_[k])
            throw ComplexError("differential d_" + std::to_string(lo_ + static_cast<int>(k)) + " has shape " +
                               std::to_string(d_[k].rows()) + "x" + std::to_string(d_[k].cols()) + ", expected " +
                               std::to_string(below) + "x" + std::to_string(dims_[k]));
    }
}

QComplex QComplex::from_map(int lo, std::vector<std::size_t> dims, const std::map<int, QMatrix>& d)
{
    std::vector<QMatrix> ds;
    ds.reserve(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const int n = lo + static_cast<int>(k);
        auto it = d.find(n);
        if (it != d.end())
            ds.push_back(it->second);
        else
            ds.push_back(QMatrix::zero(k == 0 ? 0 : dims[k - 1], dims[k]));
    }
    return QComplex(lo, std::move(dims), std::move(ds));
}

std::size_t QComplex::dim(int n) const
{
    if (n < lo_ || n > hi())
        return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
}

QMatrix QComplex::differential(int n) const { return sparse_differential(n).to_dense(); }

SparseQMatrix QComplex::sparse_differential(int n) const
{
    if (n < lo_ || n > hi())
        return SparseQMatrix(dim(n - 1), dim(n));
    return d_[static_cast<std::size_t>(n - lo_)];
}

const SparseQMatrix* QComplex::stored_differential(int n) const
{
    if (n < lo_ || n > hi())
        return nullptr;
    return &d_[static_cast<std::size_t>(n - lo_)];
}

std::optional<int> QComplex::square_zero_failure() const
{
    for (int n = lo_ + 1; n <= hi(); ++n)
        if (!(d_[static_cast<std::size_t>(n - 1 - lo_)] * d_[static_cast<std::size_t>(n - lo_)]).is_zero())
            return n;
    return std::nullopt;
}

std::map<int, std::size_t> homology_dims(const QComplex& c)
{
    if (auto bad = c.square_zero_failure())
        throw ComplexError("d_" + std::to_string(*bad - 1) + " ∘ d_" + std::to_string(*bad) + " ≠ 0");
    std::map<int, std::size_t> h;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::size_t cycles = c.dim(n) - rank(c.sparse_differential(n));
        h[n] = cycles - rank(c.sparse_differential(n + 1));
    }
    return h;
}

long euler_characteristic(const QComplex& c)
{
    long chi = 0;
    for (int n = c.lo(); n <= c.hi(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(n));
    return chi;
}

namespace {

const SparseQMatrix* homotopy_at(const QComplex& c, const std::map<int, SparseQMatrix>& h, int n)
{
    auto it = h.find(n);
    if (it == h.end())
        return nullptr;
    if (it->second.rows() != c.dim(n + 1) || it->second.cols() != c.dim(n))
        throw ComplexError("homotopy h_" + std::to_string(n) + " has shape " + std::to_string(it->second.rows()) +
                           "x" + std::to_string(it->second.cols()) + ", expected " + std::to_string(c.dim(n + 1)) +
                           "x" + std::to_string(c.dim(n)));
    return &it->second;
}

// Adds (outer * inner) e_j into acc, recording rows touched for the first time.
void accumulate(const SparseQMatrix* outer, const SparseQMatrix* inner, std::size_t j, std::vector<Rat>& acc,
                std::vector<char>& seen, std::vector<std::size_t>& touched, Rat& tmp)
{
    if (outer == nullptr || inner == nullptr)
        return;
    for (const auto& [i, v] : inner->column(j))
        for (const auto& [r, w] : outer->column(i)) {
            mpq_mul(tmp.get_mpq_t(), w.get_mpq_t(), v.get_mpq_t());
            mpq_add(acc[r].get_mpq_t(), acc[r].get_mpq_t(), tmp.get_mpq_t());
            if (!seen[r]) {
                seen[r] = 1;
                touched.push_back(r);
            }
        }
}

} // namespace

ContractionReport verify_contracting_homotopy(const QComplex& c, const std::map<int, SparseQMatrix>& h,
                                              std::optional<int> first, std::optional<int> last)
{
    for (const auto& [n, m] : h)
        (void)homotopy_at(c, h, n);
    ContractionReport report;
    const int from = first.value_or(c.lo());
    const int to = last.value_or(c.hi());
    std::vector<Rat> acc;
    std::vector<char> seen;
    std::vector<std::size_t> touched;
    Rat tmp;
    for (int n = from; n <= to; ++n) {
        const std::size_t size = c.dim(n);
        acc.assign(size, Rat(0));
        seen.assign(size, 0);
        const SparseQMatrix* h_n = homotopy_at(c, h, n);
        const SparseQMatrix* h_prev = homotopy_at(c, h, n - 1);
        const SparseQMatrix* d_next = c.stored_differential(n + 1);
        const SparseQMatrix* d_n = c.stored_differential(n);
        bool ok = true;
        for (std::size_t j = 0; j < size; ++j) {
            touched.clear();
            accumulate(d_next, h_n, j, acc, seen, touched, tmp);
            accumulate(h_prev, d_n, j, acc, seen, touched, tmp);
            if (!seen[j] || acc[j] != 1)
                ok = false;
            for (std::size_t r : touched) {
                if (r != j && sgn(acc[r]) != 0)
                    ok = false;
                acc[r] = 0;
                seen[r] = 0;
            }
            if (!ok)
                break;
        }
        if (!ok) {
            report.ok = false;
            report.failed_degrees.push_back(n);
        }
    }
    return report;
}

ContractionReport verify_contracting_homotopy(const QComplex& c, const std::map<int, QMatrix>& h,
                                              std::optional<int> first, std::optional<int> last)
{
    std::map<int, SparseQMatrix> sparse;
    for (const auto& [n, m] : h)
        sparse.emplace(n, SparseQMatrix::from_dense(m));
    return verify_contracting_homotopy(c, sparse, first, last);
}

namespace {

QMatrix component(const QComplex& s, const QComplex& t, const ChainMapMatrices& f, int n)
{
    auto it = f.find(n);
    if (it == f.end())
        return QMatrix::zero(t.dim(n), s.dim(n));
    if (it->second.rows() != t.dim(n) || it->second.cols() != s.dim(n))
        throw ComplexError("chain map component in degree " + std::to_string(n) + " has the wrong shape");
    return it->second;
}

} // namespace

bool is_chain_map(const QComplex& source, const QComplex& target, const ChainMapMatrices& f)
{
    const int lo = std::min(source.lo(), target.lo());
    const int hi = std::max(source.hi(), target.hi());
    for (int n = lo; n <= hi + 1; ++n) {
        const SparseQMatrix lhs = target.sparse_differential(n) * SparseQMatrix::from_dense(component(source, target, f, n));
        const SparseQMatrix rhs =
            SparseQMatrix::from_dense(component(source, target, f, n - 1)) * source.sparse_differential(n);
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

std::size_t induced_homology_rank(const QComplex& source, const QComplex& target, const ChainMapMatrices& f,
                                  int n)
{
    // rank of Z_n(S) → Z_n(T)/B_n(T) = rank[f·Z | B] − rank B.
    const auto cycles = kernel_basis(source.differential(n));
    const QMatrix fn = component(source, target, f, n);
    const QMatrix boundaries = target.differential(n + 1);
    std::vector<QMatrix> parts;
    for (const auto& z : cycles)
        parts.push_back(fn * z);
    parts.push_back(boundaries);
    const QMatrix joined = hstack(parts);
    return rank(joined) - rank(boundaries);
}

} // namespace weightcx::linalg
