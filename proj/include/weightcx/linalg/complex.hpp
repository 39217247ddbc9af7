#pragma once

#include "weightcx/linalg/matrix.hpp"
#include "weightcx/linalg/sparse.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weightcx::linalg {

/// Raised when a QComplex is structurally inconsistent (shape mismatch or
/// d∘d ≠ 0).
class ComplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bounded chain complex of finite-dimensional rational vector spaces,
/// homologically graded: d_n : C_n → C_{n-1}.
///
/// The complex lives in degrees [lo, hi]; every dimension outside that range
/// is zero. An empty range (hi < lo) is the zero complex.
class QComplex {
public:
    QComplex() = default;

    /// `dims[k]` is dim C_{lo+k}; `differentials[k]` is d_{lo+k}. The lowest
    /// differential must have zero rows. Shapes are checked; d∘d is not (see
    /// `square_zero_failure`).
    QComplex(int lo, std::vector<std::size_t> dims, std::vector<QMatrix> differentials);
    QComplex(int lo, std::vector<std::size_t> dims, std::vector<SparseQMatrix> differentials);

    /// Builds the complex from dimensions only, with d_n taken from `d` when
    /// present and zero otherwise.
    static QComplex from_map(int lo, std::vector<std::size_t> dims, const std::map<int, QMatrix>& d);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }

    std::size_t dim(int n) const;
    /// d_n : C_n → C_{n-1}; a correctly shaped zero matrix outside the range.
    QMatrix differential(int n) const;
    /// The same map in sparse form.
    SparseQMatrix sparse_differential(int n) const;
    /// The stored d_n without copying, or null outside the range.
    const SparseQMatrix* stored_differential(int n) const;

    /// First degree n with d_{n-1} ∘ d_n ≠ 0, if any.
    std::optional<int> square_zero_failure() const;

private:
    void check_shapes() const;

    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<SparseQMatrix> d_;
};

/// dim H_n for every n in [lo, hi]. Throws ComplexError if d∘d ≠ 0.
std::map<int, std::size_t> homology_dims(const QComplex& c);

/// Σ (-1)^n dim C_n.
long euler_characteristic(const QComplex& c);

struct ContractionReport {
    bool ok = true;
    std::vector<int> failed_degrees;
};

/// Checks d_{n+1} h_n + h_{n-1} d_n = id on C_n for every n in
/// [first, last] (defaults: the whole complex). `h` maps degree n to
/// h_n : C_n → C_{n+1}; missing entries are zero. Throws ComplexError on a
/// shape mismatch.
ContractionReport verify_contracting_homotopy(const QComplex& c, const std::map<int, QMatrix>& h,
                                              std::optional<int> first = std::nullopt,
                                              std::optional<int> last = std::nullopt);
ContractionReport verify_contracting_homotopy(const QComplex& c, const std::map<int, SparseQMatrix>& h,
                                              std::optional<int> first = std::nullopt,
                                              std::optional<int> last = std::nullopt);

/// A degree-preserving family of matrices f_n : A_n → B_n.
using ChainMapMatrices = std::map<int, QMatrix>;

/// True iff f commutes with the differentials in every degree.
bool is_chain_map(const QComplex& source, const QComplex& target, const ChainMapMatrices& f);

/// Rank of the map H_n(source) → H_n(target) induced by the chain map f.
std::size_t induced_homology_rank(const QComplex& source, const QComplex& target,
                                  const ChainMapMatrices& f, int n);

} // namespace weightcx::linalg
