#pragma once

#include "weightcx/finite_sets.hpp"
#include "weightcx/linalg/complex.hpp"
#include "weightcx/simplicial/hypercover.hpp"
#include "weightcx/simplicial/truncated.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace weightcx::descent {

using linalg::QComplex;
using linalg::QMatrix;
using simplicial::SimplicialMap;
using simplicial::TruncatedSimplicialSet;

class DescentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Čech nerve of p : X → Y up to `level`: degree n holds the tuples
/// (x_0,…,x_n) with a common image, in lexicographic order of indices.
/// Faces delete a coordinate, degeneracies repeat one. Degree-0 ids are the
/// ids of X; higher ids are "(x0,…,xn)".
TruncatedSimplicialSet cech_nerve(const FiniteSetMap& p, int level);

/// Rational chains: C_n = Q^{cells(n)}, d_n = Σ (−1)^i (d_i)_*. With an
/// augmentation ε : X_0 → Y the complex gains C_{−1} = Q^Y and d_0 = ε_*.
/// Throws DescentError on invalid simplicial data or a mistyped ε.
QComplex linearize(const TruncatedSimplicialSet& x, const std::optional<FiniteSetMap>& augmentation = std::nullopt);

/// f_* in each degree 0..level(f).
linalg::ChainMapMatrices linearize_map(const SimplicialMap& f);

/// The augmented chain complex of the Čech nerve of p.
struct AugmentedCechComplex {
    FiniteSetMap base;
    int level = 0;
    TruncatedSimplicialSet nerve;
    QComplex complex;
};

AugmentedCechComplex augmented_cech(const FiniteSetMap& p, int level);

/// Common fiber size of p; throws DescentError when fibers differ in size
/// or are empty.
std::size_t constant_fiber_size(const FiniteSetMap& p);

/// Transfer homotopy h_n : C_n → C_{n+1} for −1 ≤ n ≤ level−1,
/// t ↦ ((−1)^{n+1}/d) Σ_{x ∈ fiber} (t, x). Requires every fiber of p to
/// have the same size d ≥ 1.
std::map<int, linalg::SparseQMatrix> contracting_homotopy(const FiniteSetMap& p, int level);

struct AcyclicityReport {
    int level = 0;
    bool surjective = false;
    std::map<int, std::size_t> homology;
    /// Homology vanishes in degrees −1..level−1.
    bool acyclic = false;
};

AcyclicityReport verify_cech_acyclic(const FiniteSetMap& p, int level);

/// Chain complexes of the degreewise linearizations and the induced map.
/// The coefficient system is concentrated in one degree, so the total
/// complex of a simplicial object is its linearization.
struct TotalComplexes {
    QComplex source;
    QComplex target;
    linalg::ChainMapMatrices map;
};

/// Throws DescentError on a level mismatch.
TotalComplexes total_complex(const SimplicialMap& f);

struct DescentReport {
    struct Degree {
        int degree = 0;
        std::size_t source_homology = 0;
        std::size_t target_homology = 0;
        std::size_t induced_rank = 0;
        bool iso = false;
    };
    int level = 0;
    simplicial::HypercoverReport hypercover;
    std::vector<Degree> degrees;

    /// The induced map is an isomorphism in every degree below the level.
    bool iso_below_level() const;
    bool ok() const { return hypercover.ok() && iso_below_level(); }
};

/// Compares total-complex homology in degrees < level. Throws DescentError
/// when f is not defined up to `level`.
DescentReport verify_descent(const SimplicialMap& f, int level);

} // namespace weightcx::descent
