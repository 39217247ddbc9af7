#pragma once

#include "weightcx/linalg/complex.hpp"
#include "weightcx/motives/additive.hpp"
#include "weightcx/motives/k0.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightcx::weight {

using motives::AdditiveObject;
using motives::KaroubiObject;
using motives::MotiveMorphism;
using motives::PresentedQCategory;
using motives::Realization;

class WeightError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bounded complex over the Karoubi completion, homologically graded.
/// `terms[k]` sits in degree lo + k and `d[k]` is d_{lo+k+1}, mapping term
/// k+1 to term k.
struct MotiveComplex {
    int lo = 0;
    std::vector<KaroubiObject> terms;
    std::vector<MotiveMorphism> d;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool empty() const { return terms.empty(); }
    /// The term in degree n; the zero object outside the range.
    KaroubiObject term(int n) const;
    /// d_n : C_n → C_{n−1}; zero outside the range.
    MotiveMorphism differential(int n) const;

    friend bool operator==(const MotiveComplex&, const MotiveComplex&) = default;
};

/// Builds a complex from plain additive terms.
MotiveComplex plain_complex(const PresentedQCategory& cat, int lo, const std::vector<AdditiveObject>& terms,
                            std::vector<MotiveMorphism> d);

/// Every violated invariant: typing, e'∘d∘e = d, and d∘d = 0.
std::vector<std::string> validate(const PresentedQCategory& cat, const MotiveComplex& c);

/// A degreewise family of morphisms between two complexes.
struct ChainMap {
    MotiveComplex source;
    MotiveComplex target;
    std::map<int, MotiveMorphism> components;

    MotiveMorphism component(int n) const;
};

ChainMap identity_chain_map(const PresentedQCategory& cat, const MotiveComplex& c);
/// Empty when f is a chain map; otherwise the offending degrees.
std::vector<std::string> chain_map_defects(const PresentedQCategory& cat, const ChainMap& f);
ChainMap compose(const PresentedQCategory& cat, const ChainMap& g, const ChainMap& f);

/// c[k]: (c[k])_n = c_{n−k} with differential (−1)^k d.
MotiveComplex shift(const PresentedQCategory& cat, const MotiveComplex& c, int k);

/// Cone(f)_n = Y_n ⊕ X_{n−1} with d = [[d_Y, f], [0, −d_X]]. Throws
/// WeightError when f is not a chain map.
MotiveComplex cone(const PresentedQCategory& cat, const ChainMap& f);

/// h(T) → h(X) → h(U) → h(T)[1] with U = Cone(f), X → U the inclusion
/// and U → T[1] the projection.
struct Triangle {
    MotiveComplex t;
    MotiveComplex x;
    MotiveComplex u;
    MotiveComplex t_shifted;
    ChainMap f;
    ChainMap g;
    ChainMap h;
    /// Null-homotopies of g∘f : T → U (s : T_n → U_{n+1}) and of
    /// f[1]∘h : U → X[1] (s : U_n → X[1]_{n+1}); h∘g is zero on the nose.
    std::map<int, MotiveMorphism> gf_homotopy;
    std::map<int, MotiveMorphism> fh_homotopy;
};

Triangle triangle(const PresentedQCategory& cat, const ChainMap& f);

struct TriangleReport {
    bool maps_are_chain_maps = false;
    bool formal_null_homotopies = false;
    /// Per realization: composites vanish on homology.
    std::map<std::string, bool> homology_composites_vanish;
    /// Per realization: χ(X) = χ(T) + χ(U).
    std::map<std::string, bool> euler_additive;

    bool ok() const;
};

TriangleReport check_triangle(const PresentedQCategory& cat, const Triangle& tri,
                              const std::vector<Realization>& realizations);

/// The realized complex: each term becomes the image of its realized
/// idempotent, with d restricted through a chosen image basis.
linalg::QComplex realize_complex(const PresentedQCategory& cat, const Realization& r, const MotiveComplex& c);
/// Chain map matrices in the image bases used by `realize_complex`.
linalg::ChainMapMatrices realize_chain_map(const PresentedQCategory& cat, const Realization& r, const ChainMap& f);

/// Σ (−1)^n [C_n] with realized ranks.
motives::K0Class euler_char(const PresentedQCategory& cat, const MotiveComplex& c,
                            const std::vector<Realization>& realizations);

/// A complex concentrated in degree 0.
MotiveComplex concentrated(const KaroubiObject& k);

} // namespace weightcx::weight
