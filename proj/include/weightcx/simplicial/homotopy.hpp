#pragma once

#include "weightcx/finite_sets.hpp"
#include "weightcx/simplicial/truncated.hpp"

namespace weightcx::simplicial {

/// A simplicial homotopy h : X × Δ[1] → Y from `end0` to `end1`.
struct Homotopy {
    TruncatedSimplicialSet source;
    TruncatedSimplicialSet target;
    /// product(source, Δ[1]) → target.
    SimplicialMap map;
    SimplicialMap end0;
    SimplicialMap end1;
};

struct HomotopyCheck {
    ValidationReport map_report;
    bool end0_ok = false;
    bool end1_ok = false;

    bool ok() const { return map_report.ok() && end0_ok && end1_ok; }
};

/// Validates h.map as a simplicial map and compares its restrictions to the
/// vertices 0 and 1 of Δ[1] with the two endpoint maps.
HomotopyCheck check_homotopy(const Homotopy& h);

/// The restriction of h.map along X × {i} ⊂ X × Δ[1].
SimplicialMap restrict_to_end(const Homotopy& h, int i);

/// f0, f1 : X → Y of sets give cosk_0(f0) ≃ cosk_0(f1): the p-cell
/// ((x_0,…,x_p), φ) goes to (f_{φ(0)}(x_0),…,f_{φ(p)}(x_p)).
Homotopy build_homotopy_cosk0(const FiniteSetMap& f0, const FiniteSetMap& f1, int level);

/// Homotopy Cosk^S_n(f0) ≃ Cosk^S_n(f1) for f0, f1 : X → Y over S
/// (x_to_s = y_to_s ∘ f_i) agreeing below degree n. On n-simplices the
/// homotopy is f_i over the constant φ = i and f0 elsewhere; higher
/// degrees follow through the coskeleton. Throws SimplicialError when the
/// maps disagree below n or do not lie over S.
Homotopy build_homotopy_coskn(const SimplicialMap& f0, const SimplicialMap& f1, const SimplicialMap& x_to_s,
                              const SimplicialMap& y_to_s, int n, int level);

} // namespace weightcx::simplicial
