#pragma once

#include "weightcx/weight/simplicial_motive.hpp"

#include <string>
#include <vector>

namespace weightcx::weight {

/// A square of simplicial motive maps
///   X --g--> Y
///   |a       |b
///   Z --f--> W
/// expected to commute: b∘g = f∘a.
struct MotiveSquare {
    SimplicialMotiveMap g;
    SimplicialMotiveMap f;
    SimplicialMotiveMap a;
    SimplicialMotiveMap b;
};

struct UniversalReport {
    struct Degree {
        int degree = 0;
        std::size_t source_homology = 0; ///< dim H_n cone(Γg)
        std::size_t target_homology = 0; ///< dim H_n cone(Γf)
        std::size_t induced_rank = 0;
        bool iso = false;
    };
    int level = 0;
    /// Realization name ↦ degrees 0..level−1.
    std::map<std::string, std::vector<Degree>> realizations;

    bool ok() const;
};

/// Checks that cone(Γg) → cone(Γf), given by b ⊕ a, is an isomorphism on
/// realized homology in degrees below `level` (defaults to the simplicial
/// level). Throws WeightError when the square does not commute.
UniversalReport verify_universal_equivalence(const PresentedQCategory& cat, const MotiveSquare& square,
                                             const std::vector<Realization>& realizations, int level = -1);

/// The chain map cone(Γg) → cone(Γf).
ChainMap cone_comparison(const PresentedQCategory& cat, const MotiveSquare& square);

} // namespace weightcx::weight
