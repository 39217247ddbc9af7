#pragma once

#include "weightcx/motives/group.hpp"
#include "weightcx/weight/complex.hpp"

#include <string>
#include <vector>

namespace weightcx::weight {

/// A simplicial object in additive motives, truncated at level().
/// faces[n][i] : X_n → X_{n−1} for n ≥ 1 (faces[0] is empty);
/// degeneracies[n][i] : X_n → X_{n+1} for n < level().
struct SimplicialMotive {
    std::vector<AdditiveObject> components;
    std::vector<std::vector<MotiveMorphism>> faces;
    std::vector<std::vector<MotiveMorphism>> degeneracies;

    int level() const { return static_cast<int>(components.size()) - 1; }
};

/// Shape and simplicial-identity failures; empty when valid.
std::vector<std::string> validate(const PresentedQCategory& cat, const SimplicialMotive& x);

/// Every face and degeneracy the identity of `a`.
SimplicialMotive constant_motive(const PresentedQCategory& cat, const AdditiveObject& a, int level);

struct SimplicialMotiveMap {
    SimplicialMotive source;
    SimplicialMotive target;
    std::vector<MotiveMorphism> components;
};

/// Typing and commutation with faces and degeneracies; empty when valid.
std::vector<std::string> validate(const PresentedQCategory& cat, const SimplicialMotiveMap& f);

/// The complex Γ(X_n) with d_n = Σ (−1)^i d_i, degrees 0..level. Throws
/// WeightError when x is invalid or d∘d ≠ 0.
MotiveComplex gamma(const PresentedQCategory& cat, const SimplicialMotive& x);
ChainMap gamma_map(const PresentedQCategory& cat, const SimplicialMotiveMap& f);

/// How d_0 of the bar object acts on the X factor.
enum class BarFace {
    inverse, ///< d_0(x; g_1, …) = (g_1⁻¹·x; g_2, …)
    direct,  ///< d_0(x; g_1, …) = (g_1·x; g_2, …); not simplicial for nonabelian G
};

/// X × G^k in degree k, as |G|^k copies of the acted object (tuples in lex
/// order, outer), for k ≤ level. d_i multiplies g_i g_{i+1} for 0 < i < k,
/// d_k drops g_k, s_i inserts the identity after position i.
SimplicialMotive bar_object(const PresentedQCategory& cat, const motives::GroupAction& a, int level,
                            BarFace face = BarFace::inverse);

/// gamma(bar_object(a, level)) after validating the action and the
/// simplicial identities.
MotiveComplex bar_quotient(const PresentedQCategory& cat, const motives::GroupAction& a, int level);

/// The image of the averaging projector.
KaroubiObject invariants_motive(const PresentedQCategory& cat, const motives::GroupAction& a);

} // namespace weightcx::weight
