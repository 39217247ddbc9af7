#pragma once

#include "weightcx/motives/additive.hpp"

#include <string>
#include <vector>

namespace weightcx::motives {

/// A finite group given by its multiplication table over named elements.
class FiniteGroup {
public:
    /// `table[g][h]` is the index of g·h. Throws MotiveError unless the
    /// table is closed, associative, has an identity and inverses.
    FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table);

    std::size_t order() const { return elements_.size(); }
    const std::string& name(std::size_t g) const { return elements_.at(g); }
    std::size_t element(const std::string& name) const;
    std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t g) const { return inverse_.at(g); }

    static FiniteGroup cyclic(std::size_t n);
    /// S_3 acting on {0,1,2}; elements named by images, e.g. "120".
    static FiniteGroup symmetric3();

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// A left action g ↦ act(g) on a fixed additive object.
struct GroupAction {
    FiniteGroup group;
    AdditiveObject object;
    std::vector<MotiveMorphism> act;
};

/// Throws MotiveError unless act(g)∘act(h) = act(gh) and act(1) = id.
void validate_action(const PresentedQCategory& cat, const GroupAction& a);

/// (object, (1/|G|) Σ_g act(g)), with e∘e = e checked.
KaroubiObject average_projector(const PresentedQCategory& cat, const GroupAction& a);

/// (1/|G|) Σ_g trace(realized act(g)).
Rat character_average(const PresentedQCategory& cat, const Realization& r, const GroupAction& a);

/// Q[G] as a category with one object; the basis of its endomorphisms is
/// the group, composed by the group law.
PresentedQCategory group_algebra(const FiniteGroup& g, const std::string& object = "P");

/// G acting on the single object of group_algebra(g) through its basis.
GroupAction regular_action(const PresentedQCategory& cat, const FiniteGroup& g);

/// Realization of group_algebra(g) by permutation matrices; perm[h][i] is
/// the image of point i under h.
Realization permutation_realization(const PresentedQCategory& cat, const FiniteGroup& g, std::string name,
                                    const std::vector<std::vector<std::size_t>>& perm);

} // namespace weightcx::motives
