#pragma once

#include "weightcx/finite_sets.hpp"
#include "weightcx/simplicial/truncated.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace weightcx::simplicial {

/// A class P of maps of finite sets.
class MorphismClass {
public:
    enum class Kind { surjective, bijective, fibers_of_size, fiber_sizes };

    static MorphismClass surjective() { return MorphismClass(Kind::surjective, {}); }
    static MorphismClass bijective() { return MorphismClass(Kind::bijective, {}); }
    /// Every fiber has exactly d elements.
    static MorphismClass fibers_of_size(std::size_t d) { return MorphismClass(Kind::fibers_of_size, {d}); }
    /// Every fiber size lies in the given table.
    static MorphismClass fiber_sizes(std::set<std::size_t> allowed)
    {
        return MorphismClass(Kind::fiber_sizes, std::move(allowed));
    }

    Kind kind() const { return kind_; }
    const std::set<std::size_t>& sizes() const { return sizes_; }
    std::string name() const;
    bool contains(const FiniteSetMap& f) const;

private:
    MorphismClass(Kind kind, std::set<std::size_t> sizes) : kind_(kind), sizes_(std::move(sizes)) {}

    Kind kind_;
    std::set<std::size_t> sizes_;
};

/// Base change of f : X → Y along g : Z → Y, i.e. X ×_Y Z → Z.
FiniteSetMap base_change(const FiniteSetMap& f, const FiniteSetMap& g);

struct ClassAxiomReport {
    bool contains_bijections = true;
    bool closed_under_composition = true;
    bool closed_under_base_change = true;
    /// First failing sample, if any.
    std::string counterexample;

    bool ok() const { return contains_bijections && closed_under_composition && closed_under_base_change; }
};

/// Spot-checks the class axioms on random maps between sets of size ≤ 4.
ClassAxiomReport check_class_axioms(const MorphismClass& p, std::uint64_t seed, int samples);

struct HypercoverReport {
    struct Degree {
        int degree = 0;
        bool in_class = false;
        std::size_t source_size = 0;
        std::size_t target_size = 0;
        std::vector<std::size_t> fiber_sizes;
    };
    std::string predicate;
    std::vector<Degree> degrees;

    bool ok() const;
    /// First failing degree, or -1.
    int first_failure() const;
};

/// The comparison map X_n → Cosk^Y_{n−1}(X)_n (X_0 → Y_0 for n = 0).
FiniteSetMap comparison_map(const SimplicialMap& f, int n);

/// Checks every comparison map for 0 ≤ n ≤ N against p. Throws
/// SimplicialError when f is not defined up to N.
HypercoverReport is_hypercover(const SimplicialMap& f, const MorphismClass& p, int up_to);

} // namespace weightcx::simplicial
