#pragma once

#include <string>
#include <vector>

namespace weightcx::simplicial {

/// A morphism θ : [m] → [n] of the simplex category: a weakly increasing map
/// {0..m} → {0..n}. `values[i]` = θ(i).
struct Monotone {
    std::vector<int> values;
    int target = 0;

    int source() const { return static_cast<int>(values.size()) - 1; }
    int operator()(int i) const { return values.at(static_cast<std::size_t>(i)); }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_identity() const;
    bool is_constant() const;

    /// "0012"-style digit string, used as a cell id of the standard simplex.
    std::string str() const;

    friend bool operator==(const Monotone&, const Monotone&) = default;
    friend auto operator<=>(const Monotone&, const Monotone&) = default;
};

Monotone identity_map(int n);
/// δ^i : [n-1] → [n], skipping i.
Monotone coface(int n, int i);
/// σ^i : [n+1] → [n], hitting i twice.
Monotone codegeneracy(int n, int i);

/// a ∘ b (apply b first).
Monotone compose(const Monotone& a, const Monotone& b);

/// θ = mono ∘ epi with epi surjective onto [k] and mono injective.
struct EpiMono {
    Monotone epi;
    Monotone mono;
};
EpiMono factor(const Monotone& theta);

/// All monotone maps [m] → [n] in lexicographic order.
std::vector<Monotone> all_monotone(int m, int n);
/// All injective monotone maps [m] → [n] (increasing sequences), lexicographic.
std::vector<Monotone> all_injective(int m, int n);
/// All surjective monotone maps [m] → [n], lexicographic.
std::vector<Monotone> all_surjective(int m, int n);

/// Indices j with α(j) = α(j+1) for a surjection α, ascending. The
/// degenerate cell α*(y) equals s_{j_r} ⋯ s_{j_1}(y) for these j.
std::vector<int> degeneracy_indices(const Monotone& surjection);

} // namespace weightcx::simplicial
