#pragma once

#include "weightcx/simplicial/truncated.hpp"

#include <string>
#include <vector>

namespace weightcx::simplicial {

/// A cell written in Eilenberg–Zilber normal form α*(y): `surjection`
/// α : [k] ↠ [ℓ] applied to the nondegenerate ℓ-cell `cell`.
struct NormalForm {
    Monotone surjection;
    std::size_t cell = 0;

    int dim() const { return surjection.source(); }
    int base_dim() const { return surjection.target; }
    bool nondegenerate() const { return surjection.is_identity(); }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
    friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// A finite simplicial set presented by its nondegenerate cells. Each
/// nondegenerate n-cell carries its n+1 faces in normal form; degenerate
/// cells are implicit. The object equals its own skeleton at
/// `generation_level()`.
class FiniteSimplicialSet {
public:
    FiniteSimplicialSet() = default;

    /// Adds a nondegenerate cell. Faces must reference cells already added
    /// (of lower dimension). Returns its index within its dimension.
    std::size_t add_cell(int dim, std::string id, std::vector<NormalForm> faces = {});

    int generation_level() const { return static_cast<int>(ids_.size()) - 1; }
    std::size_t count(int dim) const;
    std::size_t total_cells() const;
    const std::string& id(int dim, std::size_t c) const { return ids_.at(static_cast<std::size_t>(dim)).at(c); }
    std::size_t index(int dim, const std::string& id) const;
    const NormalForm& face(int dim, int i, std::size_t c) const;

    /// μ*(cell) for μ : [q] → [k], returned in normal form.
    NormalForm act(const Monotone& mu, const NormalForm& cell) const;

    /// Every cell of degree k in canonical order: nondegenerate cells first,
    /// then by decreasing base dimension and surjection order.
    std::vector<NormalForm> cells_in_degree(int k) const;

    /// Canonical id: the nondegenerate id, or "s{j_r}…s{j_1}(y)".
    std::string cell_id(const NormalForm& cell) const;
    /// Parses a canonical id back into a normal form. Throws on unknown ids.
    NormalForm parse_cell_id(const std::string& text) const;

    /// All cells up to `level` as an explicit truncated simplicial set.
    TruncatedSimplicialSet materialize(int level) const;

private:
    std::vector<std::vector<std::string>> ids_;
    std::vector<std::vector<std::vector<NormalForm>>> faces_;
};

/// Checks face ranges and d_i d_j = d_{j-1} d_i on every nondegenerate cell.
ValidationReport validate(const FiniteSimplicialSet& a);

inline NormalForm nondegenerate(int dim, std::size_t c) { return {identity_map(dim), c}; }

/// Δ[k] presented by its injective faces.
FiniteSimplicialSet standard_simplex_finite(int k);
/// The n-skeleton of Δ[p] (the subobject generated by faces of dimension ≤ n).
FiniteSimplicialSet simplex_skeleton(int p, int n);

/// A map of finite simplicial sets, given on nondegenerate cells.
struct FiniteSimplicialMap {
    std::vector<std::vector<NormalForm>> images; // images[dim][cell]
    const NormalForm& operator()(int dim, std::size_t c) const
    {
        return images.at(static_cast<std::size_t>(dim)).at(c);
    }
};

/// Checks that faces of images agree with images of faces.
ValidationReport validate(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target,
                          const FiniteSimplicialMap& f);

/// Image of an arbitrary source cell under f.
NormalForm apply(const FiniteSimplicialSet& source, const FiniteSimplicialSet& target, const FiniteSimplicialMap& f,
                 const NormalForm& cell);

/// Injective on nondegenerate cells and sends them to nondegenerate cells.
bool is_monomorphism(const FiniteSimplicialMap& f);

struct Pushout {
    FiniteSimplicialSet object;
    FiniteSimplicialMap from_a;
    FiniteSimplicialMap from_b;
};

/// Pushout of A ← C → B where C → A is a monomorphism. Nondegenerate cells
/// are those of B followed by those of A not in the image of C.
Pushout pushout_along_mono(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                           const FiniteSimplicialMap& c_to_a, const FiniteSimplicialMap& c_to_b);

} // namespace weightcx::simplicial
