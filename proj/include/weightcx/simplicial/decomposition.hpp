#pragma once

#include "weightcx/simplicial/finite.hpp"
#include "weightcx/simplicial/truncated.hpp"

#include <vector>

namespace weightcx::simplicial {

/// Eilenberg–Zilber normal form of cell c in degree k: the unique
/// (α : [k] ↠ [ℓ], nondegenerate y ∈ X_ℓ) with X(α)(y) = c. Here `cell`
/// indexes X_ℓ directly.
NormalForm decompose_cell(const TruncatedSimplicialSet& x, int k, std::size_t c);

bool is_degenerate(const TruncatedSimplicialSet& x, int k, std::size_t c);

/// Nondegenerate cells of degree k, ascending.
std::vector<std::size_t> nondegenerate_cells(const TruncatedSimplicialSet& x, int k);

/// X_k split as ∐_{α : [k] ↠ [ℓ]} X(α)(N X_ℓ).
struct Decomposition {
    struct Block {
        Monotone surjection;
        /// (nondegenerate ℓ-cell, resulting k-cell) pairs.
        std::vector<std::pair<std::size_t, std::size_t>> cells;
    };
    int degree = 0;
    std::vector<Block> blocks;
    /// Every k-cell lies in exactly one block and α ↦ X(α)(y) is injective.
    bool is_partition = true;
};

/// Partition of cells(k) by normal form. Precondition k ≤ level.
Decomposition nondegenerate_decomposition(const TruncatedSimplicialSet& x, int k);

/// Presentation of x by its nondegenerate cells (ids preserved). Together
/// with `FiniteSimplicialSet::materialize` this realises ι_n sk_n.
FiniteSimplicialSet nondegenerate_presentation(const TruncatedSimplicialSet& x);

/// Sk_N x truncated at `level` ≥ level(x): degrees ≤ level(x) are copied
/// verbatim (ids included) and higher degrees contain only degenerate cells,
/// with canonical "s…(y)" ids.
TruncatedSimplicialSet extend_by_degeneracies(const TruncatedSimplicialSet& x, int level);

/// Extends a map by degeneracies along with its source and target.
SimplicialMap extend_by_degeneracies(const SimplicialMap& f, int level);

} // namespace weightcx::simplicial
