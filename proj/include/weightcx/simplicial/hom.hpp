#pragma once

#include "weightcx/simplicial/finite.hpp"
#include "weightcx/simplicial/truncated.hpp"

#include <vector>

namespace weightcx::simplicial {

/// A simplicial map A → X recorded on the nondegenerate cells of A:
/// `images[dim][c]` is a cell of X in degree `dim`.
using HomElement = std::vector<std::vector<std::size_t>>;

/// Hom_Δ(A, X) by backtracking over the nondegenerate cells of A in order
/// of dimension: each cell picks an image whose faces match the images of
/// its faces. Results are in lexicographic order. Throws SimplicialError if
/// generation_level(A) > level(X).
std::vector<HomElement> hom_delta(const FiniteSimplicialSet& a, const TruncatedSimplicialSet& x);

/// Image of an arbitrary cell of A under h.
std::size_t hom_image(const TruncatedSimplicialSet& x, const HomElement& h, const NormalForm& cell);

/// h ∘ g for g : C → A.
HomElement precompose(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a, const FiniteSimplicialMap& g,
                      const TruncatedSimplicialSet& x, const HomElement& h);

/// The subobject of A generated by its cells of dimension ≤ n (Sk_n A).
FiniteSimplicialSet skeleton(const FiniteSimplicialSet& a, int n);

} // namespace weightcx::simplicial
