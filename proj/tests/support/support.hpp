#pragma once

#include "weightcx/descent/cech.hpp"
#include "weightcx/linalg/complex.hpp"
#include "weightcx/motives/group.hpp"
#include "weightcx/simplicial/finite.hpp"
#include "weightcx/simplicial/hom.hpp"
#include "weightcx/weight/complex.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace weightcx::testing {

using linalg::QComplex;
using linalg::QMatrix;
using linalg::Rat;
using motives::AdditiveObject;
using motives::HomElement;
using motives::MotiveMorphism;
using motives::PresentedQCategory;
using motives::Realization;
using simplicial::FiniteSimplicialMap;
using simplicial::FiniteSimplicialSet;
using simplicial::NormalForm;
using simplicial::SimplicialMap;
using simplicial::TruncatedSimplicialSet;
using weight::ChainMap;
using weight::MotiveComplex;

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n);
int pick_int(Rng& rng, int lo, int hi);
/// p/q with |p| ≤ range and q ∈ {1, 2, 3}.
Rat small_rat(Rng& rng, int range = 3);
QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.6);

// ---- oracles -------------------------------------------------------------

/// Rank by fraction-free elimination over the integers after clearing
/// denominators row by row.
std::size_t integer_rank(const QMatrix& m);
/// dim C_n − rank d_n − rank d_{n+1}, via integer_rank on dense matrices.
std::map<int, std::size_t> oracle_homology(const QComplex& c);
/// Σ (−1)^n dim C_n, read off the dimensions.
long oracle_euler(const QComplex& c);

// ---- finite sets -----------------------------------------------------------

FiniteSet named_set(const std::string& prefix, std::size_t n);
/// Every function {0..n−1} → {0..m−1} as an assignment table.
std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m);
FiniteSetMap set_map(const FiniteSet& source, const FiniteSet& target, std::vector<std::size_t> assignment);
std::vector<FiniteSetMap> all_surjections(std::size_t n, std::size_t m);
/// Maps X → Y with |X| = d·|Y| and every fiber of size d.
std::vector<FiniteSetMap> all_fiber_constant(std::size_t d, std::size_t m);
FiniteSetMap random_map(Rng& rng, std::size_t n, std::size_t m);

// ---- simplicial ------------------------------------------------------------

NormalForm vertex(std::size_t v);
NormalForm degenerate_edge(std::size_t v);
FiniteSimplicialSet points(std::size_t n);
FiniteSimplicialSet interval();
FiniteSimplicialSet loop();
FiniteSimplicialSet sphere2();
/// Small finite simplicial sets with at most four nondegenerate cells.
std::vector<std::pair<std::string, FiniteSimplicialSet>> small_catalogue();

/// Vertices, edges with random endpoints and possibly one 2-cell whose
/// boundary is drawn at random among edges and degenerate edges.
FiniteSimplicialSet random_finite(Rng& rng, std::size_t max_vertices, std::size_t max_edges, bool allow_triangle);
/// A random valid truncated simplicial set with at most `max_cells` cells
/// in every degree, of level between 1 and `max_level`.
TruncatedSimplicialSet random_small_truncated(Rng& rng, std::size_t max_cells = 4, int max_level = 3);

/// Nondegenerate-to-nondegenerate injective maps C → A.
std::vector<FiniteSimplicialMap> monomorphisms(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a);
/// Every map C → A, written in normal forms of A.
std::vector<FiniteSimplicialMap> all_maps(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a);

/// The map materialize(a, level) → x determined by a hom element.
SimplicialMap materialized_map(const FiniteSimplicialSet& a, int level, const TruncatedSimplicialSet& x,
                               const simplicial::HomElement& h);
/// product(a, b) → a.
SimplicialMap first_projection(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b);
/// cech_nerve(p, level) → constant(Y, level).
SimplicialMap cech_augmentation(const FiniteSetMap& p, int level);

struct HypercoverInstance {
    std::string name;
    SimplicialMap map;
};
/// Proper hypercovers of level `level`: Čech augmentations, products with
/// Čech nerves over a point, relative 1-coskeleta and composites.
std::vector<HypercoverInstance> hypercover_family(Rng& rng, std::size_t count, int level);

// ---- motives ---------------------------------------------------------------

/// A presented category together with the realizations tests evaluate.
struct Toy {
    std::string name;
    PresentedQCategory cat;
    std::vector<Realization> realizations;
};

/// One object A, hom = Q·1.
Toy toy_line();
/// One object A, hom = Q·1 ⊕ Q·e with e∘e = e.
Toy toy_idempotent();
/// Objects A, B with an arrow u : A → B.
Toy toy_arrow();
/// Q[G] on one object with the permutation realizations given.
Toy toy_group(const motives::FiniteGroup& g, const std::vector<std::vector<std::vector<std::size_t>>>& perms);

/// Left cosets G/H for every subgroup H, as permutation tables
/// perm[g][x] = g·x.
std::vector<std::vector<std::vector<std::size_t>>> transitive_actions(const motives::FiniteGroup& g);
/// Disjoint union of permutation actions.
std::vector<std::vector<std::size_t>> sum_actions(const std::vector<std::vector<std::vector<std::size_t>>>& parts);
/// The action conjugated by a random relabeling of the points.
std::vector<std::vector<std::size_t>> relabel(Rng& rng, const std::vector<std::vector<std::size_t>>& perm);

HomElement random_hom(Rng& rng, const PresentedQCategory& cat, std::size_t a, std::size_t b, double density = 0.7);
MotiveMorphism random_morphism(Rng& rng, const PresentedQCategory& cat, const AdditiveObject& s,
                               const AdditiveObject& t, double density = 0.5);
/// A random automorphism 1 + N with N strictly upper triangular, and its
/// inverse.
std::pair<MotiveMorphism, MotiveMorphism> random_automorphism(Rng& rng, const PresentedQCategory& cat,
                                                              const AdditiveObject& a);

/// Plain terms in degrees lo..lo+length−1, at most `max_summands` summands
/// per degree: a sum of one-, two- and three-term pieces conjugated by
/// random automorphisms.
MotiveComplex random_complex(Rng& rng, const PresentedQCategory& cat, int lo, int length, std::size_t max_summands);
/// f : T → X with X = φ(T ⊕ W)φ⁻¹ and f = φ(ι + ds + sd).
ChainMap random_chain_map(Rng& rng, const PresentedQCategory& cat, int lo, int length, std::size_t max_summands);
/// Multiplies every term and map by the central idempotent `e`, giving
/// Karoubi terms (carrier, e·1).
MotiveComplex karoubi_part(const PresentedQCategory& cat, const MotiveComplex& c, std::size_t e);
ChainMap karoubi_part(const PresentedQCategory& cat, const ChainMap& f, std::size_t e);

/// Σ (−1)^n rank of the realized idempotent of each term, by integer_rank.
long oracle_realized_euler(const PresentedQCategory& cat, const Realization& r, const MotiveComplex& c);

} // namespace weightcx::testing
