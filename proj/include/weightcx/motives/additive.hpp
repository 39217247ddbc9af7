#pragma once

#include "weightcx/linalg/sparse.hpp"
#include "weightcx/motives/category.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weightcx::motives {

/// A formal direct sum of objects of a presented category.
struct AdditiveObject {
    std::vector<std::size_t> summands;

    std::size_t size() const { return summands.size(); }
    friend bool operator==(const AdditiveObject&, const AdditiveObject&) = default;
};

AdditiveObject direct_sum(const AdditiveObject& a, const AdditiveObject& b);

/// A matrix of hom-elements; block (i, j) maps source summand j to target
/// summand i. Only nonzero blocks are stored.
struct MotiveMorphism {
    AdditiveObject source;
    AdditiveObject target;
    std::map<std::pair<std::size_t, std::size_t>, HomElement> blocks;

    /// Block (i, j), materializing zero when absent.
    HomElement at(const PresentedQCategory& cat, std::size_t i, std::size_t j) const;
    /// Stores block (i, j), dropping it when zero.
    void set(std::size_t i, std::size_t j, HomElement value);
    bool is_zero() const { return blocks.empty(); }
    friend bool operator==(const MotiveMorphism&, const MotiveMorphism&) = default;
};

MotiveMorphism zero_morphism(const PresentedQCategory& cat, const AdditiveObject& source, const AdditiveObject& target);
MotiveMorphism identity_morphism(const PresentedQCategory& cat, const AdditiveObject& a);

/// f ∘ g. Throws MotiveError unless target(g) = source(f).
MotiveMorphism compose(const PresentedQCategory& cat, const MotiveMorphism& f, const MotiveMorphism& g);
MotiveMorphism operator+(const MotiveMorphism& a, const MotiveMorphism& b);
MotiveMorphism operator-(const MotiveMorphism& a, const MotiveMorphism& b);
MotiveMorphism operator*(const Rat& s, const MotiveMorphism& a);

/// Block-diagonal sum f ⊕ g.
MotiveMorphism direct_sum(const PresentedQCategory& cat, const MotiveMorphism& f, const MotiveMorphism& g);

/// Checks that every block lies in the hom-space its position requires.
bool well_typed(const PresentedQCategory& cat, const MotiveMorphism& f);

/// Realized dimension of an additive object.
std::size_t realized_dim(const Realization& r, const AdditiveObject& a);
/// Block matrix of realized hom-elements.
QMatrix realize(const PresentedQCategory& cat, const Realization& r, const MotiveMorphism& f);
linalg::SparseQMatrix realize_sparse(const PresentedQCategory& cat, const Realization& r, const MotiveMorphism& f);

std::string describe(const PresentedQCategory& cat, const AdditiveObject& a);

/// An object of the idempotent completion: a carrier with an idempotent.
struct KaroubiObject {
    AdditiveObject carrier;
    MotiveMorphism idempotent;

    friend bool operator==(const KaroubiObject&, const KaroubiObject&) = default;
};

/// (A, id_A).
KaroubiObject plain(const PresentedQCategory& cat, const AdditiveObject& a);
/// Throws MotiveError unless e is an endomorphism with e∘e = e.
KaroubiObject karoubi(const PresentedQCategory& cat, AdditiveObject carrier, MotiveMorphism idempotent);
bool is_plain(const PresentedQCategory& cat, const KaroubiObject& k);

/// Rank of the realized idempotent.
std::size_t realized_rank(const PresentedQCategory& cat, const Realization& r, const KaroubiObject& k);

} // namespace weightcx::motives
