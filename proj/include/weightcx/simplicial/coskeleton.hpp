#pragma once

#include "weightcx/simplicial/truncated.hpp"

#include <map>
#include <optional>
#include <vector>

namespace weightcx::simplicial {

/// The nondegenerate simplices of sk_n Δ[p]: injective θ : [k] → [p] with
/// k ≤ n, ordered by dimension and then lexicographically.
class SkeletonShape {
public:
    SkeletonShape(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    std::size_t size() const { return simplices_.size(); }
    const Monotone& simplex(std::size_t i) const { return simplices_[i]; }
    int dim(std::size_t i) const { return simplices_[i].source(); }
    std::size_t index(const Monotone& theta) const { return index_.at(theta); }

private:
    int p_;
    int n_;
    std::vector<Monotone> simplices_;
    std::map<Monotone, std::size_t> index_;
};

/// A map sk_n Δ[p] → X, stored as the image of each simplex of the shape.
using Family = std::vector<std::size_t>;

/// Hom(sk_n Δ[p], x), enumerated by backtracking over the shape in order:
/// each simplex picks a cell whose faces equal the images already chosen
/// for its faces. Families come out in lexicographic order.
std::vector<Family> enumerate_families(const TruncatedSimplicialSet& x, int n, int p);

/// The family (θ*c)_θ of a cell c ∈ X_p; requires p ≤ level(x).
Family unit_family(const TruncatedSimplicialSet& x, const SkeletonShape& shape, std::size_t c);

/// μ*F for μ : [q] → [p]: (μ*F)_ψ = X(σ)(F_ι) where μ∘ψ = ι∘σ.
Family pull_family(const TruncatedSimplicialSet& x, const SkeletonShape& from, const SkeletonShape& to,
                   const Monotone& mu, const Family& family);

/// Drops the simplices of dimension > `to.n()`.
Family restrict_family(const SkeletonShape& from, const SkeletonShape& to, const Family& family);

/// Componentwise image f_k(F_θ).
Family push_family(const SimplicialMap& f, const SkeletonShape& shape, const Family& family);

/// cosk_n(sk_n x) computed up to `level`. Degrees ≤ n reproduce x (ids
/// included); a degree-p cell for p > n is a compatible family, with id
/// "(…)" listing the ids of its n-dimensional components.
class Coskeleton {
public:
    Coskeleton(const TruncatedSimplicialSet& x, int n, int level);

    int n() const { return n_; }
    const TruncatedSimplicialSet& set() const { return set_; }
    const TruncatedSimplicialSet& base() const { return x_; }
    const SkeletonShape& shape(int p) const { return shapes_.at(static_cast<std::size_t>(p)); }
    const Family& family(int p, std::size_t c) const { return families_.at(static_cast<std::size_t>(p)).at(c); }
    std::optional<std::size_t> find(int p, const Family& family) const;

    /// Image of c ∈ X_p under X → Cosk_n X (any p ≤ level(x) and ≤ level).
    std::size_t unit(const TruncatedSimplicialSet& x, int p, std::size_t c) const;

private:
    int n_;
    TruncatedSimplicialSet x_;
    TruncatedSimplicialSet set_;
    std::vector<SkeletonShape> shapes_;
    std::vector<std::vector<Family>> families_;
    std::vector<std::map<Family, std::size_t>> lookup_;
};

/// cosk_n(sk_n x) up to `level`. Throws SimplicialError when x is invalid
/// at level n, n > level(x), or level < n.
TruncatedSimplicialSet cosk(const TruncatedSimplicialSet& x, int n, int level);

/// Cosk_n(f) between the coskeleta of source and target.
SimplicialMap cosk_map(const SimplicialMap& f, int n, int level);

/// Cosk^Y_n(X) = cosk_n(X) ×_{Cosk_n(Y)} Y for f : X → Y, up to `level`.
/// When level(Y) < `level`, Y is first extended by degeneracies (Sk).
/// Degrees ≤ n reproduce X; higher cells are pairs with id "F@y".
class RelativeCoskeleton {
public:
    RelativeCoskeleton(const SimplicialMap& f, int n, int level);

    int n() const { return source_.n(); }
    const TruncatedSimplicialSet& set() const { return set_; }
    const TruncatedSimplicialSet& base() const { return base_; }
    const SimplicialMap& projection() const { return projection_; }
    const Coskeleton& source_coskeleton() const { return source_; }

    const Family& family(int p, std::size_t c) const { return cells_.at(static_cast<std::size_t>(p)).at(c).first; }
    std::size_t base_cell(int p, std::size_t c) const { return cells_.at(static_cast<std::size_t>(p)).at(c).second; }
    std::optional<std::size_t> find(int p, const Family& family, std::size_t base_cell) const;

    /// Image of c ∈ X_p under X → Cosk^Y_n X; requires f defined in degree p.
    std::size_t unit(const SimplicialMap& f, int p, std::size_t c) const;

private:
    Coskeleton source_;
    TruncatedSimplicialSet base_;
    TruncatedSimplicialSet set_;
    SimplicialMap projection_;
    std::vector<std::vector<std::pair<Family, std::size_t>>> cells_;
    std::vector<std::map<std::pair<Family, std::size_t>, std::size_t>> lookup_;
};

/// Cosk^S_n(f) for f : X → Y over S (x_to_s = y_to_s ∘ f).
SimplicialMap relative_cosk_map(const SimplicialMap& f, const RelativeCoskeleton& source,
                                const RelativeCoskeleton& target);

} // namespace weightcx::simplicial
