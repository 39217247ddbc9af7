#pragma once

#include "weightcx/finite_sets.hpp"
#include "weightcx/simplicial/monotone.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightcx::simplicial {

class SimplicialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

/// A simplicial set known up to a finite level N: cells in degrees 0..N with
/// face maps d_i : X_n → X_{n-1} (0 ≤ i ≤ n) and degeneracies
/// s_i : X_n → X_{n+1} (0 ≤ i ≤ n, n+1 ≤ N), stored as total lookup tables.
class TruncatedSimplicialSet {
public:
    TruncatedSimplicialSet() = default;
    explicit TruncatedSimplicialSet(int level);

    int level() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t size(int n) const { return cells_.at(static_cast<std::size_t>(n)).size(); }
    std::vector<std::size_t> sizes() const;
    const FiniteSet& cells(int n) const { return cells_.at(static_cast<std::size_t>(n)); }
    const std::string& id(int n, std::size_t c) const { return cells(n).id(c); }

    std::size_t add_cell(int n, std::string id);

    /// d_i applied to cell c of degree n.
    std::size_t face(int n, int i, std::size_t c) const;
    /// s_i applied to cell c of degree n, landing in degree n+1.
    std::size_t degeneracy(int n, int i, std::size_t c) const;

    void set_face(int n, int i, std::size_t c, std::size_t value);
    void set_degeneracy(int n, int i, std::size_t c, std::size_t value);

    /// X(θ) for θ : [m] → [n], applied to a cell of degree n.
    std::size_t apply(const Monotone& theta, std::size_t c) const;

    friend bool operator==(const TruncatedSimplicialSet&, const TruncatedSimplicialSet&) = default;

private:
    std::vector<FiniteSet> cells_;
    // faces_[n][i][c] for n ≥ 1; degeneracies_[n][i][c] for n + 1 ≤ level.
    std::vector<std::vector<std::vector<std::size_t>>> faces_;
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;
};

struct Violation {
    std::string identity;
    int degree = 0;
    std::string cell;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every table is complete and in range, then every simplicial
/// identity that can be evaluated below the truncation level. Never throws.
ValidationReport validate(const TruncatedSimplicialSet& x);

/// Restriction to degrees ≤ n. Throws SimplicialError if n > level.
TruncatedSimplicialSet sk(const TruncatedSimplicialSet& x, int n);

/// Standard simplex Δ[k] truncated at `level`; cells are monotone maps
/// [p] → [k] with ids like "0012".
TruncatedSimplicialSet standard_simplex(int k, int level);

/// Constant simplicial set on a finite set: every face and degeneracy is the
/// identity.
TruncatedSimplicialSet constant(const FiniteSet& s, int level);

/// Degreewise product; cell ids are "(a,b)".
TruncatedSimplicialSet product(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b);

/// Degreewise disjoint union; ids are prefixed "L:" and "R:".
TruncatedSimplicialSet disjoint_union(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b);

/// Degreewise map of truncated simplicial sets.
struct SimplicialMap {
    TruncatedSimplicialSet source;
    TruncatedSimplicialSet target;
    std::vector<std::vector<std::size_t>> components;

    std::size_t operator()(int n, std::size_t c) const { return components.at(static_cast<std::size_t>(n)).at(c); }
    int level() const { return static_cast<int>(components.size()) - 1; }
    FiniteSetMap degree(int n) const;

    static SimplicialMap identity(const TruncatedSimplicialSet& x);
};

/// Checks shapes and commutation with every face and degeneracy.
ValidationReport validate(const SimplicialMap& f);

/// g ∘ f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Restriction of a map to degrees ≤ n.
SimplicialMap sk(const SimplicialMap& f, int n);

/// The unique map to the one-point simplicial set at the same level.
SimplicialMap to_point(const TruncatedSimplicialSet& x);

} // namespace weightcx::simplicial
