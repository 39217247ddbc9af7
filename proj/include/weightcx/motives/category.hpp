#pragma once

#include "weightcx/linalg/matrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weightcx::motives {

using linalg::QMatrix;
using linalg::Rat;

class MotiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vector in the hom-space hom(source, target), written in the basis of
/// named morphisms; `coeffs[k]` multiplies the k-th basis morphism.
struct HomElement {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<Rat> coeffs;

    bool is_zero() const;
    friend bool operator==(const HomElement&, const HomElement&) = default;
};

HomElement operator+(const HomElement& a, const HomElement& b);
HomElement operator-(const HomElement& a, const HomElement& b);
HomElement operator*(const Rat& s, const HomElement& a);

/// A finitely presented Q-linear category: objects, a finite basis of named
/// morphisms per hom-space, and a composition table giving every product of
/// composable basis morphisms as a combination of basis morphisms.
class PresentedQCategory {
public:
    struct Morphism {
        std::string name;
        std::size_t source = 0;
        std::size_t target = 0;
    };
    /// (f, g) ↦ f∘g as (basis name, coefficient) terms.
    using Table = std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, Rat>>>;

    /// Builds and checks the category. Throws MotiveError on a missing or
    /// mistyped table entry, an identity law failure, or an associativity
    /// failure; the message names the offending morphisms.
    PresentedQCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                       const std::map<std::string, std::string>& identities, const Table& table);

    std::size_t object_count() const { return objects_.size(); }
    const std::string& object_name(std::size_t a) const { return objects_.at(a); }
    std::size_t object(const std::string& name) const;

    std::size_t morphism_count() const { return morphisms_.size(); }
    const Morphism& morphism(std::size_t m) const { return morphisms_.at(m); }
    std::size_t morphism(const std::string& name) const;
    /// Global morphism indices forming the basis of hom(a, b).
    const std::vector<std::size_t>& hom_basis(std::size_t a, std::size_t b) const;
    std::size_t identity_morphism(std::size_t a) const { return identities_.at(a); }

    HomElement zero(std::size_t a, std::size_t b) const;
    HomElement identity(std::size_t a) const;
    HomElement basis(std::size_t m) const;
    /// f∘g for g : a → b and f : b → c. Throws MotiveError on a type mismatch.
    HomElement compose(const HomElement& f, const HomElement& g) const;

    std::string describe(const HomElement& f) const;

private:
    std::size_t slot(std::size_t m) const { return slots_.at(m); }
    const HomElement& product(std::size_t f, std::size_t g) const;

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::map<std::string, std::size_t> object_index_;
    std::map<std::string, std::size_t> morphism_index_;
    std::vector<std::vector<std::vector<std::size_t>>> hom_;
    std::vector<std::size_t> slots_;
    std::vector<std::size_t> identities_;
    std::map<std::pair<std::size_t, std::size_t>, HomElement> products_;
};

/// A functor to rational matrices: a dimension per object and a matrix of
/// shape dim(target) × dim(source) per basis morphism.
class Realization {
public:
    /// Checks shapes, identities and every product in the table exactly.
    /// Throws MotiveError naming the first failure.
    Realization(const PresentedQCategory& cat, std::string name, std::vector<std::size_t> dims,
                std::vector<QMatrix> mats);

    const std::string& name() const { return name_; }
    std::size_t dim(std::size_t a) const { return dims_.at(a); }
    const QMatrix& basis_matrix(std::size_t m) const { return mats_.at(m); }
    QMatrix realize(const PresentedQCategory& cat, const HomElement& f) const;

private:
    std::string name_;
    std::vector<std::size_t> dims_;
    std::vector<QMatrix> mats_;
};

} // namespace weightcx::motives
