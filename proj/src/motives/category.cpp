#include "weightcx/motives/category.hpp"

namespace weightcx::motives {

bool HomElement::is_zero() const
{
    for (const auto& c : coeffs)
        if (c != 0)
            return false;
    return true;
}

HomElement operator+(const HomElement& a, const HomElement& b)
{
    if (a.source != b.source || a.target != b.target)
        throw MotiveError("sum of morphisms in different hom-spaces");
    HomElement s = a;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k)
        s.coeffs[k] += b.coeffs[k];
    return s;
}

HomElement operator*(const Rat& s, const HomElement& a)
{
    HomElement out = a;
    for (auto& c : out.coeffs)
        c *= s;
    return out;
}

HomElement operator-(const HomElement& a, const HomElement& b) { return a + Rat(-1) * b; }

PresentedQCategory::PresentedQCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                       const std::map<std::string, std::string>& identities, const Table& table)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms))
{
    const std::size_t n = objects_.size();
    for (std::size_t a = 0; a < n; ++a)
        if (!object_index_.emplace(objects_[a], a).second)
            throw MotiveError("duplicate object '" + objects_[a] + "'");
    hom_.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t m = 0; m < morphisms_.size(); ++m) {
        const auto& mor = morphisms_[m];
        if (mor.source >= n || mor.target >= n)
            throw MotiveError("morphism '" + mor.name + "' has an unknown endpoint");
        if (!morphism_index_.emplace(mor.name, m).second)
            throw MotiveError("duplicate morphism '" + mor.name + "'");
        auto& basis = hom_[mor.source][mor.target];
        slots_.push_back(basis.size());
        basis.push_back(m);
    }
    for (std::size_t a = 0; a < n; ++a) {
        auto it = identities.find(objects_[a]);
        if (it == identities.end())
            throw MotiveError("object '" + objects_[a] + "' has no identity");
        const std::size_t id = morphism(it->second);
        if (morphisms_[id].source != a || morphisms_[id].target != a)
            throw MotiveError("identity '" + it->second + "' is not an endomorphism of '" + objects_[a] + "'");
        identities_.push_back(id);
    }

    for (const auto& [key, terms] : table) {
        const std::size_t f = morphism(key.first);
        const std::size_t g = morphism(key.second);
        if (morphisms_[g].target != morphisms_[f].source)
            throw MotiveError("composition table entry " + key.first + "∘" + key.second + " is not composable");
        HomElement value = zero(morphisms_[g].source, morphisms_[f].target);
        for (const auto& [name, c] : terms) {
            const std::size_t h = morphism(name);
            if (morphisms_[h].source != value.source || morphisms_[h].target != value.target)
                throw MotiveError("composition table entry " + key.first + "∘" + key.second + " has term '" + name +
                                  "' of the wrong type");
            value.coeffs[slot(h)] += c;
        }
        products_.emplace(std::make_pair(f, g), std::move(value));
    }
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
        for (std::size_t g = 0; g < morphisms_.size(); ++g)
            if (morphisms_[g].target == morphisms_[f].source && !products_.count({f, g}))
                throw MotiveError("composition table has no entry for " + morphisms_[f].name + "∘" +
                                  morphisms_[g].name);

    for (std::size_t f = 0; f < morphisms_.size(); ++f) {
        const auto& mor = morphisms_[f];
        if (product(identities_[mor.target], f) != basis(f))
            throw MotiveError("left identity law fails for " + mor.name);
        if (product(f, identities_[mor.source]) != basis(f))
            throw MotiveError("right identity law fails for " + mor.name);
    }
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
        for (std::size_t g = 0; g < morphisms_.size(); ++g) {
            if (morphisms_[g].target != morphisms_[f].source)
                continue;
            for (std::size_t h = 0; h < morphisms_.size(); ++h) {
                if (morphisms_[h].target != morphisms_[g].source)
                    continue;
                if (compose(product(f, g), basis(h)) != compose(basis(f), product(g, h)))
                    throw MotiveError("associativity fails for (" + morphisms_[f].name + ", " + morphisms_[g].name +
                                      ", " + morphisms_[h].name + ")");
            }
        }
}

std::size_t PresentedQCategory::object(const std::string& name) const
{
    auto it = object_index_.find(name);
    if (it == object_index_.end())
        throw MotiveError("unknown object '" + name + "'");
    return it->second;
}

std::size_t PresentedQCategory::morphism(const std::string& name) const
{
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end())
        throw MotiveError("unknown morphism '" + name + "'");
    return it->second;
}

const std::vector<std::size_t>& PresentedQCategory::hom_basis(std::size_t a, std::size_t b) const
{
    return hom_.at(a).at(b);
}

HomElement PresentedQCategory::zero(std::size_t a, std::size_t b) const
{
    return {a, b, std::vector<Rat>(hom_basis(a, b).size())};
}

HomElement PresentedQCategory::identity(std::size_t a) const { return basis(identities_.at(a)); }

HomElement PresentedQCategory::basis(std::size_t m) const
{
    HomElement e = zero(morphisms_.at(m).source, morphisms_[m].target);
    e.coeffs[slot(m)] = 1;
    return e;
}

const HomElement& PresentedQCategory::product(std::size_t f, std::size_t g) const
{
    return products_.at({f, g});
}

HomElement PresentedQCategory::compose(const HomElement& f, const HomElement& g) const
{
    if (g.target != f.source)
        throw MotiveError("cannot compose " + describe(f) + " after " + describe(g));
    HomElement out = zero(g.source, f.target);
    const auto& fb = hom_basis(f.source, f.target);
    const auto& gb = hom_basis(g.source, g.target);
    for (std::size_t i = 0; i < fb.size(); ++i) {
        if (f.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (g.coeffs[j] == 0)
                continue;
            const Rat c = f.coeffs[i] * g.coeffs[j];
            const HomElement& p = product(fb[i], gb[j]);
            for (std::size_t k = 0; k < out.coeffs.size(); ++k)
                if (p.coeffs[k] != 0)
                    out.coeffs[k] += c * p.coeffs[k];
        }
    }
    return out;
}

std::string PresentedQCategory::describe(const HomElement& f) const
{
    std::string s;
    const auto& basis = hom_basis(f.source, f.target);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (f.coeffs[k] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += linalg::to_string(f.coeffs[k]) + "·" + morphisms_[basis[k]].name;
    }
    if (s.empty())
        s = "0";
    return s + " : " + objects_.at(f.source) + " → " + objects_.at(f.target);
}

Realization::Realization(const PresentedQCategory& cat, std::string name, std::vector<std::size_t> dims,
                         std::vector<QMatrix> mats)
    : name_(std::move(name)), dims_(std::move(dims)), mats_(std::move(mats))
{
    if (dims_.size() != cat.object_count())
        throw MotiveError("realization '" + name_ + "': expected a dimension for every object");
    if (mats_.size() != cat.morphism_count())
        throw MotiveError("realization '" + name_ + "': expected a matrix for every basis morphism");
    for (std::size_t m = 0; m < mats_.size(); ++m) {
        const auto& mor = cat.morphism(m);
        if (mats_[m].rows() != dims_[mor.target] || mats_[m].cols() != dims_[mor.source])
            throw MotiveError("realization '" + name_ + "': matrix of " + mor.name + " has the wrong shape");
    }
    for (std::size_t a = 0; a < cat.object_count(); ++a)
        if (!(mats_[cat.identity_morphism(a)] == QMatrix::identity(dims_[a])))
            throw MotiveError("realization '" + name_ + "': identity of " + cat.object_name(a) +
                              " is not the identity matrix");
    for (std::size_t f = 0; f < mats_.size(); ++f)
        for (std::size_t g = 0; g < mats_.size(); ++g) {
            if (cat.morphism(g).target != cat.morphism(f).source)
                continue;
            if (!(mats_[f] * mats_[g] == realize(cat, cat.compose(cat.basis(f), cat.basis(g)))))
                throw MotiveError("realization '" + name_ + "' does not respect " + cat.morphism(f).name + "∘" +
                                  cat.morphism(g).name);
        }
}

QMatrix Realization::realize(const PresentedQCategory& cat, const HomElement& f) const
{
    QMatrix out(dims_.at(f.target), dims_.at(f.source));
    const auto& basis = cat.hom_basis(f.source, f.target);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (f.coeffs[k] != 0)
            out = out + f.coeffs[k] * mats_[basis[k]];
    return out;
}

} // namespace weightcx::motives
