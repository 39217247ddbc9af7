#include "weightcx/motives/additive.hpp"

namespace weightcx::motives {

AdditiveObject direct_sum(const AdditiveObject& a, const AdditiveObject& b)
{
    AdditiveObject s = a;
    s.summands.insert(s.summands.end(), b.summands.begin(), b.summands.end());
    return s;
}

HomElement MotiveMorphism::at(const PresentedQCategory& cat, std::size_t i, std::size_t j) const
{
    auto it = blocks.find({i, j});
    if (it != blocks.end())
        return it->second;
    return cat.zero(source.summands.at(j), target.summands.at(i));
}

void MotiveMorphism::set(std::size_t i, std::size_t j, HomElement value)
{
    if (value.is_zero())
        blocks.erase({i, j});
    else
        blocks[{i, j}] = std::move(value);
}

MotiveMorphism zero_morphism(const PresentedQCategory&, const AdditiveObject& source, const AdditiveObject& target)
{
    return MotiveMorphism{source, target, {}};
}

MotiveMorphism identity_morphism(const PresentedQCategory& cat, const AdditiveObject& a)
{
    MotiveMorphism f{a, a, {}};
    for (std::size_t i = 0; i < a.size(); ++i)
        f.set(i, i, cat.identity(a.summands[i]));
    return f;
}

MotiveMorphism compose(const PresentedQCategory& cat, const MotiveMorphism& f, const MotiveMorphism& g)
{
    if (!(g.target == f.source))
        throw MotiveError("cannot compose motive morphisms: " + describe(cat, g.target) + " vs " +
                          describe(cat, f.source));
    std::map<std::size_t, std::vector<std::pair<std::size_t, const HomElement*>>> g_rows;
    for (const auto& [ij, h] : g.blocks)
        g_rows[ij.first].emplace_back(ij.second, &h);
    std::map<std::pair<std::size_t, std::size_t>, HomElement> acc;
    for (const auto& [ik, fh] : f.blocks) {
        auto row = g_rows.find(ik.second);
        if (row == g_rows.end())
            continue;
        for (const auto& [j, gh] : row->second) {
            HomElement p = cat.compose(fh, *gh);
            auto [it, fresh] = acc.try_emplace({ik.first, j}, p);
            if (!fresh)
                it->second = it->second + p;
        }
    }
    MotiveMorphism out{g.source, f.target, {}};
    for (auto& [ij, h] : acc)
        out.set(ij.first, ij.second, std::move(h));
    return out;
}

MotiveMorphism operator+(const MotiveMorphism& a, const MotiveMorphism& b)
{
    if (!(a.source == b.source) || !(a.target == b.target))
        throw MotiveError("sum of motive morphisms with different types");
    MotiveMorphism s = a;
    for (const auto& [ij, h] : b.blocks) {
        auto it = s.blocks.find(ij);
        s.set(ij.first, ij.second, it == s.blocks.end() ? h : it->second + h);
    }
    return s;
}

MotiveMorphism operator*(const Rat& s, const MotiveMorphism& a)
{
    MotiveMorphism out{a.source, a.target, {}};
    if (s == 0)
        return out;
    for (const auto& [ij, h] : a.blocks)
        out.blocks.emplace(ij, s * h);
    return out;
}

MotiveMorphism operator-(const MotiveMorphism& a, const MotiveMorphism& b) { return a + Rat(-1) * b; }

MotiveMorphism direct_sum(const PresentedQCategory&, const MotiveMorphism& f, const MotiveMorphism& g)
{
    MotiveMorphism out{direct_sum(f.source, g.source), direct_sum(f.target, g.target), f.blocks};
    for (const auto& [ij, h] : g.blocks)
        out.blocks.emplace(std::make_pair(f.target.size() + ij.first, f.source.size() + ij.second), h);
    return out;
}

bool well_typed(const PresentedQCategory& cat, const MotiveMorphism& f)
{
    for (const auto& [ij, b] : f.blocks) {
        if (ij.first >= f.target.size() || ij.second >= f.source.size())
            return false;
        if (b.source != f.source.summands[ij.second] || b.target != f.target.summands[ij.first] ||
            b.coeffs.size() != cat.hom_basis(b.source, b.target).size())
            return false;
    }
    return true;
}

std::size_t realized_dim(const Realization& r, const AdditiveObject& a)
{
    std::size_t d = 0;
    for (auto s : a.summands)
        d += r.dim(s);
    return d;
}

namespace {

std::vector<std::size_t> offsets(const Realization& r, const AdditiveObject& a)
{
    std::vector<std::size_t> out;
    std::size_t at = 0;
    for (auto s : a.summands) {
        out.push_back(at);
        at += r.dim(s);
    }
    return out;
}

} // namespace

QMatrix realize(const PresentedQCategory& cat, const Realization& r, const MotiveMorphism& f)
{
    return realize_sparse(cat, r, f).to_dense();
}

linalg::SparseQMatrix realize_sparse(const PresentedQCategory& cat, const Realization& r, const MotiveMorphism& f)
{
    linalg::SparseQMatrix out(realized_dim(r, f.target), realized_dim(r, f.source));
    const auto rows = offsets(r, f.target);
    const auto cols = offsets(r, f.source);
    for (const auto& [ij, h] : f.blocks) {
        const QMatrix m = r.realize(cat, h);
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b)
                if (sgn(m(a, b)) != 0)
                    out.add(rows[ij.first] + a, cols[ij.second] + b, m(a, b));
    }
    return out;
}

std::string describe(const PresentedQCategory& cat, const AdditiveObject& a)
{
    if (a.summands.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? " ⊕ " : "") + cat.object_name(a.summands[i]);
    return s;
}

KaroubiObject plain(const PresentedQCategory& cat, const AdditiveObject& a)
{
    return {a, identity_morphism(cat, a)};
}

KaroubiObject karoubi(const PresentedQCategory& cat, AdditiveObject carrier, MotiveMorphism idempotent)
{
    if (!(idempotent.source == carrier) || !(idempotent.target == carrier) || !well_typed(cat, idempotent))
        throw MotiveError("idempotent is not an endomorphism of " + describe(cat, carrier));
    if (!(compose(cat, idempotent, idempotent) == idempotent))
        throw MotiveError("e∘e ≠ e on " + describe(cat, carrier));
    return {std::move(carrier), std::move(idempotent)};
}

bool is_plain(const PresentedQCategory& cat, const KaroubiObject& k)
{
    return k.idempotent == identity_morphism(cat, k.carrier);
}

std::size_t realized_rank(const PresentedQCategory& cat, const Realization& r, const KaroubiObject& k)
{
    return linalg::rank(realize_sparse(cat, r, k.idempotent));
}

} // namespace weightcx::motives
