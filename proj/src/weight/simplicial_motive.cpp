#include "weightcx/weight/simplicial_motive.hpp"

namespace weightcx::weight {

using linalg::Rat;

namespace {

std::string at(int n, const std::string& what) { return "degree " + std::to_string(n) + ": " + what; }

bool typed(const PresentedQCategory& cat, const MotiveMorphism& m, const AdditiveObject& s, const AdditiveObject& t)
{
    return m.source == s && m.target == t && motives::well_typed(cat, m);
}

} // namespace

std::vector<std::string> validate(const PresentedQCategory& cat, const SimplicialMotive& x)
{
    std::vector<std::string> issues;
    const int level = x.level();
    if (level < 0)
        return {"no components"};
    if (x.faces.size() != x.components.size() || x.degeneracies.size() != x.components.size())
        return {"faces and degeneracies must be listed for every degree"};
    for (int n = 0; n <= level; ++n) {
        const auto& fs = x.faces[static_cast<std::size_t>(n)];
        const auto& ss = x.degeneracies[static_cast<std::size_t>(n)];
        if (fs.size() != static_cast<std::size_t>(n == 0 ? 0 : n + 1))
            issues.push_back(at(n, "expected " + std::to_string(n == 0 ? 0 : n + 1) + " faces"));
        if (ss.size() != static_cast<std::size_t>(n == level ? 0 : n + 1))
            issues.push_back(at(n, "expected " + std::to_string(n == level ? 0 : n + 1) + " degeneracies"));
    }
    if (!issues.empty())
        return issues;
    const auto comp = [&](int n) { return x.components[static_cast<std::size_t>(n)]; };
    const auto d = [&](int n, int i) -> const MotiveMorphism& {
        return x.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    };
    const auto s = [&](int n, int i) -> const MotiveMorphism& {
        return x.degeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    };
    for (int n = 1; n <= level; ++n)
        for (int i = 0; i <= n; ++i)
            if (!typed(cat, d(n, i), comp(n), comp(n - 1)))
                issues.push_back(at(n, "d_" + std::to_string(i) + " is mistyped"));
    for (int n = 0; n < level; ++n)
        for (int i = 0; i <= n; ++i)
            if (!typed(cat, s(n, i), comp(n), comp(n + 1)))
                issues.push_back(at(n, "s_" + std::to_string(i) + " is mistyped"));
    if (!issues.empty())
        return issues;

    using motives::compose;
    for (int n = 2; n <= level; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(compose(cat, d(n - 1, i), d(n, j)) == compose(cat, d(n - 1, j - 1), d(n, i))))
                    issues.push_back(at(n, "d_" + std::to_string(i) + "d_" + std::to_string(j) + " ≠ d_" +
                                               std::to_string(j - 1) + "d_" + std::to_string(i)));
    for (int n = 0; n < level; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const MotiveMorphism lhs = compose(cat, d(n + 1, i), s(n, j));
                MotiveMorphism rhs;
                if (i < j)
                    rhs = compose(cat, s(n - 1, j - 1), d(n, i));
                else if (i == j || i == j + 1)
                    rhs = motives::identity_morphism(cat, comp(n));
                else
                    rhs = compose(cat, s(n - 1, j), d(n, i - 1));
                if (!(lhs == rhs))
                    issues.push_back(at(n, "d_" + std::to_string(i) + "s_" + std::to_string(j) + " violates the identity"));
            }
    for (int n = 0; n + 1 < level; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(compose(cat, s(n + 1, i), s(n, j)) == compose(cat, s(n + 1, j + 1), s(n, i))))
                    issues.push_back(at(n, "s_" + std::to_string(i) + "s_" + std::to_string(j) + " ≠ s_" +
                                               std::to_string(j + 1) + "s_" + std::to_string(i)));
    return issues;
}

SimplicialMotive constant_motive(const PresentedQCategory& cat, const AdditiveObject& a, int level)
{
    if (level < 0)
        throw WeightError("constant_motive: negative level");
    SimplicialMotive x;
    const MotiveMorphism id = motives::identity_morphism(cat, a);
    for (int n = 0; n <= level; ++n) {
        x.components.push_back(a);
        x.faces.emplace_back(n == 0 ? 0 : n + 1, id);
        x.degeneracies.emplace_back(n == level ? 0 : n + 1, id);
    }
    return x;
}

std::vector<std::string> validate(const PresentedQCategory& cat, const SimplicialMotiveMap& f)
{
    std::vector<std::string> issues;
    const int level = f.source.level();
    if (f.target.level() != level || f.components.size() != f.source.components.size())
        return {"source, target and components must share one level"};
    for (int n = 0; n <= level; ++n)
        if (!typed(cat, f.components[static_cast<std::size_t>(n)], f.source.components[static_cast<std::size_t>(n)],
                   f.target.components[static_cast<std::size_t>(n)]))
            issues.push_back(at(n, "component is mistyped"));
    if (!issues.empty())
        return issues;
    using motives::compose;
    const auto fn = [&](int n) -> const MotiveMorphism& { return f.components[static_cast<std::size_t>(n)]; };
    for (int n = 1; n <= level; ++n)
        for (int i = 0; i <= n; ++i) {
            const auto& ds = f.source.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            const auto& dt = f.target.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            if (!(compose(cat, fn(n - 1), ds) == compose(cat, dt, fn(n))))
                issues.push_back(at(n, "does not commute with d_" + std::to_string(i)));
        }
    for (int n = 0; n < level; ++n)
        for (int i = 0; i <= n; ++i) {
            const auto& ss = f.source.degeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            const auto& st = f.target.degeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            if (!(compose(cat, fn(n + 1), ss) == compose(cat, st, fn(n))))
                issues.push_back(at(n, "does not commute with s_" + std::to_string(i)));
        }
    return issues;
}

MotiveComplex gamma(const PresentedQCategory& cat, const SimplicialMotive& x)
{
    if (auto issues = validate(cat, x); !issues.empty())
        throw WeightError("gamma: invalid simplicial motive (" + issues.front() + ")");
    std::vector<MotiveMorphism> d;
    for (int n = 1; n <= x.level(); ++n) {
        const auto& faces = x.faces[static_cast<std::size_t>(n)];
        MotiveMorphism dn = motives::zero_morphism(cat, x.components[static_cast<std::size_t>(n)],
                                                   x.components[static_cast<std::size_t>(n - 1)]);
        for (int i = 0; i <= n; ++i)
            dn = dn + (i % 2 == 0 ? faces[static_cast<std::size_t>(i)] : Rat(-1) * faces[static_cast<std::size_t>(i)]);
        d.push_back(std::move(dn));
    }
    MotiveComplex c = plain_complex(cat, 0, x.components, std::move(d));
    for (int n = 2; n <= c.hi(); ++n)
        if (!motives::compose(cat, c.differential(n - 1), c.differential(n)).is_zero())
            throw WeightError("gamma: d_" + std::to_string(n - 1) + "∘d_" + std::to_string(n) + " ≠ 0");
    return c;
}

ChainMap gamma_map(const PresentedQCategory& cat, const SimplicialMotiveMap& f)
{
    if (auto issues = validate(cat, f); !issues.empty())
        throw WeightError("gamma_map: invalid simplicial map (" + issues.front() + ")");
    ChainMap out{gamma(cat, f.source), gamma(cat, f.target), {}};
    for (std::size_t n = 0; n < f.components.size(); ++n)
        if (!f.components[n].is_zero())
            out.components[static_cast<int>(n)] = f.components[n];
    return out;
}

namespace {

/// Tuples in G^k, lex order, as index vectors.
std::vector<std::vector<std::size_t>> tuples(std::size_t order, int k)
{
    std::vector<std::vector<std::size_t>> out{{}};
    for (int m = 0; m < k; ++m) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : out)
            for (std::size_t g = 0; g < order; ++g) {
                next.push_back(t);
                next.back().push_back(g);
            }
        out = std::move(next);
    }
    return out;
}

std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t order)
{
    std::size_t i = 0;
    for (auto g : t)
        i = i * order + g;
    return i;
}

AdditiveObject copies(const AdditiveObject& x, std::size_t count)
{
    AdditiveObject out;
    for (std::size_t c = 0; c < count; ++c)
        out.summands.insert(out.summands.end(), x.summands.begin(), x.summands.end());
    return out;
}

/// Places the X-endomorphism `m` from copy `from` to copy `to`.
void place_copy(MotiveMorphism& into, const MotiveMorphism& m, std::size_t to, std::size_t from, std::size_t width)
{
    for (const auto& [ij, h] : m.blocks)
        into.set(to * width + ij.first, from * width + ij.second, h);
}

} // namespace

SimplicialMotive bar_object(const PresentedQCategory& cat, const motives::GroupAction& a, int level, BarFace face)
{
    if (level < 0)
        throw WeightError("bar_object: negative level");
    const auto& g = a.group;
    const std::size_t order = g.order();
    const std::size_t width = a.object.size();
    const MotiveMorphism id = motives::identity_morphism(cat, a.object);

    SimplicialMotive x;
    for (int k = 0; k <= level; ++k) {
        std::size_t count = 1;
        for (int m = 0; m < k; ++m)
            count *= order;
        x.components.push_back(copies(a.object, count));
    }
    for (int k = 0; k <= level; ++k) {
        const auto ts = tuples(order, k);
        const auto& here = x.components[static_cast<std::size_t>(k)];
        x.faces.emplace_back();
        for (int i = 0; k > 0 && i <= k; ++i) {
            MotiveMorphism d{here, x.components[static_cast<std::size_t>(k - 1)], {}};
            for (std::size_t t = 0; t < ts.size(); ++t) {
                const auto& tup = ts[t];
                std::vector<std::size_t> image;
                const MotiveMorphism* on_x = &id;
                if (i == 0) {
                    image.assign(tup.begin() + 1, tup.end());
                    on_x = &a.act.at(face == BarFace::inverse ? g.inverse(tup[0]) : tup[0]);
                } else if (i == k) {
                    image.assign(tup.begin(), tup.end() - 1);
                } else {
                    image = tup;
                    image[static_cast<std::size_t>(i - 1)] =
                        g.mul(tup[static_cast<std::size_t>(i - 1)], tup[static_cast<std::size_t>(i)]);
                    image.erase(image.begin() + i);
                }
                place_copy(d, *on_x, tuple_index(image, order), t, width);
            }
            x.faces.back().push_back(std::move(d));
        }
        x.degeneracies.emplace_back();
        for (int i = 0; k < level && i <= k; ++i) {
            MotiveMorphism s{here, x.components[static_cast<std::size_t>(k + 1)], {}};
            for (std::size_t t = 0; t < ts.size(); ++t) {
                std::vector<std::size_t> image = ts[t];
                image.insert(image.begin() + i, g.identity());
                place_copy(s, id, tuple_index(image, order), t, width);
            }
            x.degeneracies.back().push_back(std::move(s));
        }
    }
    return x;
}

MotiveComplex bar_quotient(const PresentedQCategory& cat, const motives::GroupAction& a, int level)
{
    motives::validate_action(cat, a);
    const SimplicialMotive x = bar_object(cat, a, level);
    return gamma(cat, x);
}

KaroubiObject invariants_motive(const PresentedQCategory& cat, const motives::GroupAction& a)
{
    return motives::average_projector(cat, a);
}

} // namespace weightcx::weight
