#include "weightcx/motives/group.hpp"

#include <algorithm>
#include <array>

namespace weightcx::motives {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table)
    : elements_(std::move(elements)), table_(std::move(table))
{
    const std::size_t n = elements_.size();
    if (n == 0)
        throw MotiveError("group has no elements");
    if (table_.size() != n)
        throw MotiveError("group table has the wrong number of rows");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw MotiveError("group table has a row of the wrong length");
        for (auto v : row)
            if (v >= n)
                throw MotiveError("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw MotiveError("group table is not associative at (" + elements_[a] + ", " + elements_[b] +
                                      ", " + elements_[c] + ")");
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = table_[e][g] == g && table_[g][e] == g;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw MotiveError("group table has no identity");
    for (std::size_t g = 0; g < n; ++g) {
        auto it = std::find(table_[g].begin(), table_[g].end(), identity_);
        if (it == table_[g].end())
            throw MotiveError("element " + elements_[g] + " has no inverse");
        const auto h = static_cast<std::size_t>(it - table_[g].begin());
        if (table_[h][g] != identity_)
            throw MotiveError("element " + elements_[g] + " has no two-sided inverse");
        inverse_.push_back(h);
    }
}

std::size_t FiniteGroup::element(const std::string& name) const
{
    auto it = std::find(elements_.begin(), elements_.end(), name);
    if (it == elements_.end())
        throw MotiveError("unknown group element '" + name + "'");
    return static_cast<std::size_t>(it - elements_.begin());
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> names;
    for (const auto& q : perms)
        names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            // (a·b)(i) = a(b(i))
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i)
                c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
            table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(names), std::move(table));
}

void validate_action(const PresentedQCategory& cat, const GroupAction& a)
{
    if (a.act.size() != a.group.order())
        throw MotiveError("action must give one endomorphism per group element");
    for (std::size_t g = 0; g < a.act.size(); ++g)
        if (!(a.act[g].source == a.object) || !(a.act[g].target == a.object) || !well_typed(cat, a.act[g]))
            throw MotiveError("act(" + a.group.name(g) + ") is not an endomorphism of the acted object");
    if (!(a.act[a.group.identity()] == identity_morphism(cat, a.object)))
        throw MotiveError("act(1) is not the identity");
    for (std::size_t g = 0; g < a.act.size(); ++g)
        for (std::size_t h = 0; h < a.act.size(); ++h)
            if (!(compose(cat, a.act[g], a.act[h]) == a.act[a.group.mul(g, h)]))
                throw MotiveError("act(" + a.group.name(g) + ")∘act(" + a.group.name(h) + ") ≠ act(" +
                                  a.group.name(a.group.mul(g, h)) + ")");
}

KaroubiObject average_projector(const PresentedQCategory& cat, const GroupAction& a)
{
    MotiveMorphism sum = zero_morphism(cat, a.object, a.object);
    for (const auto& g : a.act)
        sum = sum + g;
    MotiveMorphism e = Rat(1, static_cast<unsigned long>(a.group.order())) * sum;
    if (!(compose(cat, e, e) == e))
        throw MotiveError("averaged projector is not idempotent (broken action table)");
    return {a.object, std::move(e)};
}

Rat character_average(const PresentedQCategory& cat, const Realization& r, const GroupAction& a)
{
    Rat total = 0;
    for (const auto& g : a.act)
        total += realize(cat, r, g).trace();
    return total / static_cast<long>(a.group.order());
}

PresentedQCategory group_algebra(const FiniteGroup& g, const std::string& object)
{
    std::vector<PresentedQCategory::Morphism> morphisms;
    PresentedQCategory::Table table;
    for (std::size_t a = 0; a < g.order(); ++a) {
        morphisms.push_back({g.name(a), 0, 0});
        for (std::size_t b = 0; b < g.order(); ++b)
            table[{g.name(a), g.name(b)}] = {{g.name(g.mul(a, b)), Rat(1)}};
    }
    return PresentedQCategory({object}, std::move(morphisms), {{object, g.name(g.identity())}}, table);
}

GroupAction regular_action(const PresentedQCategory& cat, const FiniteGroup& g)
{
    GroupAction a{g, AdditiveObject{{0}}, {}};
    for (std::size_t h = 0; h < g.order(); ++h) {
        MotiveMorphism m{a.object, a.object, {}};
        m.set(0, 0, cat.basis(cat.morphism(g.name(h))));
        a.act.push_back(std::move(m));
    }
    return a;
}

Realization permutation_realization(const PresentedQCategory& cat, const FiniteGroup& g, std::string name,
                                    const std::vector<std::vector<std::size_t>>& perm)
{
    if (perm.size() != g.order())
        throw MotiveError("permutation realization needs one permutation per group element");
    const std::size_t n = perm.empty() ? 0 : perm.front().size();
    std::vector<QMatrix> mats(cat.morphism_count());
    for (std::size_t h = 0; h < g.order(); ++h) {
        if (perm[h].size() != n)
            throw MotiveError("permutations of different sizes");
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (perm[h][i] >= n)
                throw MotiveError("permutation image out of range");
            m(perm[h][i], i) = 1;
        }
        mats[cat.morphism(g.name(h))] = std::move(m);
    }
    return Realization(cat, std::move(name), {n}, std::move(mats));
}

} // namespace weightcx::motives
