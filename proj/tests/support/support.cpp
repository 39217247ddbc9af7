#include "support.hpp"

#include "weightcx/simplicial/coskeleton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weightcx::testing {

using simplicial::codegeneracy;
using simplicial::Monotone;
using simplicial::nondegenerate;

std::size_t pick(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

int pick_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat small_rat(Rng& rng, int range)
{
    Rat r(pick_int(rng, -range, range), pick_int(rng, 1, 3));
    r.canonicalize();
    return r;
}

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density)
{
    std::bernoulli_distribution keep(density);
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng))
                m(r, c) = small_rat(rng);
    return m;
}

std::size_t integer_rank(const QMatrix& m)
{
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0)
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (a[r][c] == 0)
                continue;
            const mpz_class x = a[rank][c], y = a[r][c];
            mpz_class g = 0;
            for (std::size_t k = c; k < m.cols(); ++k) {
                a[r][k] = a[r][k] * x - a[rank][k] * y;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[r][k].get_mpz_t());
            }
            if (g > 1)
                for (std::size_t k = c; k < m.cols(); ++k)
                    mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), g.get_mpz_t());
        }
        ++rank;
    }
    return rank;
}

std::map<int, std::size_t> oracle_homology(const QComplex& c)
{
    std::map<int, std::size_t> out;
    for (int n = c.lo(); n <= c.hi(); ++n)
        out[n] = c.dim(n) - integer_rank(c.differential(n)) - integer_rank(c.differential(n + 1));
    return out;
}

long oracle_euler(const QComplex& c)
{
    long chi = 0;
    for (int n = c.lo(); n <= c.hi(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(n));
    return chi;
}

FiniteSet named_set(const std::string& prefix, std::size_t n)
{
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i)
        ids.push_back(prefix + std::to_string(i));
    return FiniteSet(std::move(ids));
}

std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m)
{
    std::vector<std::vector<std::size_t>> out;
    if (m == 0) {
        if (n == 0)
            out.emplace_back();
        return out;
    }
    std::vector<std::size_t> f(n, 0);
    while (true) {
        out.push_back(f);
        std::size_t i = 0;
        while (i < n && ++f[i] == m)
            f[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

FiniteSetMap set_map(const FiniteSet& source, const FiniteSet& target, std::vector<std::size_t> assignment)
{
    return FiniteSetMap{source, target, std::move(assignment)};
}

std::vector<FiniteSetMap> all_surjections(std::size_t n, std::size_t m)
{
    std::vector<FiniteSetMap> out;
    const FiniteSet x = named_set("x", n), y = named_set("y", m);
    for (auto& f : all_functions(n, m)) {
        FiniteSetMap map = set_map(x, y, std::move(f));
        if (map.surjective())
            out.push_back(std::move(map));
    }
    return out;
}

std::vector<FiniteSetMap> all_fiber_constant(std::size_t d, std::size_t m)
{
    std::vector<FiniteSetMap> out;
    for (auto& map : all_surjections(d * m, m)) {
        const auto sizes = map.fiber_sizes();
        if (std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == d; }))
            out.push_back(std::move(map));
    }
    return out;
}

FiniteSetMap random_map(Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<std::size_t> f(n);
    for (auto& v : f)
        v = pick(rng, m);
    return set_map(named_set("x", n), named_set("y", m), std::move(f));
}

// ---- simplicial ------------------------------------------------------------

NormalForm vertex(std::size_t v)
{
    return nondegenerate(0, v);
}

NormalForm degenerate_edge(std::size_t v)
{
    return {codegeneracy(0, 0), v};
}

FiniteSimplicialSet points(std::size_t n)
{
    FiniteSimplicialSet a;
    for (std::size_t i = 0; i < n; ++i)
        a.add_cell(0, "v" + std::to_string(i));
    return a;
}

FiniteSimplicialSet interval()
{
    FiniteSimplicialSet a = points(2);
    a.add_cell(1, "e", {vertex(1), vertex(0)});
    return a;
}

FiniteSimplicialSet loop()
{
    FiniteSimplicialSet a = points(1);
    a.add_cell(1, "l", {vertex(0), vertex(0)});
    return a;
}

FiniteSimplicialSet sphere2()
{
    FiniteSimplicialSet a = points(1);
    a.add_cell(2, "s", {degenerate_edge(0), degenerate_edge(0), degenerate_edge(0)});
    return a;
}

std::vector<std::pair<std::string, FiniteSimplicialSet>> small_catalogue()
{
    std::vector<std::pair<std::string, FiniteSimplicialSet>> out;
    for (std::size_t n = 1; n <= 4; ++n)
        out.emplace_back(std::to_string(n) + " points", points(n));
    out.emplace_back("interval", interval());
    out.emplace_back("loop", loop());
    out.emplace_back("sphere", sphere2());
    {
        FiniteSimplicialSet a = interval();
        a.add_cell(0, "p");
        out.emplace_back("interval + point", a);
    }
    {
        FiniteSimplicialSet a = loop();
        a.add_cell(0, "p");
        out.emplace_back("loop + point", a);
    }
    {
        FiniteSimplicialSet a = loop();
        a.add_cell(1, "m", {vertex(0), vertex(0)});
        out.emplace_back("two loops", a);
    }
    {
        FiniteSimplicialSet a = interval();
        a.add_cell(1, "f", {vertex(1), vertex(0)});
        out.emplace_back("parallel edges", a);
    }
    {
        FiniteSimplicialSet a = interval();
        a.add_cell(1, "f", {vertex(0), vertex(1)});
        out.emplace_back("cycle", a);
    }
    return out;
}

FiniteSimplicialSet random_finite(Rng& rng, std::size_t max_vertices, std::size_t max_edges, bool allow_triangle)
{
    FiniteSimplicialSet a = points(1 + pick(rng, max_vertices));
    const std::size_t v = a.count(0);
    const std::size_t edges = pick(rng, max_edges + 1);
    for (std::size_t e = 0; e < edges; ++e)
        a.add_cell(1, "e" + std::to_string(e), {vertex(pick(rng, v)), vertex(pick(rng, v))});
    if (allow_triangle && pick(rng, 2) == 0) {
        std::vector<NormalForm> candidates;
        for (std::size_t e = 0; e < a.count(1); ++e)
            candidates.push_back(nondegenerate(1, e));
        for (std::size_t x = 0; x < v; ++x)
            candidates.push_back(degenerate_edge(x));
        for (int attempt = 0; attempt < 20; ++attempt) {
            FiniteSimplicialSet b = a;
            b.add_cell(2, "t", {candidates[pick(rng, candidates.size())], candidates[pick(rng, candidates.size())],
                                candidates[pick(rng, candidates.size())]});
            if (validate(b).ok())
                return b;
        }
    }
    return a;
}

TruncatedSimplicialSet random_small_truncated(Rng& rng, std::size_t max_cells, int max_level)
{
    while (true) {
        const FiniteSimplicialSet a = random_finite(rng, 3, 2, max_level >= 2);
        const int level = pick_int(rng, std::max(1, a.generation_level()), max_level);
        TruncatedSimplicialSet x = a.materialize(level);
        const auto sizes = x.sizes();
        if (std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s <= max_cells; }))
            return x;
    }
}

namespace {

std::vector<std::pair<int, std::size_t>> cell_order(const FiniteSimplicialSet& c)
{
    std::vector<std::pair<int, std::size_t>> order;
    for (int k = 0; k <= c.generation_level(); ++k)
        for (std::size_t i = 0; i < c.count(k); ++i)
            order.emplace_back(k, i);
    return order;
}

FiniteSimplicialMap empty_map(const FiniteSimplicialSet& c)
{
    FiniteSimplicialMap f;
    for (int k = 0; k <= c.generation_level(); ++k)
        f.images.emplace_back(c.count(k));
    return f;
}

} // namespace

std::vector<FiniteSimplicialMap> monomorphisms(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a)
{
    const auto order = cell_order(c);
    std::vector<FiniteSimplicialMap> out;
    FiniteSimplicialMap f = empty_map(c);
    std::vector<std::set<std::size_t>> used(static_cast<std::size_t>(std::max(c.generation_level(), 0)) + 1);
    std::function<void(std::size_t)> go = [&](std::size_t pos) {
        if (pos == order.size()) {
            if (validate(c, a, f).ok())
                out.push_back(f);
            return;
        }
        const auto [k, i] = order[pos];
        for (std::size_t t = 0; t < a.count(k); ++t) {
            if (used[static_cast<std::size_t>(k)].count(t))
                continue;
            used[static_cast<std::size_t>(k)].insert(t);
            f.images[static_cast<std::size_t>(k)][i] = nondegenerate(k, t);
            go(pos + 1);
            used[static_cast<std::size_t>(k)].erase(t);
        }
    };
    go(0);
    return out;
}

std::vector<FiniteSimplicialMap> all_maps(const FiniteSimplicialSet& c, const FiniteSimplicialSet& a)
{
    const int level = std::max(c.generation_level(), 0);
    const TruncatedSimplicialSet x = a.materialize(level);
    std::vector<std::vector<NormalForm>> cells;
    for (int k = 0; k <= level; ++k)
        cells.push_back(a.cells_in_degree(k));
    std::vector<FiniteSimplicialMap> out;
    for (const auto& h : simplicial::hom_delta(c, x)) {
        FiniteSimplicialMap f = empty_map(c);
        for (int k = 0; k <= c.generation_level(); ++k)
            for (std::size_t i = 0; i < c.count(k); ++i)
                f.images[static_cast<std::size_t>(k)][i] = cells[static_cast<std::size_t>(k)][h[static_cast<std::size_t>(k)][i]];
        out.push_back(std::move(f));
    }
    return out;
}

SimplicialMap materialized_map(const FiniteSimplicialSet& a, int level, const TruncatedSimplicialSet& x,
                               const simplicial::HomElement& h)
{
    SimplicialMap f{a.materialize(level), x, {}};
    for (int p = 0; p <= level; ++p) {
        std::vector<std::size_t> comp;
        for (const auto& cell : a.cells_in_degree(p))
            comp.push_back(simplicial::hom_image(x, h, cell));
        f.components.push_back(std::move(comp));
    }
    return f;
}

SimplicialMap first_projection(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b)
{
    SimplicialMap f{simplicial::product(a, b), a, {}};
    for (int p = 0; p <= a.level(); ++p) {
        std::vector<std::size_t> comp(f.source.size(p));
        for (std::size_t c = 0; c < comp.size(); ++c)
            comp[c] = c / b.size(p);
        f.components.push_back(std::move(comp));
    }
    return f;
}

SimplicialMap cech_augmentation(const FiniteSetMap& p, int level)
{
    SimplicialMap f{descent::cech_nerve(p, level), simplicial::constant(p.target, level), {}};
    for (int n = 0; n <= level; ++n) {
        std::vector<std::size_t> comp(f.source.size(n));
        const Monotone first{{0}, n};
        for (std::size_t c = 0; c < comp.size(); ++c)
            comp[c] = p(f.source.apply(first, c));
        f.components.push_back(std::move(comp));
    }
    return f;
}

namespace {

/// Two or three vertices with at least one edge in each direction between
/// distinct vertices, so that Z_1 → Z_0 × Z_0 is onto.
FiniteSimplicialSet complete_graph(Rng& rng)
{
    FiniteSimplicialSet z = points(2 + pick(rng, 2));
    std::size_t e = 0;
    for (std::size_t a = 0; a < z.count(0); ++a)
        for (std::size_t b = 0; b < z.count(0); ++b)
            if (a != b) {
                const std::size_t copies = 1 + (pick(rng, 4) == 0 ? 1 : 0);
                for (std::size_t k = 0; k < copies; ++k)
                    z.add_cell(1, "e" + std::to_string(e++), {vertex(b), vertex(a)});
            }
    return z;
}

TruncatedSimplicialSet random_base(Rng& rng, int level)
{
    switch (pick(rng, 4)) {
    case 0:
        return points(1 + pick(rng, 2)).materialize(level);
    case 1:
        return interval().materialize(level);
    case 2:
        return loop().materialize(level);
    default:
        return sphere2().materialize(level);
    }
}

} // namespace

std::vector<HypercoverInstance> hypercover_family(Rng& rng, std::size_t count, int level)
{
    std::vector<HypercoverInstance> out;
    for (std::size_t i = 0; out.size() < count; ++i) {
        switch (i % 4) {
        case 0: {
            const std::size_t m = 1 + pick(rng, 2);
            const std::size_t n = m + pick(rng, 3);
            auto surj = all_surjections(n, m);
            out.push_back({"cech augmentation " + std::to_string(n) + "→" + std::to_string(m),
                           cech_augmentation(surj[pick(rng, surj.size())], level)});
            break;
        }
        case 1: {
            const TruncatedSimplicialSet y = random_base(rng, level);
            const auto nerve = descent::cech_nerve(random_map(rng, 1 + pick(rng, 2), 1), level);
            out.push_back({"base × cech nerve", first_projection(y, nerve)});
            break;
        }
        case 2: {
            const TruncatedSimplicialSet y = random_base(rng, std::min(level, 2));
            const SimplicialMap f = first_projection(y, complete_graph(rng).materialize(std::min(level, 2)));
            simplicial::RelativeCoskeleton rc(f, 1, level);
            out.push_back({"relative 1-coskeleton", rc.projection()});
            break;
        }
        default: {
            const TruncatedSimplicialSet y = random_base(rng, level);
            const auto c1 = descent::cech_nerve(random_map(rng, 2, 1), level);
            const auto c2 = descent::cech_nerve(random_map(rng, 1 + pick(rng, 2), 1), level);
            const SimplicialMap g = first_projection(y, c1);
            const SimplicialMap f = first_projection(g.source, c2);
            out.push_back({"composite of projections", simplicial::compose(g, f)});
            break;
        }
        }
    }
    return out;
}

// ---- motives ---------------------------------------------------------------

namespace {

QMatrix diag(std::initializer_list<int> entries)
{
    QMatrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (int e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

} // namespace

Toy toy_line()
{
    PresentedQCategory cat({"A"}, {{"1", 0, 0}}, {{"A", "1"}}, {{{"1", "1"}, {{"1", Rat(1)}}}});
    std::vector<Realization> rs;
    rs.emplace_back(cat, "one", std::vector<std::size_t>{1}, std::vector<QMatrix>{QMatrix::identity(1)});
    rs.emplace_back(cat, "two", std::vector<std::size_t>{2}, std::vector<QMatrix>{QMatrix::identity(2)});
    return {"line", std::move(cat), std::move(rs)};
}

Toy toy_idempotent()
{
    PresentedQCategory::Table table;
    table[{"1", "1"}] = {{"1", Rat(1)}};
    table[{"1", "e"}] = {{"e", Rat(1)}};
    table[{"e", "1"}] = {{"e", Rat(1)}};
    table[{"e", "e"}] = {{"e", Rat(1)}};
    PresentedQCategory cat({"A"}, {{"1", 0, 0}, {"e", 0, 0}}, {{"A", "1"}}, table);
    std::vector<Realization> rs;
    rs.emplace_back(cat, "split", std::vector<std::size_t>{2},
                    std::vector<QMatrix>{QMatrix::identity(2), diag({1, 0})});
    rs.emplace_back(cat, "skew", std::vector<std::size_t>{2},
                    std::vector<QMatrix>{QMatrix::identity(2), QMatrix{{1, 1}, {0, 0}}});
    rs.emplace_back(cat, "full", std::vector<std::size_t>{1}, std::vector<QMatrix>{QMatrix::identity(1), diag({1})});
    rs.emplace_back(cat, "null", std::vector<std::size_t>{1}, std::vector<QMatrix>{QMatrix::identity(1), diag({0})});
    return {"idempotent", std::move(cat), std::move(rs)};
}

Toy toy_arrow()
{
    PresentedQCategory::Table table;
    table[{"1A", "1A"}] = {{"1A", Rat(1)}};
    table[{"1B", "1B"}] = {{"1B", Rat(1)}};
    table[{"u", "1A"}] = {{"u", Rat(1)}};
    table[{"1B", "u"}] = {{"u", Rat(1)}};
    PresentedQCategory cat({"A", "B"}, {{"1A", 0, 0}, {"1B", 1, 1}, {"u", 0, 1}}, {{"A", "1A"}, {"B", "1B"}},
                           table);
    std::vector<Realization> rs;
    rs.emplace_back(cat, "iso", std::vector<std::size_t>{1, 1},
                    std::vector<QMatrix>{QMatrix::identity(1), QMatrix::identity(1), QMatrix{{2}}});
    rs.emplace_back(cat, "onto", std::vector<std::size_t>{2, 1},
                    std::vector<QMatrix>{QMatrix::identity(2), QMatrix::identity(1), QMatrix{{1, -1}}});
    rs.emplace_back(cat, "zero", std::vector<std::size_t>{1, 2},
                    std::vector<QMatrix>{QMatrix::identity(1), QMatrix::identity(2), QMatrix::zero(2, 1)});
    return {"arrow", std::move(cat), std::move(rs)};
}

Toy toy_group(const motives::FiniteGroup& g, const std::vector<std::vector<std::vector<std::size_t>>>& perms)
{
    PresentedQCategory cat = motives::group_algebra(g);
    std::vector<Realization> rs;
    for (std::size_t i = 0; i < perms.size(); ++i)
        rs.push_back(motives::permutation_realization(cat, g, "perm" + std::to_string(i), perms[i]));
    return {"group of order " + std::to_string(g.order()), std::move(cat), std::move(rs)};
}

std::vector<std::vector<std::vector<std::size_t>>> transitive_actions(const motives::FiniteGroup& g)
{
    const std::size_t n = g.order();
    std::vector<std::vector<std::vector<std::size_t>>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> h;
        for (std::size_t x = 0; x < n; ++x)
            if (mask >> x & 1)
                h.push_back(x);
        if (!(mask >> g.identity() & 1))
            continue;
        bool closed = true;
        for (auto a : h)
            for (auto b : h)
                closed = closed && (mask >> g.mul(a, b) & 1);
        if (!closed)
            continue;
        std::vector<std::set<std::size_t>> cosets;
        std::vector<std::size_t> coset_of(n);
        for (std::size_t x = 0; x < n; ++x) {
            std::set<std::size_t> c;
            for (auto b : h)
                c.insert(g.mul(x, b));
            auto it = std::find(cosets.begin(), cosets.end(), c);
            coset_of[x] = static_cast<std::size_t>(it - cosets.begin());
            if (it == cosets.end())
                cosets.push_back(std::move(c));
        }
        std::vector<std::vector<std::size_t>> perm(n, std::vector<std::size_t>(cosets.size()));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < cosets.size(); ++c)
                perm[a][c] = coset_of[g.mul(a, *cosets[c].begin())];
        out.push_back(std::move(perm));
    }
    return out;
}

std::vector<std::vector<std::size_t>> sum_actions(const std::vector<std::vector<std::vector<std::size_t>>>& parts)
{
    std::vector<std::vector<std::size_t>> out(parts.front().size());
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (std::size_t g = 0; g < p.size(); ++g)
            for (auto v : p[g])
                out[g].push_back(v + offset);
        offset += p.front().size();
    }
    return out;
}

std::vector<std::vector<std::size_t>> relabel(Rng& rng, const std::vector<std::vector<std::size_t>>& perm)
{
    std::vector<std::size_t> sigma(perm.front().size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<std::vector<std::size_t>> out(perm.size(), std::vector<std::size_t>(sigma.size()));
    for (std::size_t g = 0; g < perm.size(); ++g)
        for (std::size_t x = 0; x < sigma.size(); ++x)
            out[g][sigma[x]] = sigma[perm[g][x]];
    return out;
}

HomElement random_hom(Rng& rng, const PresentedQCategory& cat, std::size_t a, std::size_t b, double density)
{
    std::bernoulli_distribution keep(density);
    HomElement h = cat.zero(a, b);
    for (auto m : cat.hom_basis(a, b))
        if (keep(rng))
            h = h + small_rat(rng) * cat.basis(m);
    return h;
}

MotiveMorphism random_morphism(Rng& rng, const PresentedQCategory& cat, const AdditiveObject& s,
                               const AdditiveObject& t, double density)
{
    MotiveMorphism f{s, t, {}};
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            f.set(i, j, random_hom(rng, cat, s.summands[j], t.summands[i], density));
    return f;
}

std::pair<MotiveMorphism, MotiveMorphism> random_automorphism(Rng& rng, const PresentedQCategory& cat,
                                                              const AdditiveObject& a)
{
    MotiveMorphism n{a, a, {}};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            n.set(i, j, random_hom(rng, cat, a.summands[j], a.summands[i], 0.4));
    const MotiveMorphism id = motives::identity_morphism(cat, a);
    MotiveMorphism inverse = id, power = id;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        power = compose(cat, Rat(-1) * n, power);
        inverse = inverse + power;
    }
    return {id + n, inverse};
}

namespace {

/// Idempotent endomorphisms of `a` other than 0 and 1 that tests can split
/// with: idempotent basis morphisms and the average of all basis
/// endomorphisms when that is idempotent.
std::vector<HomElement> idempotents(const PresentedQCategory& cat, std::size_t a)
{
    std::vector<HomElement> out;
    const auto& basis = cat.hom_basis(a, a);
    HomElement sum = cat.zero(a, a);
    for (auto m : basis) {
        const HomElement e = cat.basis(m);
        sum = sum + e;
        if (m != cat.identity_morphism(a) && cat.compose(e, e) == e)
            out.push_back(e);
    }
    if (basis.size() > 1) {
        const HomElement avg = Rat(1, static_cast<unsigned long>(basis.size())) * sum;
        if (cat.compose(avg, avg) == avg)
            out.push_back(avg);
    }
    return out;
}

Rat nonzero_rat(Rng& rng)
{
    Rat r = 0;
    while (r == 0)
        r = small_rat(rng);
    return r;
}

} // namespace

MotiveComplex random_complex(Rng& rng, const PresentedQCategory& cat, int lo, int length, std::size_t max_summands)
{
    struct Entry {
        int k;
        std::size_t target;
        std::size_t source;
        HomElement h;
    };
    std::vector<std::vector<std::size_t>> objs(static_cast<std::size_t>(length));
    std::vector<Entry> entries;
    auto room = [&](int k) { return objs[static_cast<std::size_t>(k)].size() < max_summands; };
    auto push = [&](int k, std::size_t obj) {
        objs[static_cast<std::size_t>(k)].push_back(obj);
        return objs[static_cast<std::size_t>(k)].size() - 1;
    };
    const std::size_t n_obj = cat.object_count();
    const int pieces = pick_int(rng, 1, 2 * length + 1);
    for (int p = 0; p < pieces; ++p) {
        const std::size_t type = pick(rng, 3);
        if (type == 0 || length == 1) {
            const int k = pick_int(rng, 0, length - 1);
            if (room(k))
                push(k, pick(rng, n_obj));
        } else if (type == 1 || length == 2) {
            const int k = pick_int(rng, 1, length - 1);
            if (!room(k) || !room(k - 1))
                continue;
            const std::size_t a = pick(rng, n_obj), b = pick(rng, n_obj);
            HomElement h = random_hom(rng, cat, a, b);
            if (pick(rng, 3) == 0 && a == b)
                h = nonzero_rat(rng) * cat.identity(a);
            const std::size_t ia = push(k, a), ib = push(k - 1, b);
            entries.push_back({k, ib, ia, std::move(h)});
        } else {
            const int k = pick_int(rng, 2, length - 1);
            if (!room(k) || !room(k - 1) || !room(k - 2))
                continue;
            const std::size_t a = pick(rng, n_obj);
            const auto es = idempotents(cat, a);
            if (es.empty())
                continue;
            const HomElement& e = es[pick(rng, es.size())];
            const HomElement phi = nonzero_rat(rng) * (cat.identity(a) - e);
            const HomElement psi = nonzero_rat(rng) * e;
            const std::size_t ia = push(k, a), ib = push(k - 1, a), ic = push(k - 2, a);
            entries.push_back({k, ib, ia, phi});
            entries.push_back({k - 1, ic, ib, psi});
        }
    }
    std::vector<AdditiveObject> terms;
    for (auto& o : objs)
        terms.push_back(AdditiveObject{o});
    std::vector<MotiveMorphism> d;
    for (int k = 1; k < length; ++k)
        d.push_back(MotiveMorphism{terms[static_cast<std::size_t>(k)], terms[static_cast<std::size_t>(k - 1)], {}});
    for (auto& e : entries)
        d[static_cast<std::size_t>(e.k - 1)].set(e.target, e.source, e.h);
    std::vector<std::pair<MotiveMorphism, MotiveMorphism>> autos;
    for (const auto& t : terms)
        autos.push_back(random_automorphism(rng, cat, t));
    for (int k = 1; k < length; ++k) {
        auto& m = d[static_cast<std::size_t>(k - 1)];
        m = compose(cat, autos[static_cast<std::size_t>(k - 1)].first,
                    compose(cat, m, autos[static_cast<std::size_t>(k)].second));
    }
    return weight::plain_complex(cat, lo, terms, std::move(d));
}

ChainMap random_chain_map(Rng& rng, const PresentedQCategory& cat, int lo, int length, std::size_t max_summands)
{
    const std::size_t half = std::max<std::size_t>(1, max_summands / 2);
    const MotiveComplex t = random_complex(rng, cat, lo, length, half);
    const MotiveComplex w = random_complex(rng, cat, lo, length, half);
    const int hi = lo + length - 1;
    std::vector<AdditiveObject> xs;
    std::vector<MotiveMorphism> dx;
    for (int n = lo; n <= hi; ++n)
        xs.push_back(motives::direct_sum(t.term(n).carrier, w.term(n).carrier));
    for (int n = lo + 1; n <= hi; ++n)
        dx.push_back(motives::direct_sum(cat, t.differential(n), w.differential(n)));
    const MotiveComplex x0 = weight::plain_complex(cat, lo, xs, dx);

    std::map<int, MotiveMorphism> s;
    for (int n = lo; n < hi; ++n)
        s[n] = random_morphism(rng, cat, t.term(n).carrier, x0.term(n + 1).carrier, 0.3);
    auto s_at = [&](int n) {
        auto it = s.find(n);
        return it != s.end() ? it->second
                             : motives::zero_morphism(cat, t.term(n).carrier, x0.term(n + 1).carrier);
    };
    std::vector<std::pair<MotiveMorphism, MotiveMorphism>> autos;
    for (int n = lo; n <= hi; ++n)
        autos.push_back(random_automorphism(rng, cat, x0.term(n).carrier));
    auto phi = [&](int n) { return autos[static_cast<std::size_t>(n - lo)]; };

    std::vector<MotiveMorphism> d;
    for (int n = lo + 1; n <= hi; ++n)
        d.push_back(compose(cat, phi(n - 1).first, compose(cat, x0.differential(n), phi(n).second)));
    const MotiveComplex x = weight::plain_complex(cat, lo, xs, std::move(d));

    ChainMap f{t, x, {}};
    for (int n = lo; n <= hi; ++n) {
        const AdditiveObject& tn = t.term(n).carrier;
        MotiveMorphism iota{tn, x0.term(n).carrier, {}};
        for (std::size_t i = 0; i < tn.size(); ++i)
            iota.set(i, i, cat.identity(tn.summands[i]));
        MotiveMorphism g = iota + compose(cat, x0.differential(n + 1), s_at(n));
        if (n > lo)
            g = g + compose(cat, s_at(n - 1), t.differential(n));
        f.components[n] = compose(cat, phi(n).first, g);
    }
    return f;
}

namespace {

MotiveMorphism scalar_idempotent(const PresentedQCategory& cat, const AdditiveObject& a, std::size_t e)
{
    MotiveMorphism m{a, a, {}};
    for (std::size_t i = 0; i < a.size(); ++i)
        m.set(i, i, cat.basis(e));
    return m;
}

} // namespace

MotiveComplex karoubi_part(const PresentedQCategory& cat, const MotiveComplex& c, std::size_t e)
{
    MotiveComplex out{c.lo, {}, {}};
    for (const auto& t : c.terms)
        out.terms.push_back(motives::karoubi(cat, t.carrier, scalar_idempotent(cat, t.carrier, e)));
    for (const auto& d : c.d)
        out.d.push_back(compose(cat, scalar_idempotent(cat, d.target, e), d));
    return out;
}

ChainMap karoubi_part(const PresentedQCategory& cat, const ChainMap& f, std::size_t e)
{
    ChainMap out{karoubi_part(cat, f.source, e), karoubi_part(cat, f.target, e), {}};
    for (const auto& [n, m] : f.components)
        out.components[n] = compose(cat, scalar_idempotent(cat, m.target, e), m);
    return out;
}

long oracle_realized_euler(const PresentedQCategory& cat, const Realization& r, const MotiveComplex& c)
{
    long chi = 0;
    for (int n = c.lo; n <= c.hi(); ++n) {
        const auto& t = c.term(n);
        const long rank = static_cast<long>(integer_rank(motives::realize(cat, r, t.idempotent)));
        chi += (n % 2 == 0 ? 1 : -1) * rank;
    }
    return chi;
}

} // namespace weightcx::testing
