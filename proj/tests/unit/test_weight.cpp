#include "support.hpp"

#include "weightcx/weight/reduce.hpp"
#include "weightcx/weight/simplicial_motive.hpp"
#include "weightcx/weight/universal.hpp"

#include <doctest.h>

using namespace weightcx;
using namespace weightcx::weight;
using linalg::homology_dims;
using linalg::Rat;
using motives::FiniteGroup;
using motives::GroupAction;
using motives::identity_morphism;
using motives::zero_morphism;
using testing::Rng;

namespace {

std::map<int, std::size_t> realized_homology(const PresentedQCategory& cat, const Realization& r,
                                             const MotiveComplex& c)
{
    return homology_dims(realize_complex(cat, r, c));
}

std::size_t homology_at(const std::map<int, std::size_t>& h, int n)
{
    const auto it = h.find(n);
    return it == h.end() ? 0 : it->second;
}

long chi(const std::map<int, std::size_t>& h)
{
    long out = 0;
    for (const auto& [n, d] : h)
        out += (n % 2 == 0 ? 1 : -1) * static_cast<long>(d);
    return out;
}

std::vector<std::vector<std::size_t>> regular_perm(const FiniteGroup& g)
{
    std::vector<std::vector<std::size_t>> perm(g.order(), std::vector<std::size_t>(g.order()));
    for (std::size_t h = 0; h < g.order(); ++h)
        for (std::size_t x = 0; x < g.order(); ++x)
            perm[h][x] = g.mul(h, x);
    return perm;
}

/// The zero complex over the degrees of c.
MotiveComplex zero_like(const PresentedQCategory& cat, const MotiveComplex& c)
{
    std::vector<AdditiveObject> terms(c.terms.size());
    std::vector<MotiveMorphism> d;
    for (std::size_t k = 0; k + 1 < c.terms.size(); ++k)
        d.push_back(zero_morphism(cat, {}, {}));
    return plain_complex(cat, c.lo, terms, d);
}

ChainMap zero_map(const PresentedQCategory& cat, const MotiveComplex& s, const MotiveComplex& t)
{
    ChainMap f{s, t, {}};
    for (int n = s.lo; n <= s.hi(); ++n)
        f.components[n] = zero_morphism(cat, s.term(n).carrier, t.term(n).carrier);
    return f;
}

SimplicialMotiveMap identity_map(const PresentedQCategory& cat, const SimplicialMotive& x)
{
    SimplicialMotiveMap f{x, x, {}};
    for (const auto& c : x.components)
        f.components.push_back(identity_morphism(cat, c));
    return f;
}

std::vector<testing::Toy> toys()
{
    std::vector<testing::Toy> out{testing::toy_line(), testing::toy_idempotent(), testing::toy_arrow()};
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    out.push_back(testing::toy_group(z3, testing::transitive_actions(z3)));
    return out;
}

} // namespace

TEST_CASE("gamma of a constant simplicial motive")
{
    const testing::Toy line = testing::toy_line();
    const AdditiveObject a{{0}};
    const MotiveComplex c = gamma(line.cat, constant_motive(line.cat, a, 4));
    CHECK(c.lo == 0);
    CHECK(c.hi() == 4);
    for (int n = 1; n <= 4; ++n) {
        if (n % 2 == 1)
            CHECK(c.differential(n).is_zero());
        else
            CHECK(c.differential(n) == identity_morphism(line.cat, a));
    }
    CHECK(validate(line.cat, c).empty());

    const MotiveComplex point = gamma(line.cat, constant_motive(line.cat, a, 0));
    CHECK(point.terms.size() == 1);
    CHECK(point.d.empty());
    CHECK(realized_homology(line.cat, line.realizations[1], point) == std::map<int, std::size_t>{{0, 2}});
}

TEST_CASE("gamma squares to zero")
{
    for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
        const testing::Toy toy = testing::toy_group(g, testing::transitive_actions(g));
        const GroupAction a = motives::regular_action(toy.cat, g);
        const SimplicialMotive bar = bar_object(toy.cat, a, 3);
        CHECK(validate(toy.cat, bar).empty());
        const MotiveComplex c = gamma(toy.cat, bar);
        CHECK(validate(toy.cat, c).empty());
        for (const auto& r : toy.realizations)
            CHECK(!realize_complex(toy.cat, r, c).square_zero_failure());
    }
}

TEST_CASE("the bar object face convention")
{
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    const PresentedQCategory cat = motives::group_algebra(s3);
    const GroupAction a = motives::regular_action(cat, s3);
    CHECK(validate(cat, bar_object(cat, a, 3, BarFace::inverse)).empty());
    CHECK(!validate(cat, bar_object(cat, a, 3, BarFace::direct)).empty());

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory zcat = motives::group_algebra(z2);
    CHECK(validate(zcat, bar_object(zcat, motives::regular_action(zcat, z2), 3, BarFace::direct)).empty());
}

TEST_CASE("bar quotient examples")
{
    const FiniteGroup one = FiniteGroup::cyclic(1);
    const PresentedQCategory trivial = motives::group_algebra(one);
    const GroupAction t = motives::regular_action(trivial, one);
    CHECK(bar_quotient(trivial, t, 3) == gamma(trivial, constant_motive(trivial, t.object, 3)));

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = motives::group_algebra(z2);
    const Realization swap = motives::permutation_realization(cat, z2, "swap", regular_perm(z2));
    const GroupAction a = motives::regular_action(cat, z2);
    const MotiveComplex bar = bar_quotient(cat, a, 4);
    CHECK(bar == gamma(cat, bar_object(cat, a, 4)));
    const auto h = realized_homology(cat, swap, bar);
    for (int n = 0; n < 4; ++n)
        CHECK(h.at(n) == (n == 0 ? 1u : 0u));
    CHECK(realize_complex(cat, swap, bar).dim(3) == 16);

    const FiniteGroup s3 = FiniteGroup::symmetric3();
    const PresentedQCategory scat = motives::group_algebra(s3);
    const Realization reg = motives::permutation_realization(scat, s3, "regular", regular_perm(s3));
    const auto hs = realized_homology(scat, reg, bar_quotient(scat, motives::regular_action(scat, s3), 3));
    CHECK(hs.at(0) == 1);
    CHECK(hs.at(1) == 0);
    CHECK(hs.at(2) == 0);
}

TEST_CASE("invariants motive examples")
{
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = motives::group_algebra(z2);
    const Realization swap = motives::permutation_realization(cat, z2, "swap", regular_perm(z2));
    const AdditiveObject x{{0}};
    const GroupAction trivial{z2, x, {identity_morphism(cat, x), identity_morphism(cat, x)}};
    const KaroubiObject inv = invariants_motive(cat, trivial);
    CHECK(inv == motives::plain(cat, x));

    const GroupAction a = motives::regular_action(cat, z2);
    CHECK(motives::realized_rank(cat, swap, invariants_motive(cat, a)) == 1);
    const MotiveComplex degree0 = concentrated(invariants_motive(cat, a));
    CHECK(realized_homology(cat, swap, degree0).at(0) == 1);
    CHECK(realized_homology(cat, swap, bar_quotient(cat, a, 2)).at(0) == 1);
}

TEST_CASE("cone examples")
{
    Rng rng(131);
    for (const auto& toy : toys()) {
        for (int trial = 0; trial < 4; ++trial) {
            const MotiveComplex x = testing::random_complex(rng, toy.cat, 0, 3, 3);
            REQUIRE(validate(toy.cat, x).empty());

            const MotiveComplex cid = cone(toy.cat, identity_chain_map(toy.cat, x));
            CHECK(validate(toy.cat, cid).empty());
            for (const auto& r : toy.realizations)
                for (const auto& [n, d] : realized_homology(toy.cat, r, cid))
                    CHECK(d == 0);

            const MotiveComplex c0 = cone(toy.cat, zero_map(toy.cat, x, zero_like(toy.cat, x)));
            for (const auto& r : toy.realizations) {
                const auto hx = realized_homology(toy.cat, r, x);
                const auto hc = realized_homology(toy.cat, r, c0);
                const auto hs = realized_homology(toy.cat, r, shift(toy.cat, x, 1));
                for (int n = x.lo - 1; n <= x.hi() + 1; ++n) {
                    CHECK(homology_at(hc, n + 1) == homology_at(hx, n));
                    CHECK(homology_at(hs, n + 1) == homology_at(hx, n));
                }
            }
        }
    }
}

TEST_CASE("cone rejects maps that are not chain maps")
{
    const testing::Toy line = testing::toy_line();
    const AdditiveObject a{{0}};
    const MotiveComplex x = plain_complex(line.cat, 0, {a, a}, {identity_morphism(line.cat, a)});
    ChainMap f = identity_chain_map(line.cat, x);
    f.components[0] = Rat(2) * identity_morphism(line.cat, a);
    CHECK(!chain_map_defects(line.cat, f).empty());
    CHECK_THROWS_AS(cone(line.cat, f), WeightError);
    CHECK_THROWS_AS(triangle(line.cat, f), WeightError);
}

TEST_CASE("cone homology fits the long exact sequence")
{
    Rng rng(137);
    for (const auto& toy : toys()) {
        for (int trial = 0; trial < 6; ++trial) {
            ChainMap f = testing::random_chain_map(rng, toy.cat, testing::pick_int(rng, -1, 1), 3, 2);
            if (toy.name == "idempotent" && trial % 2 == 1)
                f = testing::karoubi_part(toy.cat, f, toy.cat.morphism("e"));
            REQUIRE(chain_map_defects(toy.cat, f).empty());
            const MotiveComplex c = cone(toy.cat, f);
            CHECK(validate(toy.cat, c).empty());
            const auto ec = euler_char(toy.cat, c, toy.realizations);
            const auto ex = euler_char(toy.cat, f.source, toy.realizations);
            const auto ey = euler_char(toy.cat, f.target, toy.realizations);
            for (const auto& r : toy.realizations) {
                const auto hx = realized_homology(toy.cat, r, f.source);
                const auto hy = realized_homology(toy.cat, r, f.target);
                const auto hc = realized_homology(toy.cat, r, c);
                for (const auto& [n, d] : hc)
                    CHECK(d <= homology_at(hy, n) + homology_at(hx, n - 1));
                CHECK(chi(hc) == chi(hy) - chi(hx));
                CHECK(ec.realized_rank.at(r.name()) == ey.realized_rank.at(r.name()) - ex.realized_rank.at(r.name()));
                CHECK(ec.realized_rank.at(r.name()) == testing::oracle_realized_euler(toy.cat, r, c));
            }
        }
    }
}

TEST_CASE("triangle examples")
{
    Rng rng(139);
    const testing::Toy toy = testing::toy_arrow();
    const MotiveComplex x = testing::random_complex(rng, toy.cat, 0, 3, 3);

    const Triangle from_zero = triangle(toy.cat, zero_map(toy.cat, zero_like(toy.cat, x), x));
    CHECK(check_triangle(toy.cat, from_zero, toy.realizations).ok());
    for (const auto& r : toy.realizations) {
        const auto hu = realized_homology(toy.cat, r, from_zero.u);
        const auto hx = realized_homology(toy.cat, r, x);
        for (int n = x.lo; n <= x.hi(); ++n)
            CHECK(homology_at(hu, n) == homology_at(hx, n));
    }

    const Triangle same = triangle(toy.cat, identity_chain_map(toy.cat, x));
    CHECK(check_triangle(toy.cat, same, toy.realizations).ok());
    for (const auto& r : toy.realizations)
        for (const auto& [n, d] : realized_homology(toy.cat, r, same.u))
            CHECK(d == 0);

    for (const auto& t : toys())
        for (int trial = 0; trial < 4; ++trial) {
            const ChainMap f = testing::random_chain_map(rng, t.cat, 0, 3, 2);
            const Triangle tri = triangle(t.cat, f);
            const TriangleReport report = check_triangle(t.cat, tri, t.realizations);
            CHECK(report.ok());
            for (const auto& r : t.realizations)
                CHECK(testing::oracle_realized_euler(t.cat, r, tri.x) ==
                      testing::oracle_realized_euler(t.cat, r, tri.t) +
                          testing::oracle_realized_euler(t.cat, r, tri.u));
        }
}

TEST_CASE("euler characteristic examples")
{
    const testing::Toy line = testing::toy_line();
    const AdditiveObject a{{0}};
    const MotiveComplex single = plain_complex(line.cat, 0, {a}, {});
    const auto e = euler_char(line.cat, single, line.realizations);
    CHECK(e.terms.size() == 1);
    CHECK(e.realized_rank.at("one") == 1);
    CHECK(e.realized_rank.at("two") == 2);

    const MotiveComplex cid = cone(line.cat, identity_chain_map(line.cat, single));
    for (const auto& [name, rank] : euler_char(line.cat, cid, line.realizations).realized_rank)
        CHECK(rank == 0);

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = motives::group_algebra(z2);
    const std::vector<Realization> rs{motives::permutation_realization(cat, z2, "swap", regular_perm(z2))};
    const MotiveComplex bar = bar_quotient(cat, motives::regular_action(cat, z2), 4);
    long partial = 0;
    long copies = 1;
    for (int n = 0; n <= 4; ++n, copies *= 2)
        partial += (n % 2 == 0 ? 1 : -1) * 2 * copies;
    CHECK(euler_char(cat, bar, rs).realized_rank.at("swap") == partial);
    CHECK(partial == 22);
}

TEST_CASE("reduction examples")
{
    const testing::Toy line = testing::toy_line();
    const AdditiveObject a{{0}};
    const MotiveComplex single = plain_complex(line.cat, 0, {a}, {});
    const ReductionResult cid = reduce(line.cat, cone(line.cat, identity_chain_map(line.cat, single)),
                                       line.realizations[1]);
    CHECK(is_zero_complex(cid.reduced));
    CHECK(cid.log.size() == 1);
    CHECK(cid.preserved());

    const testing::Toy arrow = testing::toy_arrow();
    MotiveMorphism u{AdditiveObject{{0}}, AdditiveObject{{1}}, {}};
    u.set(0, 0, arrow.cat.basis(arrow.cat.morphism("u")));
    const MotiveComplex stiff = plain_complex(arrow.cat, 0, {AdditiveObject{{1}}, AdditiveObject{{0}}}, {u});
    for (const auto& r : arrow.realizations) {
        const ReductionResult res = reduce(arrow.cat, stiff, r);
        CHECK(res.log.empty());
        CHECK(res.reduced == stiff);
        CHECK(res.homology_after == realized_homology(arrow.cat, r, stiff));
    }

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = motives::group_algebra(z2);
    const Realization swap = motives::permutation_realization(cat, z2, "swap", regular_perm(z2));
    const ReductionResult bar = reduce(cat, bar_quotient(cat, motives::regular_action(cat, z2), 4), swap);
    CHECK(bar.preserved());
    for (int n = 0; n < 4; ++n)
        CHECK(bar.homology_after.at(n) == (n == 0 ? 1u : 0u));
}

TEST_CASE("reduction preserves realized homology and replays")
{
    Rng rng(149);
    for (const auto& toy : toys())
        for (int trial = 0; trial < 8; ++trial) {
            const MotiveComplex c = testing::random_complex(rng, toy.cat, testing::pick_int(rng, -2, 2), 4, 3);
            for (const auto& r : toy.realizations) {
                const ReductionResult res = reduce(toy.cat, c, r);
                CHECK(res.homology_before == testing::oracle_homology(realize_complex(toy.cat, r, c)));
                CHECK(res.homology_after == testing::oracle_homology(realize_complex(toy.cat, r, res.reduced)));
                CHECK(res.preserved());
                CHECK(replay(toy.cat, c, res.log) == res.reduced);
                CHECK(validate(toy.cat, res.reduced).empty());
            }
        }
}

TEST_CASE("universal equivalence examples")
{
    const testing::Toy line = testing::toy_line();
    const AdditiveObject a{{0}};
    const SimplicialMotive x = constant_motive(line.cat, a, 2);
    const SimplicialMotiveMap id = identity_map(line.cat, x);
    CHECK(verify_universal_equivalence(line.cat, {id, id, id, id}, line.realizations).ok());

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = motives::group_algebra(z2);
    const std::vector<Realization> rs{motives::permutation_realization(cat, z2, "swap", regular_perm(z2))};
    const SimplicialMotive bar = bar_object(cat, motives::regular_action(cat, z2), 2);
    const SimplicialMotiveMap bid = identity_map(cat, bar);
    SimplicialMotiveMap twice = bid;
    for (auto& m : twice.components)
        m = Rat(2) * m;
    const UniversalReport vertical = verify_universal_equivalence(cat, {bid, bid, twice, twice}, rs);
    CHECK(vertical.ok());
    CHECK(vertical.realizations.at("swap").size() == 2);

    const SimplicialMotive zero = constant_motive(line.cat, AdditiveObject{}, 0);
    const SimplicialMotive point = constant_motive(line.cat, a, 0);
    const SimplicialMotiveMap into{zero, point, {zero_morphism(line.cat, {}, a)}};
    const SimplicialMotiveMap none = identity_map(line.cat, zero);
    const SimplicialMotiveMap out{point, zero, {zero_morphism(line.cat, a, {})}};
    const UniversalReport flagged =
        verify_universal_equivalence(line.cat, {into, none, none, out}, line.realizations, 1);
    CHECK(!flagged.ok());
    CHECK(flagged.realizations.at("two")[0].source_homology == 2);
    CHECK(flagged.realizations.at("two")[0].target_homology == 0);

    const SimplicialMotiveMap half{point, point, {Rat(1, 2) * identity_morphism(line.cat, a)}};
    const SimplicialMotiveMap pid = identity_map(line.cat, point);
    CHECK_THROWS_AS(verify_universal_equivalence(line.cat, {pid, pid, pid, half}, line.realizations), WeightError);
}
