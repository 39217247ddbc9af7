#include "support.hpp"

#include "weightcx/motives/k0.hpp"

#include <doctest.h>

using namespace weightcx;
using namespace weightcx::motives;
using linalg::Rat;
using testing::Rng;

namespace {

PresentedQCategory::Table three_element_table(const std::string& bb)
{
    PresentedQCategory::Table t;
    t[{"1", "1"}] = {{"1", Rat(1)}};
    for (const char* m : {"a", "b"}) {
        t[{"1", m}] = {{m, Rat(1)}};
        t[{m, "1"}] = {{m, Rat(1)}};
    }
    t[{"a", "a"}] = {{"a", Rat(1)}};
    t[{"a", "b"}] = {{"b", Rat(1)}};
    t[{"b", "a"}] = {{"a", Rat(1)}};
    t[{"b", "b"}] = {{bb, Rat(1)}};
    return t;
}

PresentedQCategory three_element(const std::string& bb)
{
    return PresentedQCategory({"P"}, {{"1", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {{"P", "1"}}, three_element_table(bb));
}

std::vector<std::vector<std::size_t>> regular_perm(const FiniteGroup& g)
{
    std::vector<std::vector<std::size_t>> perm(g.order(), std::vector<std::size_t>(g.order()));
    for (std::size_t h = 0; h < g.order(); ++h)
        for (std::size_t x = 0; x < g.order(); ++x)
            perm[h][x] = g.mul(h, x);
    return perm;
}

std::vector<testing::Toy> all_toys()
{
    std::vector<testing::Toy> toys{testing::toy_line(), testing::toy_idempotent(), testing::toy_arrow()};
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    toys.push_back(testing::toy_group(s3, testing::transitive_actions(s3)));
    return toys;
}

AdditiveObject random_object(Rng& rng, const PresentedQCategory& cat, std::size_t max_summands)
{
    AdditiveObject a;
    const std::size_t n = 1 + testing::pick(rng, max_summands);
    for (std::size_t i = 0; i < n; ++i)
        a.summands.push_back(testing::pick(rng, cat.object_count()));
    return a;
}

} // namespace

TEST_CASE("loading presented categories")
{
    const testing::Toy line = testing::toy_line();
    CHECK(line.cat.object_count() == 1);
    CHECK(line.cat.hom_basis(0, 0).size() == 1);

    const PresentedQCategory z2 = group_algebra(FiniteGroup::cyclic(2));
    const HomElement sigma = z2.basis(z2.morphism("g1"));
    CHECK(z2.compose(sigma, sigma) == z2.identity(0));
    CHECK(z2.compose(z2.identity(0), sigma) == sigma);

    CHECK_NOTHROW(three_element("b"));
    try {
        three_element("a");
        FAIL("corrupted table accepted");
    } catch (const MotiveError& e) {
        const std::string what = e.what();
        CHECK(what.find("associativity") != std::string::npos);
        CHECK(what.find("(b, a, b)") != std::string::npos);
    }

    PresentedQCategory::Table missing = three_element_table("b");
    missing.erase({"b", "a"});
    CHECK_THROWS_AS(PresentedQCategory({"P"}, {{"1", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {{"P", "1"}}, missing),
                    MotiveError);

    PresentedQCategory::Table bad_unit = three_element_table("b");
    bad_unit[{"1", "a"}] = {{"b", Rat(1)}};
    CHECK_THROWS_AS(PresentedQCategory({"P"}, {{"1", 0, 0}, {"a", 0, 0}, {"b", 0, 0}}, {{"P", "1"}}, bad_unit),
                    MotiveError);

    PresentedQCategory::Table mistyped;
    mistyped[{"1A", "1A"}] = {{"1A", Rat(1)}};
    mistyped[{"1B", "1B"}] = {{"1B", Rat(1)}};
    mistyped[{"u", "1A"}] = {{"1B", Rat(1)}};
    mistyped[{"1B", "u"}] = {{"u", Rat(1)}};
    CHECK_THROWS_AS(PresentedQCategory({"A", "B"}, {{"1A", 0, 0}, {"1B", 1, 1}, {"u", 0, 1}},
                                       {{"A", "1A"}, {"B", "1B"}}, mistyped),
                    MotiveError);
}

TEST_CASE("realizations are checked at load")
{
    const PresentedQCategory z2 = group_algebra(FiniteGroup::cyclic(2));
    CHECK_NOTHROW(Realization(z2, "swap", {2}, {QMatrix::identity(2), QMatrix{{0, 1}, {1, 0}}}));
    CHECK_NOTHROW(Realization(z2, "sign", {1}, {QMatrix::identity(1), QMatrix{{-1}}}));
    CHECK_THROWS_AS(Realization(z2, "bad", {2}, {QMatrix::identity(2), QMatrix{{1, 0}, {0, 2}}}), MotiveError);
    CHECK_THROWS_AS(Realization(z2, "shape", {2}, {QMatrix::identity(2), QMatrix::identity(3)}), MotiveError);
    CHECK_THROWS_AS(Realization(z2, "unit", {1}, {QMatrix{{2}}, QMatrix{{1}}}), MotiveError);
}

TEST_CASE("composition in the additive completion")
{
    Rng rng(101);
    for (const auto& toy : all_toys()) {
        for (int trial = 0; trial < 10; ++trial) {
            const AdditiveObject a = random_object(rng, toy.cat, 3), b = random_object(rng, toy.cat, 3);
            const MotiveMorphism f = testing::random_morphism(rng, toy.cat, a, b);
            CHECK(well_typed(toy.cat, f));
            CHECK(compose(toy.cat, identity_morphism(toy.cat, b), f) == f);
            CHECK(compose(toy.cat, f, identity_morphism(toy.cat, a)) == f);
            CHECK(compose(toy.cat, f, zero_morphism(toy.cat, b, a)).is_zero());
            if (!(a == b))
                CHECK_THROWS_AS(compose(toy.cat, f, f), MotiveError);
        }
    }
}

TEST_CASE("realization is functorial")
{
    Rng rng(103);
    const auto toys = all_toys();
    for (const auto& toy : toys)
        for (const auto& r : toy.realizations) {
            for (std::size_t a = 0; a < toy.cat.object_count(); ++a)
                CHECK(r.realize(toy.cat, toy.cat.identity(a)).is_identity());
            for (std::size_t f = 0; f < toy.cat.morphism_count(); ++f)
                for (std::size_t g = 0; g < toy.cat.morphism_count(); ++g) {
                    if (toy.cat.morphism(g).target != toy.cat.morphism(f).source)
                        continue;
                    const HomElement fg = toy.cat.compose(toy.cat.basis(f), toy.cat.basis(g));
                    CHECK(r.realize(toy.cat, fg) == r.basis_matrix(f) * r.basis_matrix(g));
                }
        }

    int pairs = 0;
    while (pairs < 30) {
        const auto& toy = toys[static_cast<std::size_t>(pairs) % toys.size()];
        const AdditiveObject a = random_object(rng, toy.cat, 3), b = random_object(rng, toy.cat, 3),
                             c = random_object(rng, toy.cat, 3);
        const MotiveMorphism g = testing::random_morphism(rng, toy.cat, a, b);
        const MotiveMorphism f = testing::random_morphism(rng, toy.cat, b, c);
        const MotiveMorphism fg = compose(toy.cat, f, g);
        for (const auto& r : toy.realizations) {
            CHECK(realize(toy.cat, r, fg) == realize(toy.cat, r, f) * realize(toy.cat, r, g));
            CHECK(realize(toy.cat, r, f + f) == realize(toy.cat, r, Rat(2) * f));
            CHECK(realize_sparse(toy.cat, r, fg).to_dense() == realize(toy.cat, r, fg));
            CHECK(realize(toy.cat, r, identity_morphism(toy.cat, a)).is_identity());
        }
        ++pairs;
    }
}

TEST_CASE("average projector examples")
{
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = group_algebra(z2);
    const Realization swap = permutation_realization(cat, z2, "swap", regular_perm(z2));
    const Realization fixed = permutation_realization(cat, z2, "fixed", {{0, 1, 2}, {0, 1, 2}});

    const GroupAction trivial{z2, AdditiveObject{{0}},
                              {identity_morphism(cat, AdditiveObject{{0}}), identity_morphism(cat, AdditiveObject{{0}})}};
    validate_action(cat, trivial);
    const KaroubiObject t = average_projector(cat, trivial);
    CHECK(t.idempotent == identity_morphism(cat, t.carrier));
    CHECK(realized_rank(cat, fixed, t) == 3);

    const GroupAction regular = regular_action(cat, z2);
    const KaroubiObject e = average_projector(cat, regular);
    CHECK(realize(cat, swap, e.idempotent) == QMatrix{{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}});
    CHECK(realized_rank(cat, swap, e) == 1);
    CHECK(realized_rank(cat, fixed, e) == 3);

    const FiniteGroup s3 = FiniteGroup::symmetric3();
    const PresentedQCategory s3cat = group_algebra(s3);
    const Realization s3reg = permutation_realization(s3cat, s3, "regular", regular_perm(s3));
    const KaroubiObject es3 = average_projector(s3cat, regular_action(s3cat, s3));
    CHECK(realized_rank(s3cat, s3reg, es3) == 1);
    CHECK(character_average(s3cat, s3reg, regular_action(s3cat, s3)) == Rat(1));
}

TEST_CASE("broken actions are rejected")
{
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    const PresentedQCategory cat = group_algebra(z3);
    GroupAction a = regular_action(cat, z3);
    std::swap(a.act[1], a.act[2]);
    a.act[1] = a.act[0];
    CHECK_THROWS_AS(validate_action(cat, a), MotiveError);
    CHECK_THROWS_AS(karoubi(cat, AdditiveObject{{0}}, Rat(2) * identity_morphism(cat, AdditiveObject{{0}})),
                    MotiveError);
}

TEST_CASE("average projector rank equals the character average")
{
    Rng rng(107);
    for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
        auto actions = testing::transitive_actions(g);
        const std::size_t transitive = actions.size();
        for (std::size_t i = 0; i < transitive; ++i)
            for (std::size_t j = i; j < transitive; ++j)
                if (actions[i][0].size() + actions[j][0].size() <= 6)
                    actions.push_back(testing::relabel(rng, testing::sum_actions({actions[i], actions[j]})));
        const testing::Toy toy = testing::toy_group(g, actions);
        const GroupAction a = regular_action(toy.cat, g);
        const KaroubiObject e = average_projector(toy.cat, a);
        CHECK(compose(toy.cat, e.idempotent, e.idempotent) == e.idempotent);
        for (const auto& r : toy.realizations) {
            const QMatrix m = realize(toy.cat, r, e.idempotent);
            CHECK(m * m == m);
            const Rat chi = character_average(toy.cat, r, a);
            CHECK(chi.get_den() == 1);
            CHECK(Rat(static_cast<long>(realized_rank(toy.cat, r, e))) == chi);
            CHECK(testing::integer_rank(m) == realized_rank(toy.cat, r, e));
        }
    }
}

TEST_CASE("K0 class examples")
{
    const testing::Toy toy = testing::toy_idempotent();
    const AdditiveObject a{{0}};
    const K0Class whole = k0_class(toy.cat, plain(toy.cat, a), toy.realizations);
    for (const auto& r : toy.realizations)
        CHECK(whole.realized_rank.at(r.name()) == static_cast<long>(r.dim(0)));

    MotiveMorphism e{a, a, {}};
    e.set(0, 0, toy.cat.basis(toy.cat.morphism("e")));
    const K0Class image = k0_class(toy.cat, karoubi(toy.cat, a, e), toy.realizations);
    CHECK(image.realized_rank.at("split") == 1);
    CHECK(image.realized_rank.at("skew") == 1);
    CHECK(image.realized_rank.at("full") == 1);
    CHECK(image.realized_rank.at("null") == 0);

    const K0Class none = k0_class(toy.cat, karoubi(toy.cat, a, zero_morphism(toy.cat, a, a)), toy.realizations);
    for (const auto& [name, rank] : none.realized_rank)
        CHECK(rank == 0);

    const MotiveMorphism complement = identity_morphism(toy.cat, a) - e;
    const K0Class rest = k0_class(toy.cat, karoubi(toy.cat, a, complement), toy.realizations);
    const K0Class sum = image + rest;
    CHECK(sum.terms.size() == 2);
    CHECK(sum.realized_rank == whole.realized_rank);
    const K0Class diff = whole - image;
    CHECK(diff.realized_rank == rest.realized_rank);
    CHECK((-whole).realized_rank.at("split") == -2);

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const PresentedQCategory cat = group_algebra(z2);
    const std::vector<Realization> rs{permutation_realization(cat, z2, "swap", regular_perm(z2))};
    CHECK(k0_class(cat, average_projector(cat, regular_action(cat, z2)), rs).realized_rank.at("swap") == 1);
}

TEST_CASE("realized rank is invariant under conjugation")
{
    Rng rng(109);
    for (const auto& toy : all_toys()) {
        for (int trial = 0; trial < 5; ++trial) {
            const AdditiveObject a = random_object(rng, toy.cat, 3);
            MotiveMorphism e = zero_morphism(toy.cat, a, a);
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto& basis = toy.cat.hom_basis(a.summands[i], a.summands[i]);
                HomElement block = toy.cat.identity(a.summands[i]);
                if (basis.size() > 1 && testing::pick(rng, 2) == 0) {
                    const std::size_t m = basis[1 + testing::pick(rng, basis.size() - 1)];
                    if (toy.cat.compose(toy.cat.basis(m), toy.cat.basis(m)) == toy.cat.basis(m))
                        block = toy.cat.basis(m);
                } else if (testing::pick(rng, 3) == 0) {
                    block = toy.cat.zero(a.summands[i], a.summands[i]);
                }
                e.set(i, i, block);
            }
            const KaroubiObject k = karoubi(toy.cat, a, e);
            const auto [phi, phi_inv] = testing::random_automorphism(rng, toy.cat, a);
            const KaroubiObject conj =
                karoubi(toy.cat, a, compose(toy.cat, phi, compose(toy.cat, e, phi_inv)));
            const K0Class before = k0_class(toy.cat, k, toy.realizations);
            const K0Class after = k0_class(toy.cat, conj, toy.realizations);
            CHECK(before.realized_rank == after.realized_rank);

            for (const auto& r : toy.realizations) {
                const QMatrix m = realize(toy.cat, r, e);
                const std::size_t n = m.rows();
                QMatrix p = QMatrix::identity(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        p(i, j) = testing::small_rat(rng);
                const QMatrix q = p.transpose();
                const QMatrix basis_change = p * q;
                const QMatrix moved = basis_change * m * linalg::inverse(basis_change);
                CHECK(testing::integer_rank(moved) == realized_rank(toy.cat, r, k));
            }
        }
    }
}
