#include "doctest.h"

#include "kanex/catalog.hpp"
#include "kanex/encat.hpp"
#include "support.hpp"

using namespace kanex;
using namespace kanex::testing;

namespace {

const Field kQ = Field::rationals();

// Left multiplication e_g (x) e_x -> e_{g.x} straight from the table.
Matrix left_mult(const FiniteMonoid& m, const std::function<std::size_t(std::size_t)>& embed, std::size_t hom,
                 std::size_t target)
{
    Matrix r(target, hom * target);
    for (std::size_t g = 0; g < hom; ++g)
        for (std::size_t x = 0; x < target; ++x)
            r(m.op(embed(g), x), g * target + x) = 1;
    return r;
}

} // namespace

TEST_CASE("group algebra categories are lawful; a perturbed one is caught")
{
    auto z2 = cyclic_group(2);
    auto a = monoid_algebra_category(z2, kQ);
    CHECK(check_category(*a).lawful());
    CHECK(check_functor(identity_functor(a)).lawful());
    CHECK(check_category(*monoid_algebra_category(symmetric_group3(), Field::prime(5))).lawful());
    CHECK(check_category(*indiscrete_category(BaseCtx::finvect(kQ), 3)).lawful());
    CHECK(check_category(*discrete_category(BaseCtx::finset(), 2)).lawful());
    CHECK(check_category(*monoid_set_category(left_zero_monoid())).lawful());

    auto bad = VCat::build(
        a->ctx(), {"*"}, [&](std::size_t, std::size_t) { return VObj{2}; },
        [&](std::size_t x, std::size_t y, std::size_t z) {
            Matrix m = a->comp(x, y, z).matrix();
            // e.t = e
            m(0, 1) = 1;
            m(1, 1) = 0;
            return VMap::from_matrix(a->ctx(), m);
        },
        [&](std::size_t x) { return a->ident(x); });
    auto r = check_category(*bad);
    REQUIRE_FALSE(r.lawful());
    bool assoc = false;
    for (const auto& v : r.violations)
        if (v.law == "associativity") {
            assoc = true;
            CHECK(v.at == std::vector<std::size_t>{0, 0, 0, 0});
            CHECK_FALSE(v.lhs == v.rhs);
        }
    CHECK(assoc);
}

TEST_CASE("representables")
{
    auto z2 = cyclic_group(2);
    auto a = monoid_algebra_category(z2, kQ);
    auto f = representable(a, 0);
    CHECK(f.value(0).size == 2);
    CHECK(f.act(0, 0).matrix() == left_mult(z2, [](std::size_t g) { return g; }, 2, 2));
    CHECK(check_action(f).lawful());

    auto t = terminal_category(BaseCtx::finvect(kQ));
    auto c = representable(t, 0);
    CHECK(c.value(0).size == 1);
    CHECK(c.act(0, 0) == identity(t->ctx(), VObj{1}));

    auto ind = indiscrete_category(BaseCtx::finvect(kQ), 2);
    auto r = representable(ind, 1);
    CHECK(r.value(0).size == 1);
    CHECK(r.value(1).size == 1);
    CHECK(check_action(r).lawful());
    CHECK(check_action(corepresentable(ind, 0)).lawful());
    CHECK(check_action(corepresentable(monoid_algebra_category(symmetric_group3(), kQ), 0)).lawful());
    CHECK_THROWS_AS(representable(ind, 5), UnknownObject);
}

TEST_CASE("hom bimodule and restriction")
{
    auto s3 = symmetric_group3();
    auto a = monoid_algebra_category(s3, kQ);
    CHECK(check_action(hom_bimodule(a)).lawful());
    CHECK(check_action(hom_bimodule(indiscrete_category(BaseCtx::finvect(kQ), 2))).lawful());

    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto a2 = monoid_algebra_category(z2, kQ);
    auto a4 = monoid_algebra_category(z4, kQ);
    auto n = monoid_hom_functor(a2, a4, z2, z4, {0, 2});
    CHECK(check_functor(n).lawful());
    auto g = representable(a4, 0);
    auto res = restrict_along(n, g);
    CHECK(res.value(0).size == 4);
    CHECK(res.act(0, 0).matrix() == left_mult(z4, [](std::size_t h) { return 2 * h; }, 2, 4));
    CHECK(check_action(res).lawful());

    CHECK(restrict_along(identity_functor(a4), g) == g);

    auto t = terminal_category(BaseCtx::finvect(kQ));
    auto aug = augmentation(a4, t);
    CHECK(check_functor(aug).lawful());
    auto one = restrict_along(aug, representable(t, 0));
    CHECK(check_action(one).lawful());
    CHECK(restrict_along(identity_functor(a4), one) == one);

    CHECK_THROWS_AS(monoid_hom_functor(a2, a4, z2, z4, {0, 1}), InvalidStructure);
}

TEST_CASE("opposites")
{
    auto a = monoid_algebra_category(cyclic_group(2), kQ);
    CHECK(*opposite(a) == *a);
    auto s = monoid_algebra_category(symmetric_group3(), kQ);
    CHECK_FALSE(*opposite(s) == *s);
    CHECK(*opposite(opposite(s)) == *s);
    CHECK(check_category(*opposite(s)).lawful());
    auto ind = indiscrete_category(BaseCtx::finvect(kQ), 2);
    CHECK(*opposite(ind) == *ind);

    // a presheaf is a copresheaf on the opposite, with the same maps
    auto sop = opposite(s);
    auto p = corepresentable(s, 0);
    auto q = flip_variance(p, sop);
    CHECK(check_action(q).lawful());
    CHECK(q.act(0, 0) == p.act(0, 0));
}

TEST_CASE("free copresheaves and quotients")
{
    auto z2 = cyclic_group(2);
    auto a = monoid_algebra_category(z2, kQ);
    CHECK(free_copresheaf(a, {VObj{1}}) == representable(a, 0));
    auto f2 = free_copresheaf(a, {VObj{2}});
    CHECK(f2.value(0).size == 4);
    CHECK(check_action(f2).lawful());

    // k[Z2] / (e - t) is the trivial representation
    CopresheafSpec spec;
    spec.generators = {VObj{1}};
    spec.relations = {VObj{1}};
    Matrix v(2, 1);
    v(0, 0) = 1;
    v(1, 0) = -1;
    spec.lhs = {{VMap::from_matrix(a->ctx(), v)}};
    spec.rhs = {{zero_map(a->ctx(), unit_obj(), VObj{2})}};
    auto triv = generate_copresheaf(a, spec);
    CHECK(triv.value(0).size == 1);
    CHECK(check_action(triv).lawful());
    Matrix ones(1, 2);
    ones(0, 0) = 1;
    ones(0, 1) = 1;
    CHECK(triv.act(0, 0).matrix() == ones);

    auto ind = indiscrete_category(BaseCtx::finvect(kQ), 3);
    auto fi = free_copresheaf(ind, {VObj{1}, VObj{0}, VObj{2}});
    for (std::size_t y = 0; y < 3; ++y)
        CHECK(fi.value(y).size == 3);
    CHECK(check_action(fi).lawful());

    std::mt19937_64 rng(42);
    for (const auto& cat : {a, ind, monoid_algebra_category(symmetric_group3(), Field::prime(3)),
                            monoid_set_category(left_zero_monoid()), discrete_category(BaseCtx::finset(), 2)}) {
        for (int i = 0; i < 3; ++i) {
            auto q = generate_copresheaf(cat, random_quotient_spec(cat, rng, 2));
            CHECK(check_action(q).lawful());
        }
    }
}

TEST_CASE("natural transformation spaces")
{
    for (auto g : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
        auto a = monoid_algebra_category(g, kQ);
        auto f = representable(a, 0);
        auto space = nat_space(f, f);
        CHECK(space.size == g.size());
        for (const auto& e : space.elements)
            CHECK(check_natural(e).lawful());
        auto list = generate_nat(f, f, 9);
        CHECK(list.front() == identity_nat(f));
    }

    auto z3 = cyclic_group(3);
    auto a = monoid_algebra_category(z3, kQ);
    auto f = free_copresheaf(a, {VObj{2}});
    auto r = representable(a, 0);
    CHECK(nat_space(f, r).size == 6);
    auto l1 = generate_nat(f, r, 5);
    auto l2 = generate_nat(f, r, 5);
    CHECK(l1 == l2);
    for (const auto& e : l1)
        CHECK(check_natural(e).lawful());

    // discrete category: constant-I endomorphisms are componentwise scalars
    auto disc = discrete_category(BaseCtx::finvect(kQ), 2);
    auto t = terminal_category(disc->ctx());
    auto one = restrict_along(augmentation(disc, t), representable(t, 0));
    CHECK(nat_space(one, one).size == 2);
}

TEST_CASE("FinSet natural transformations against brute force")
{
    auto m = left_zero_monoid();
    auto a = monoid_set_category(m);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 6; ++trial) {
        auto f = generate_copresheaf(a, random_quotient_spec(a, rng, 2));
        auto g = generate_copresheaf(a, random_free_spec(a, rng, 1));
        std::size_t brute = 0;
        for (const auto& t : all_tables(a->ctx(), f.value(0), g.value(0))) {
            bool ok = true;
            for (std::size_t h = 0; h < m.size() && ok; ++h)
                for (std::size_t x = 0; x < f.value(0).size && ok; ++x)
                    ok = t.table()[f.act(0, 0).table()[h * f.value(0).size + x]] ==
                         g.act(0, 0).table()[h * g.value(0).size + t.table()[x]];
            brute += ok;
        }
        auto space = nat_space(f, g);
        CHECK(space.complete);
        CHECK(space.size == brute);
        for (const auto& e : space.elements)
            CHECK(check_natural(e).lawful());
    }

    auto d = discrete_category(BaseCtx::finset(), 1);
    auto one = representable(d, 0);
    auto empty = zero_module(d, kCopresheafLegs);
    CHECK_THROWS_AS(generate_nat(one, empty, 0), EmptySolution);
    CHECK(generate_nat(empty, one, 0).size() == 1);
}

TEST_CASE("restriction preserves naturality")
{
    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto a2 = monoid_algebra_category(z2, kQ);
    auto a4 = monoid_algebra_category(z4, kQ);
    auto n = monoid_hom_functor(a2, a4, z2, z4, {0, 2});
    auto f = free_copresheaf(a4, {VObj{1}});
    auto g = free_copresheaf(a4, {VObj{2}});
    for (const auto& alpha : generate_nat(f, g, 3, 3)) {
        auto r = restrict_along(n, alpha);
        CHECK(check_natural(r).lawful());
    }
}
