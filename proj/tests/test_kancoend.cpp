#include "doctest.h"

#include "kanex/kancoend.hpp"
#include "support.hpp"

using namespace kanex;
using namespace kanex::testing;

namespace {

const Field kQ = Field::rationals();

// conjugacy classes by orbit walking on the multiplication table
std::size_t class_count(const FiniteMonoid& g)
{
    auto inv = inverses(g);
    std::vector<bool> seen(g.size(), false);
    std::size_t classes = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (seen[x])
            continue;
        ++classes;
        for (std::size_t h = 0; h < g.size(); ++h)
            seen[g.op(g.op(h, x), inv[h])] = true;
    }
    return classes;
}

// copresheaf on a FinSet-discrete category with the given set sizes
Copresheaf discrete_sets(const CatRef& a, const std::vector<std::size_t>& sizes)
{
    const auto& ctx = a->ctx();
    return Module::build(
        a, kCopresheafLegs, [&](const Module::Tuple& t) { return VObj{sizes[t[0]]}; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            if (s == d)
                return identity(ctx, VObj{sizes[s[0]]});
            return VMap::from_table(ctx, VObj{sizes[d[0]]}, {});
        });
}

} // namespace

TEST_CASE("coend and end of the hom bimodule count conjugacy classes")
{
    for (auto g : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
        auto a = monoid_algebra_category(g, kQ);
        auto co = coend(hom_bimodule(a));
        CHECK(co.apex.size == class_count(g));
        auto en = end(hom_bimodule(a), EndMode::End);
        CHECK(en.apex.size == class_count(g));
        CHECK(end(hom_bimodule(a), EndMode::Product).apex.size == g.size());
        CHECK(classify_map(co.quotient.legs[0]).epi);
        CHECK(classify_map(en.equalizer->legs[0]).mono);
    }
    CHECK(class_count(symmetric_group3()) == 3);

    // the two composites out of every relation term agree after omega
    auto a = monoid_algebra_category(symmetric_group3(), kQ);
    auto co = coend(hom_bimodule(a));
    auto [cov, contra] = coend_relation(co.module, 0, 0);
    CHECK(compose(co.cowedge[0], cov) == compose(co.cowedge[0], contra));
}

TEST_CASE("coend over the terminal category is the value")
{
    auto t = terminal_category(BaseCtx::finvect(kQ));
    auto s = zero_module(t, kBimoduleLegs);
    CHECK(coend(s).apex.size == 0);
    auto q = tensor_object(VObj{3}, hom_bimodule(t));
    auto co = coend(q);
    CHECK(co.apex.size == 3);
    CHECK(co.cowedge[0] == identity(t->ctx(), VObj{3}));

    auto ts = terminal_category(BaseCtx::finset());
    auto cs = coend(tensor_object(VObj{2}, hom_bimodule(ts)));
    CHECK(cs.apex.size == 2);
}

TEST_CASE("non-cowedges do not factor")
{
    auto s3 = monoid_algebra_category(symmetric_group3(), kQ);
    auto c3 = coend(hom_bimodule(s3));
    // picking out one transposition is not a class function
    Matrix p(1, 6);
    p(0, 1) = 1;
    CHECK_THROWS_AS(c3.factor({VMap::from_matrix(s3->ctx(), p)}), FactorizationFailure);
}

TEST_CASE("coYoneda expansion is inverse to the action")
{
    std::mt19937_64 rng(7);
    for (const auto& cat : {monoid_algebra_category(cyclic_group(2), kQ),
                            monoid_algebra_category(symmetric_group3(), Field::prime(5)),
                            indiscrete_category(BaseCtx::finvect(kQ), 2), monoid_set_category(left_zero_monoid()),
                            discrete_category(BaseCtx::finset(), 2)}) {
        for (int i = 0; i < 2; ++i) {
            auto f = generate_copresheaf(cat, random_quotient_spec(cat, rng, 2));
            for (std::size_t b = 0; b < cat->size(); ++b) {
                auto r = coyoneda_expand(f, b);
                CHECK(r.coend.apex.size == f.value(b).size);
                CHECK(compose(r.inverse, r.iso) == identity(cat->ctx(), f.value(b)));
            }
        }
    }
    auto a = monoid_algebra_category(cyclic_group(2), kQ);
    auto r = coyoneda_expand(representable(a, 0), 0);
    CHECK(r.coend.apex.size == 2);
}

TEST_CASE("Lan along Z2 -> Z4")
{
    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto a2 = monoid_algebra_category(z2, kQ);
    auto a4 = monoid_algebra_category(z4, kQ);
    auto n = monoid_hom_functor(a2, a4, z2, z4, {0, 2});
    auto f = free_copresheaf(a2, {VObj{1}});
    auto l = lan(n, f);
    CHECK(l.value.value(0).size == 4);
    CHECK(check_action(l.value).lawful());
    CHECK(check_natural(l.unit).lawful());
    CHECK(classify_map(l.unit.component(0)).mono);
    CHECK(lan_map(l, l, identity_nat(f)) == identity_nat(l.value));

    // Lan of a representable is the representable at the image
    CHECK(nat_space(l.value, representable(a4, 0)).size == 4);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 3; ++i) {
        auto q = generate_copresheaf(a2, random_quotient_spec(a2, rng, 2));
        auto lq = lan(n, q);
        CHECK(check_action(lq.value).lawful());
        CHECK(check_natural(lq.unit).lawful());
        // k[Z4] is free of rank 2 over k[Z2]
        CHECK(lq.value.value(0).size == 2 * q.value(0).size);
    }

    auto g = representable(a4, 0);
    auto eps = lan_counit(n, g);
    CHECK(check_natural(eps).lawful());
    CHECK(classify_map(eps.component(0)).epi);
}

TEST_CASE("Lan in the f-first order")
{
    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto a2 = monoid_algebra_category(z2, kQ);
    auto a4 = monoid_algebra_category(z4, kQ);
    auto n = monoid_hom_functor(a2, a4, z2, z4, {0, 2});
    auto f = free_copresheaf(a2, {VObj{2}});
    auto l = lan(n, f);
    auto a2op = opposite(a2);
    auto fam = representable_family(n, a2op);
    auto lf = l_functor(fam, flip_variance(f, a2op));
    auto m = lan_reorder(l, 0, lf.coends[0]);
    CHECK(classify_map(m).iso);
}

TEST_CASE("Lan -| restriction")
{
    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto a2 = monoid_algebra_category(z2, kQ);
    auto a4 = monoid_algebra_category(z4, kQ);
    auto n = monoid_hom_functor(a2, a4, z2, z4, {0, 2});
    auto rep = adjunction_check(n, free_copresheaf(a2, {VObj{1}}), representable(a4, 0));
    CHECK(rep.ok());
    CHECK(rep.left_size == 4);
    CHECK(rep.right_size == 4);

    // FinSet: the point of the terminal category sent to object 0 of a discrete pair
    auto t = terminal_category(BaseCtx::finset());
    auto d = discrete_category(BaseCtx::finset(), 2);
    auto m = object_map_functor(t, d, {0});
    CHECK(check_functor(m).lawful());
    for (std::size_t k : {0u, 1u, 3u}) {
        auto g = discrete_sets(d, {k, 2});
        auto r = adjunction_check(m, representable(t, 0), g);
        CHECK(r.ok());
        CHECK(r.right_size == k);
    }
    auto ind = indiscrete_category(BaseCtx::finset(), 2);
    auto mi = object_map_functor(t, ind, {1});
    auto r = adjunction_check(mi, representable(t, 0), representable(ind, 0));
    CHECK(r.ok());
    CHECK(r.left_size == 1);
}

TEST_CASE("interchange of coends with finite products")
{
    auto a = monoid_algebra_category(symmetric_group3(), kQ);
    auto h = hom_bimodule(a);
    auto r = interchange_can({h, tensor_object(VObj{2}, h)});
    CHECK(r.product_coend.apex.size == 9);
    CHECK(classify_map(r.can).iso);
}

TEST_CASE("hom objects of copresheaves")
{
    auto disc = discrete_category(BaseCtx::finvect(kQ), 2);
    auto t = terminal_category(disc->ctx());
    auto one = restrict_along(augmentation(disc, t), representable(t, 0));
    CHECK(functor_hom_object(one, one).apex().size == 2);

    auto a = monoid_algebra_category(cyclic_group(3), kQ);
    auto r = representable(a, 0);
    auto h = functor_hom_object(r, r);
    CHECK(h.apex().size == 3);
    for (const auto& alpha : nat_space(r, r).elements) {
        auto e = h.insert(alpha);
        CHECK(h.extract(e) == alpha);
    }

    // Yoneda: E(C(c,-), G) has the dimension of G(c)
    std::mt19937_64 rng(11);
    auto s3 = monoid_algebra_category(symmetric_group3(), kQ);
    for (int i = 0; i < 3; ++i) {
        auto g = generate_copresheaf(s3, random_quotient_spec(s3, rng, 2));
        CHECK(functor_hom_object(representable(s3, 0), g).apex().size == g.value(0).size);
    }

    // postcomposition with the identity is the identity
    auto id = hom_postcompose(h, h, identity_nat(r));
    CHECK(id == identity(a->ctx(), h.apex()));
}

TEST_CASE("representable family, L and Y")
{
    auto z2 = cyclic_group(2), z4 = cyclic_group(4);
    auto a2 = monoid_algebra_category(z2, kQ);
    auto a4 = monoid_algebra_category(z4, kQ);
    auto n = monoid_hom_functor(a2, a4, z2, z4, {0, 2});
    auto a2op = opposite(a2);
    auto fam = representable_family(n, a2op);
    CHECK(check_family(fam).lawful());
    CHECK(check_family(zero_family(a2op, a4)).lawful());

    auto f = flip_variance(representable(a2, 0), a2op);
    auto lf = l_functor(fam, f);
    CHECK(check_action(lf.value).lawful());
    CHECK(lf.value.value(0).size == 4);

    auto y = n_yoneda(fam, representable(a4, 0));
    CHECK(check_action(y.value).lawful());
    CHECK(y.value.value(0).size == 4);

    auto ylf = n_yoneda(fam, lf.value);
    auto eta = l_unit(fam, lf, ylf, 0);
    CHECK(classify_map(eta).mono);
}

TEST_CASE("tensoring commutes with hom out of representables")
{
    auto a = monoid_algebra_category(cyclic_group(2), kQ);
    auto fam = representable_family(identity_functor(a), opposite(a));
    for (std::size_t k : {1u, 2u}) {
        auto d = dagger_check(fam, VObj{k}, 0, 0);
        CHECK(d.classification.iso);
    }
    auto z = zero_family(opposite(a), a);
    CHECK(dagger_check(z, VObj{2}, 0, 0).classification.iso);
}

TEST_CASE("Cayley functor of a group")
{
    auto z2 = cyclic_group(2);
    auto pm = monoid_promonoidal(z2);
    CHECK(check_action(pm.p).lawful());
    auto f = discrete_sets(pm.a, {2, 3});
    auto c = cayley(pm.p, f);
    CHECK(check_action(c.value).lawful());
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t cc = 0; cc < 2; ++cc)
            CHECK(c.value.value({b, cc}).size == f.value((cc + 2 - b) % 2).size);

    auto e = cayley(pm.p, discrete_sets(pm.a, {0, 0}));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(e.value.value_at(i).size == 0);

    auto s3 = symmetric_group3();
    auto ps = monoid_promonoidal(s3);
    auto g = discrete_sets(ps.a, {1, 2, 0, 1, 3, 1});
    auto cs = cayley(ps.p, g);
    auto inv = inverses(s3);
    for (std::size_t b = 0; b < 6; ++b)
        for (std::size_t cc = 0; cc < 6; ++cc)
            CHECK(cs.value.value({b, cc}).size == g.value(s3.op(cc, inv[b])).size);
    CHECK(cayley_map(cs, cs, identity_nat(g)) == identity_nat(cs.value));
}
