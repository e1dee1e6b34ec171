#include "doctest.h"

#include "kanex/frobenius.hpp"
#include "support.hpp"

using namespace kanex;
using namespace kanex::testing;

namespace {

const Field kQ = Field::rationals();

bool has_law(const LawReport& r, const std::string& law, const std::vector<std::size_t>& at)
{
    for (const auto& v : r.violations)
        if (v.law == law && v.at == at)
            return true;
    return false;
}

// delta is the identity of I on the diagonal and zero elsewhere
OpcatStructure discrete_opcat(std::size_t n)
{
    auto a = discrete_category(BaseCtx::finvect(kQ), n);
    const auto& ctx = a->ctx();
    OpcatStructure op{a, {}, {}};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                op.deltas.push_back(zero_map(ctx, a->hom(x, y), tensor(a->hom(z, y), a->hom(x, z))));
    for (std::size_t x = 0; x < n; ++x) {
        op.deltas[(x * n + x) * n + x] = identity(ctx, unit_obj());
        op.epsilons.push_back(identity(ctx, unit_obj()));
    }
    return certify_level(op);
}

} // namespace

TEST_CASE("group algebra delta on Z2")
{
    auto op = group_algebra_frobenius(cyclic_group(2), kQ);
    Matrix d(4, 2);
    d(0, 0) = 1; // e -> e(x)e + t(x)t
    d(3, 0) = 1;
    d(2, 1) = 1; // t -> t(x)e + e(x)t
    d(1, 1) = 1;
    CHECK(op.delta(0, 0, 0).matrix() == d);
    CHECK(op.level == NaturalityLevel::FullOpcat);

    // epsilon(t) = 1 breaks the counit: (eps (x) 1) delta(t) = e + t, and delta(e) goes to e + t too
    auto bad = op;
    Matrix e(1, 2);
    e(0, 0) = 1;
    e(0, 1) = 1;
    bad.epsilons[0] = VMap::from_matrix(op.base->ctx(), e);
    auto r = check_counit(bad);
    REQUIRE(has_law(r, "counit", {0, 0}));
    Matrix col(2, 2);
    col(0, 0) = 1;
    col(0, 1) = 1;
    col(1, 0) = 1;
    col(1, 1) = 1;
    CHECK(r.violations.front().lhs.matrix() == col);
    CHECK(certify_level(bad).level == NaturalityLevel::None);
}

TEST_CASE("group algebra structures pass over every field")
{
    for (const auto& k : {kQ, Field::prime(3), Field::prime(5)})
        for (auto g : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
            auto op = group_algebra_frobenius(g, k);
            auto nat = check_delta_naturality(op);
            CHECK(nat.counit.lawful());
            CHECK(nat.ab.lawful());
            CHECK(nat.c.lawful());
            CHECK(nat.level == NaturalityLevel::FullOpcat);
            CHECK(check_coassociativity(op).lawful());
        }
    auto t = group_algebra_frobenius(trivial_group(), kQ);
    CHECK(t.delta(0, 0, 0) == identity(t.base->ctx(), unit_obj()));
    CHECK(t.epsilon(0) == identity(t.base->ctx(), unit_obj()));
}

TEST_CASE("indiscrete and discrete structures")
{
    CHECK(indiscrete_frobenius(1, kQ).level == NaturalityLevel::FullOpcat);
    CHECK(indiscrete_frobenius(2, kQ).level == NaturalityLevel::FullOpcat);
    CHECK(indiscrete_frobenius(3, Field::prime(5)).level == NaturalityLevel::FullOpcat);
    CHECK(discrete_opcat(2).level == NaturalityLevel::FullOpcat);
    CHECK_THROWS_AS(indiscrete_frobenius(0, kQ), InvalidStructure);
}

TEST_CASE("perturbed delta is caught")
{
    std::mt19937_64 rng(5);
    auto op = group_algebra_frobenius(symmetric_group3(), kQ);
    for (int trial = 0; trial < 5; ++trial) {
        auto bad = op;
        Matrix d = bad.deltas[0].matrix();
        std::size_t i = uniform(rng, d.rows()), j = uniform(rng, d.cols());
        d(i, j) = d(i, j) + 1;
        bad.deltas[0] = VMap::from_matrix(op.base->ctx(), d);
        auto nat = check_delta_naturality(bad);
        CHECK(nat.level == NaturalityLevel::None);
        CHECK((!nat.counit.violations.empty() || !nat.ab.violations.empty()));
        for (const auto& v : nat.ab.violations)
            CHECK(v.at.size() == 4);
    }
}

TEST_CASE("a delta natural only in a and b")
{
    // delta_{a,b,c} = mu_c, epsilon_c = 1/mu_c with mu = (1, 2)
    auto op = indiscrete_frobenius(2, kQ);
    const auto& ctx = op.base->ctx();
    auto fr = op;
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            fr.deltas[(x * 2 + y) * 2 + 1] = scale(Scalar(2), identity(ctx, unit_obj()));
    fr.epsilons[1] = scale(Scalar(1, 2), identity(ctx, unit_obj()));
    auto nat = check_delta_naturality(fr);
    CHECK(nat.counit.lawful());
    CHECK(nat.ab.lawful());
    CHECK(has_law(nat.c, "delta natural in c", {0, 0, 0, 1}));
    CHECK(has_law(nat.c, "epsilon natural", {0, 1}));
    CHECK(nat.level == NaturalityLevel::Frobenius);

    // the product-valued opcat map is still a coretraction
    fr.level = nat.level;
    auto f = free_copresheaf(fr.base, {VObj{1}, VObj{1}});
    for (std::size_t b = 0; b < 2; ++b) {
        CHECK_FALSE(opcat_map(fr, f, b).target.is_end);
        CHECK(coretraction_check(fr, f, b).lawful());
    }
}

TEST_CASE("opcat map")
{
    auto t = group_algebra_frobenius(trivial_group(), kQ);
    auto f3 = free_copresheaf(t.base, {VObj{3}});
    auto mt = opcat_map(t, f3, 0);
    CHECK(mt.map == identity(t.base->ctx(), VObj{3}));

    auto z2 = cyclic_group(2);
    auto op = group_algebra_frobenius(z2, kQ);
    auto f = representable(op.base, 0);
    auto m = opcat_map(op, f, 0);
    CHECK(m.target.is_end);
    // s |-> sum_h h^-1 (x) h.s
    auto inv = inverses(z2);
    Matrix want(4, 2);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t h = 0; h < 2; ++h)
            want(inv[h] * 2 + z2.op(h, k), k) = 1;
    CHECK(m.components[0].matrix() == want);
    CHECK(coretraction_check(op, f, 0).lawful());
    CHECK(compose(opcat_retraction(op, m, f, 0), m.map) == identity(op.base->ctx(), VObj{2}));

    auto d = discrete_opcat(2);
    auto fd = free_copresheaf(d.base, {VObj{1}, VObj{2}});
    auto md = opcat_map(d, fd, 0);
    CHECK(md.components[1].matrix().is_zero());
    CHECK(coretraction_check(d, fd, 1).lawful());
}

TEST_CASE("coretraction over the battery")
{
    std::mt19937_64 rng(17);
    std::vector<OpcatStructure> ops{group_algebra_frobenius(symmetric_group3(), kQ),
                                    group_algebra_frobenius(cyclic_group(3), Field::prime(3)),
                                    indiscrete_frobenius(3, kQ)};
    for (const auto& op : ops) {
        CHECK(check_counit(op).lawful());
        for (int i = 0; i < 3; ++i) {
            auto f = i == 0 ? generate_copresheaf(op.base, random_quotient_spec(op.base, rng, 2))
                            : generate_copresheaf(op.base, random_free_spec(op.base, rng, 2));
            for (std::size_t b = 0; b < op.base->size(); ++b) {
                CHECK(coretraction_check(op, f, b).lawful());
                // a full opcat lands in the end
                CHECK(opcat_map(op, f, b, EndMode::End).target.is_end);
            }
        }
    }
}

TEST_CASE("opposite opcat")
{
    auto op = group_algebra_frobenius(symmetric_group3(), kQ);
    auto sop = opposite(op.base);
    auto o = opposite_opcat(op, sop);
    CHECK(o.level == NaturalityLevel::FullOpcat);
    auto back = opposite_opcat(o, opposite(sop));
    CHECK(back.deltas == op.deltas);
    CHECK(opposite_opcat(indiscrete_frobenius(2, kQ), opposite(indiscrete_category(BaseCtx::finvect(kQ), 2))).level ==
          NaturalityLevel::FullOpcat);
}
