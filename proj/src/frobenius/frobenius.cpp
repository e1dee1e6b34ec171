#include "kanex/frobenius.hpp"

namespace kanex {

const char* to_string(NaturalityLevel level)
{
    switch (level) {
    case NaturalityLevel::None:
        return "none";
    case NaturalityLevel::Frobenius:
        return "frobenius";
    case NaturalityLevel::FullOpcat:
        return "full-opcat";
    }
    return "none";
}

void validate_opcat(const OpcatStructure& op)
{
    const auto& a = *op.base;
    std::size_t n = a.size();
    if (op.deltas.size() != n * n * n || op.epsilons.size() != n)
        throw BoundaryMismatch("opcat structure has the wrong number of components");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto& d = op.delta(x, y, z);
                if (d.dom() != a.hom(x, y) || d.cod() != tensor(a.hom(z, y), a.hom(x, z)))
                    throw BoundaryMismatch("delta at (" + a.name(x) + "," + a.name(y) + "," + a.name(z) +
                                           ") has the wrong type");
            }
    for (std::size_t x = 0; x < n; ++x)
        if (op.epsilon(x).dom() != a.hom(x, x) || op.epsilon(x).cod() != unit_obj())
            throw BoundaryMismatch("epsilon at " + a.name(x) + " has the wrong type");
}

LawReport check_counit(const OpcatStructure& op)
{
    validate_opcat(op);
    const auto& a = *op.base;
    const auto& ctx = a.ctx();
    LawReport r;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
            VObj h = a.hom(x, y);
            auto lhs = compose(tensor(op.epsilon(y), identity(ctx, h)), op.delta(x, y, y));
            r.check("counit", {x, y}, lhs, identity(ctx, h));
        }
    return r;
}

NaturalityReport check_delta_naturality(const OpcatStructure& op)
{
    const auto& a = *op.base;
    const auto& ctx = a.ctx();
    std::size_t n = a.size();
    NaturalityReport r;
    r.counit = check_counit(op);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    // b-naturality: y -> w
                    auto lb = compose(op.delta(x, w, z), a.comp(x, y, w));
                    auto rb = compose(tensor(a.comp(z, y, w), identity(ctx, a.hom(x, z))),
                                      tensor(identity(ctx, a.hom(y, w)), op.delta(x, y, z)));
                    r.ab.check("delta natural in b", {x, y, w, z}, lb, rb);
                    // a-naturality: w -> x
                    auto la = compose(op.delta(w, y, z), a.comp(w, x, y));
                    auto ra = compose(tensor(identity(ctx, a.hom(z, y)), a.comp(w, x, z)),
                                      tensor(op.delta(x, y, z), identity(ctx, a.hom(w, x))));
                    r.ab.check("delta natural in a", {w, x, y, z}, la, ra);
                    // c: m in A(z,w)
                    VObj m = a.hom(z, w);
                    auto lc = compose(compose(tensor(a.comp(z, w, y), identity(ctx, a.hom(x, w))),
                                              tensor(symmetry(ctx, m, a.hom(w, y)), identity(ctx, a.hom(x, w)))),
                                      tensor(identity(ctx, m), op.delta(x, y, w)));
                    auto rc = compose(compose(tensor(identity(ctx, a.hom(z, y)), a.comp(x, z, w)),
                                              tensor(symmetry(ctx, m, a.hom(z, y)), identity(ctx, a.hom(x, z)))),
                                      tensor(identity(ctx, m), op.delta(x, y, z)));
                    r.c.check("delta natural in c", {x, y, z, w}, lc, rc);
                }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto le = compose(op.epsilon(y), a.comp(y, x, y));
            auto re = compose(op.epsilon(x), compose(a.comp(x, y, x), symmetry(ctx, a.hom(x, y), a.hom(y, x))));
            r.c.check("epsilon natural", {x, y}, le, re);
        }
    if (r.counit.lawful() && r.ab.lawful())
        r.level = r.c.lawful() ? NaturalityLevel::FullOpcat : NaturalityLevel::Frobenius;
    return r;
}

LawReport check_coassociativity(const OpcatStructure& op)
{
    const auto& a = *op.base;
    const auto& ctx = a.ctx();
    std::size_t n = a.size();
    LawReport r;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    auto lhs = compose(tensor(op.delta(z, y, w), identity(ctx, a.hom(x, z))), op.delta(x, y, z));
                    auto rhs = compose(tensor(identity(ctx, a.hom(w, y)), op.delta(x, w, z)), op.delta(x, y, w));
                    r.check("coassociativity", {x, y, z, w}, lhs, rhs);
                }
    return r;
}

OpcatStructure certify_level(OpcatStructure op)
{
    op.level = check_delta_naturality(op).level;
    return op;
}

OpcatMap opcat_map(const OpcatStructure& op, const Copresheaf& f, std::size_t b)
{
    return opcat_map(op, f, b, op.level == NaturalityLevel::FullOpcat ? EndMode::End : EndMode::Product);
}

OpcatMap opcat_map(const OpcatStructure& op, const Copresheaf& f, std::size_t b, EndMode mode)
{
    require_legs(f, kCopresheafLegs, "opcat map input");
    if (!same_category(f.cat(), op.base))
        throw ContextMismatch("opcat map: copresheaf over a different category");
    const auto& a = op.base;
    const auto& ctx = a->ctx();
    auto co = coyoneda_expand(f, b);
    std::vector<VMap> comps;
    for (std::size_t x = 0; x < a->size(); ++x) {
        std::vector<VMap> h;
        for (std::size_t y = 0; y < a->size(); ++y)
            h.push_back(compose(tensor(identity(ctx, a->hom(x, b)), f.act(y, x)),
                                tensor(op.delta(y, b, x), identity(ctx, f.value(y)))));
        comps.push_back(compose(co.coend.factor(h), co.iso));
    }
    auto target = end(external_tensor(corepresentable(a, b), f), mode);
    VMap map = target.factor(comps);
    return OpcatMap{std::move(target), std::move(comps), std::move(map)};
}

VMap opcat_retraction(const OpcatStructure& op, const OpcatMap& m, const Copresheaf& f, std::size_t b)
{
    const auto& ctx = op.base->ctx();
    return compose(tensor(op.epsilon(b), identity(ctx, f.value(b))), m.target.wedge[b]);
}

LawReport coretraction_check(const OpcatStructure& op, const Copresheaf& f, std::size_t b)
{
    LawReport r;
    auto m = opcat_map(op, f, b);
    r.check("opcat coretraction", {b}, compose(opcat_retraction(op, m, f, b), m.map),
            identity(op.base->ctx(), f.value(b)));
    return r;
}

OpcatStructure group_algebra_frobenius(const FiniteMonoid& g, const Field& k)
{
    auto inv = inverses(g);
    auto a = monoid_algebra_category(g, k);
    const auto& ctx = a->ctx();
    std::size_t n = g.size();
    Matrix d(n * n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t h = 0; h < n; ++h)
            d(g.op(x, inv[h]) * n + h, x) = 1;
    Matrix e(1, n);
    e(0, g.unit) = 1;
    OpcatStructure op{a, {VMap::from_matrix(ctx, std::move(d))}, {VMap::from_matrix(ctx, std::move(e))}};
    return certify_level(std::move(op));
}

OpcatStructure indiscrete_frobenius(std::size_t n, const Field& k)
{
    if (n == 0)
        throw InvalidStructure("indiscrete Frobenius category needs at least one object");
    auto a = indiscrete_category(BaseCtx::finvect(k), n);
    const auto& ctx = a->ctx();
    OpcatStructure op{a, {}, {}};
    for (std::size_t i = 0; i < n * n * n; ++i)
        op.deltas.push_back(identity(ctx, unit_obj()));
    for (std::size_t i = 0; i < n; ++i)
        op.epsilons.push_back(identity(ctx, unit_obj()));
    return certify_level(std::move(op));
}

OpcatStructure opposite_opcat(const OpcatStructure& op, const CatRef& a_op)
{
    const auto& a = *op.base;
    const auto& ctx = a.ctx();
    std::size_t n = a.size();
    if (a_op->size() != n)
        throw ContextMismatch("opposite category does not match the opcat structure");
    OpcatStructure r{a_op, {}, op.epsilons};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                r.deltas.push_back(compose(symmetry(ctx, a.hom(z, x), a.hom(y, z)), op.delta(y, x, z)));
    return certify_level(std::move(r));
}

} // namespace kanex
