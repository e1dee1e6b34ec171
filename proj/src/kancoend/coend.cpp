#include "kanex/kancoend.hpp"

namespace kanex {

VMap CoendResult::factor(const std::vector<VMap>& h) const
{
    if (h.size() != cat->size())
        throw BoundaryMismatch("cowedge has the wrong number of legs");
    const auto& ctx = cat->ctx();
    try {
        return quotient.factor({copair(ctx, h, h.front().cod())});
    } catch (const IncompatibleCandidate& e) {
        throw FactorizationFailure(std::string("family is not a cowedge: ") + e.what());
    }
}

VMap CoendResult::factor_tensored(VObj x, const std::vector<VMap>& h) const
{
    if (h.size() != cat->size())
        throw BoundaryMismatch("cowedge has the wrong number of legs");
    const auto& ctx = cat->ctx();
    std::vector<VObj> diag;
    for (std::size_t a = 0; a < cat->size(); ++a)
        diag.push_back(module.value({a, a}));
    auto hsum = compose(copair(ctx, h, h.front().cod()), distribute_left(ctx, x, diag));
    try {
        return tensor_left(x, quotient).factor({hsum});
    } catch (const IncompatibleCandidate& e) {
        throw FactorizationFailure(std::string("family is not a cowedge: ") + e.what());
    }
}

std::pair<VMap, VMap> coend_relation(const Bimodule& s, std::size_t a, std::size_t b)
{
    return {s.one_sided(1, {b, a}, b), s.one_sided(0, {b, a}, a)};
}

CoendResult coend(const Bimodule& s)
{
    require_legs(s, kBimoduleLegs, "coend integrand");
    const auto& a = s.cat();
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    std::vector<VObj> diag;
    for (std::size_t x = 0; x < n; ++x)
        diag.push_back(s.value({x, x}));
    auto dsum = coproduct(ctx, diag);
    std::vector<VMap> left, right;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto [cov, contra] = coend_relation(s, x, y);
            left.push_back(compose(dsum.legs[y], cov));
            right.push_back(compose(dsum.legs[x], contra));
        }
    auto quotient = coequalizer(copair(ctx, left, dsum.apex), copair(ctx, right, dsum.apex));
    CoendResult r{a, s, quotient.apex, {}, dsum, quotient};
    for (std::size_t x = 0; x < n; ++x)
        r.cowedge.push_back(compose(quotient.legs[0], dsum.legs[x]));
    return r;
}

VMap EndResult::factor(const std::vector<VMap>& w) const
{
    VMap into = product.factor(w);
    if (!equalizer)
        return into;
    try {
        return equalizer->factor({into});
    } catch (const IncompatibleCandidate& e) {
        throw FactorizationFailure(std::string("family is not a wedge: ") + e.what());
    }
}

EndResult end(const Bimodule& s, EndMode mode)
{
    require_legs(s, kBimoduleLegs, "end integrand");
    const auto& a = s.cat();
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    std::vector<VObj> diag;
    for (std::size_t x = 0; x < n; ++x)
        diag.push_back(s.value({x, x}));
    EndResult r{a, s, {}, mode == EndMode::End, {}, product(ctx, diag), std::nullopt};
    if (mode == EndMode::Product) {
        r.apex = r.product.apex;
        r.wedge = r.product.legs;
        return r;
    }
    VObj p = r.product.apex;
    std::vector<VMap> us, vs;
    std::vector<VObj> targets;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            VObj h = a->hom(x, y);
            auto cov = compose(s.one_sided(1, {x, x}, y), tensor(identity(ctx, h), r.product.legs[x]));
            auto contra = compose(s.one_sided(0, {y, y}, x), tensor(identity(ctx, h), r.product.legs[y]));
            auto swap = symmetry(ctx, p, h);
            us.push_back(curry(compose(cov, swap), p, h));
            vs.push_back(curry(compose(contra, swap), p, h));
            targets.push_back(internal_hom(ctx, h, s.value({x, y})));
        }
    auto t = product(ctx, targets);
    r.equalizer = equalizer(t.factor(us), t.factor(vs));
    r.apex = r.equalizer->apex;
    for (std::size_t x = 0; x < n; ++x)
        r.wedge.push_back(compose(r.product.legs[x], r.equalizer->legs[0]));
    return r;
}

Bimodule external_tensor(const Presheaf& p, const Copresheaf& q)
{
    require_legs(p, kPresheafLegs, "external tensor: left factor");
    require_legs(q, kCopresheafLegs, "external tensor: right factor");
    if (!same_category(p.cat(), q.cat()))
        throw ContextMismatch("external tensor of modules over different categories");
    const auto& a = p.cat();
    const auto& ctx = a->ctx();
    return Module::from_one_sided(
        a, kBimoduleLegs, [&](const Module::Tuple& t) { return tensor(p.value(t[0]), q.value(t[1])); },
        [&](std::size_t leg, const Module::Tuple& t, std::size_t x) {
            if (leg == 0)
                return tensor(p.act(t[0], x), identity(ctx, q.value(t[1])));
            return compose(tensor(identity(ctx, p.value(t[0])), q.act(t[1], x)),
                           tensor(symmetry(ctx, a->hom(t[1], x), p.value(t[0])), identity(ctx, q.value(t[1]))));
        });
}

Module tensor_object(VObj x, const Module& f)
{
    const auto& ctx = f.ctx();
    return Module::build(
        f.cat(), f.legs(), [&](const Module::Tuple& t) { return tensor(x, f.value(t)); },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            VObj h = f.joint_hom(s, d);
            return compose(tensor(identity(ctx, x), f.joint(s, d)),
                           tensor(symmetry(ctx, h, x), identity(ctx, f.value(s))));
        });
}

ModuleProduct product(const std::vector<Module>& ms)
{
    if (ms.empty())
        throw InvalidStructure("product of an empty family of modules");
    const auto& m0 = ms.front();
    for (const auto& m : ms)
        if (!same_category(m.cat(), m0.cat()) || m.legs() != m0.legs())
            throw InvalidStructure("product of modules of different shape");
    const auto& ctx = m0.ctx();
    ModuleProduct r{m0, {}, {}};
    for (std::size_t i = 0; i < m0.count(); ++i) {
        std::vector<VObj> vs;
        for (const auto& m : ms)
            vs.push_back(m.value_at(i));
        r.cones.push_back(product(ctx, vs));
    }
    r.value = Module::build(
        m0.cat(), m0.legs(), [&](const Module::Tuple& t) { return r.cones[m0.index(t)].apex; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            VObj h = m0.joint_hom(s, d);
            const auto& cs = r.cones[m0.index(s)];
            std::vector<VMap> legs;
            for (std::size_t i = 0; i < ms.size(); ++i)
                legs.push_back(compose(ms[i].joint(s, d), tensor(identity(ctx, h), cs.legs[i])));
            return r.cones[m0.index(d)].factor(legs);
        });
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::vector<VMap> comps;
        for (const auto& c : r.cones)
            comps.push_back(c.legs[i]);
        r.projections.emplace_back(r.value, ms[i], std::move(comps));
    }
    return r;
}

CoyonedaResult coyoneda_expand(const Copresheaf& f, std::size_t b)
{
    require_legs(f, kCopresheafLegs, "coYoneda input");
    const auto& a = f.cat();
    const auto& ctx = a->ctx();
    auto co = coend(external_tensor(corepresentable(a, b), f));
    std::vector<VMap> acts;
    for (std::size_t x = 0; x < a->size(); ++x)
        acts.push_back(f.act(x, b));
    VMap inverse = co.factor(acts);
    VMap iso = compose(co.cowedge[b], tensor(a->ident(b), identity(ctx, f.value(b))));
    if (!(compose(inverse, iso) == identity(ctx, f.value(b))) || !(compose(iso, inverse) == identity(ctx, co.apex)))
        throw FactorizationFailure("coYoneda maps are not mutually inverse; the action is broken");
    return CoyonedaResult{co, iso, inverse};
}

Interchange interchange_can(const std::vector<Bimodule>& family)
{
    if (family.empty())
        throw InvalidStructure("interchange over an empty family");
    const auto& a = family.front().cat();
    const auto& ctx = a->ctx();
    std::vector<CoendResult> coends;
    for (const auto& t : family)
        coends.push_back(coend(t));
    auto fp = product(family);
    auto pc = coend(fp.value);
    std::vector<VObj> apexes;
    for (const auto& c : coends)
        apexes.push_back(c.apex);
    auto ap = product(ctx, apexes);
    std::vector<VMap> comps;
    for (std::size_t x = 0; x < family.size(); ++x) {
        std::vector<VMap> h;
        for (std::size_t y = 0; y < a->size(); ++y) {
            const auto& cone = fp.cones[fp.value.index({y, y})];
            h.push_back(compose(coends[x].cowedge[y], cone.legs[x]));
        }
        comps.push_back(pc.factor(h));
    }
    auto can = ap.factor(comps);
    return Interchange{std::move(coends), std::move(pc), std::move(fp), std::move(ap), std::move(can)};
}

} // namespace kanex
