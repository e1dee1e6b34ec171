#include "kanex/kancoend.hpp"

namespace kanex {

VNat HomObject::extract(const VMap& element) const
{
    std::vector<VMap> comps;
    for (std::size_t c = 0; c < source.count(); ++c)
        comps.push_back(unname(compose(end.wedge[c], element), source.value(c), target.value(c)));
    return VNat(source, target, std::move(comps));
}

VMap HomObject::insert(const VNat& alpha) const
{
    std::vector<VMap> names;
    for (const auto& m : alpha.components())
        names.push_back(name(m));
    return end.factor(names);
}

VMap HomObject::from_components(VObj z, const std::vector<VMap>& uncurried) const
{
    std::vector<VMap> w;
    for (std::size_t c = 0; c < source.count(); ++c)
        w.push_back(curry(uncurried[c], z, source.value(c)));
    return end.factor(w);
}

Bimodule internal_hom_bimodule(const Copresheaf& f, const Copresheaf& g)
{
    require_legs(f, kCopresheafLegs, "hom object source");
    require_legs(g, kCopresheafLegs, "hom object target");
    if (!same_category(f.cat(), g.cat()))
        throw ContextMismatch("hom object between copresheaves on different categories");
    const auto& c = f.cat();
    const auto& ctx = c->ctx();
    return Module::from_one_sided(
        c, kBimoduleLegs, [&](const Module::Tuple& t) { return internal_hom(ctx, f.value(t[0]), g.value(t[1])); },
        [&](std::size_t leg, const Module::Tuple& t, std::size_t x) {
            VObj fc = f.value(t[0]), gc = g.value(t[1]);
            VObj hom = internal_hom(ctx, fc, gc);
            if (leg == 0) {
                VObj h = c->hom(x, t[0]);
                auto u = compose(compose(eval(ctx, fc, gc), tensor(identity(ctx, hom), f.act(x, t[0]))),
                                 tensor(symmetry(ctx, h, hom), identity(ctx, f.value(x))));
                return curry(u, tensor(h, hom), f.value(x));
            }
            VObj h = c->hom(t[1], x);
            auto u = compose(g.act(t[1], x), tensor(identity(ctx, h), eval(ctx, fc, gc)));
            return curry(u, tensor(h, hom), fc);
        });
}

HomObject functor_hom_object(const Copresheaf& f, const Copresheaf& g)
{
    return HomObject{f, g, end(internal_hom_bimodule(f, g), EndMode::End)};
}

VMap hom_postcompose(const HomObject& from, const HomObject& to, const VNat& beta)
{
    const auto& ctx = from.source.ctx();
    std::vector<VMap> u;
    for (std::size_t c = 0; c < from.source.count(); ++c) {
        VObj fc = from.source.value(c);
        u.push_back(compose(beta.component(c), compose(eval(ctx, fc, from.target.value(c)),
                                                       tensor(from.end.wedge[c], identity(ctx, fc)))));
    }
    return to.from_components(from.apex(), u);
}

Copresheaf CopresheafFamily::at(std::size_t z) const
{
    return Module::build(
        a, kCopresheafLegs, [&](const Module::Tuple& t) { return members[t[0]].value(z); },
        [&](const Module::Tuple& s, const Module::Tuple& d) { return action(s[0], d[0], z); });
}

LawReport check_family(const CopresheafFamily& n)
{
    LawReport r;
    const auto& ctx = n.c->ctx();
    std::size_t na = n.a->size(), nc = n.c->size();
    for (const auto& m : n.members) {
        require_legs(m, kCopresheafLegs, "family member");
        if (!same_category(m.cat(), n.c))
            throw ContextMismatch("family member over the wrong category");
        r.merge(check_action(m));
    }
    for (std::size_t z = 0; z < nc; ++z)
        r.merge(check_action(n.at(z)));
    // the A-action commutes with the C-action
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y)
            for (std::size_t z = 0; z < nc; ++z)
                for (std::size_t w = 0; w < nc; ++w) {
                    VObj ha = n.a->hom(x, y), hc = n.c->hom(z, w);
                    VObj nz = n.members[x].value(z);
                    auto lhs = compose(n.action(x, y, w),
                                       compose(tensor(identity(ctx, ha), n.members[x].act(z, w)),
                                               tensor(symmetry(ctx, hc, ha), identity(ctx, nz))));
                    auto rhs = compose(n.members[y].act(z, w), tensor(identity(ctx, hc), n.action(x, y, z)));
                    r.check("family naturality", {x, y, z, w}, lhs, rhs);
                }
    return r;
}

CopresheafFamily representable_family(const VFunctor& n, const CatRef& a_op)
{
    const auto& c = n.target();
    const auto& ctx = c->ctx();
    std::size_t na = a_op->size(), nc = c->size();
    if (na != n.source()->size())
        throw ContextMismatch("opposite category does not match the functor's source");
    CopresheafFamily r{a_op, c, {}, {}};
    for (std::size_t x = 0; x < na; ++x)
        r.members.push_back(representable(c, n.obj(x)));
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y)
            for (std::size_t z = 0; z < nc; ++z) {
                std::size_t nx = n.obj(x), ny = n.obj(y);
                r.act.push_back(compose(c->comp(ny, nx, z),
                                        compose(symmetry(ctx, c->hom(ny, nx), c->hom(nx, z)),
                                                tensor(n.map(y, x), identity(ctx, c->hom(nx, z))))));
            }
    return r;
}

CopresheafFamily zero_family(const CatRef& a, const CatRef& c)
{
    const auto& ctx = c->ctx();
    CopresheafFamily r{a, c, {}, {}};
    for (std::size_t x = 0; x < a->size(); ++x)
        r.members.push_back(zero_module(c, kCopresheafLegs));
    for (std::size_t i = 0; i < a->size() * a->size() * c->size(); ++i)
        r.act.push_back(identity(ctx, VObj{0}));
    return r;
}

LResult l_functor(const CopresheafFamily& n, const Presheaf& f)
{
    require_legs(f, kPresheafLegs, "L input");
    if (!same_category(f.cat(), n.a))
        throw ContextMismatch("L input lives over the wrong category");
    const auto& c = n.c;
    const auto& ctx = c->ctx();
    std::vector<CoendResult> coends;
    for (std::size_t z = 0; z < c->size(); ++z)
        coends.push_back(coend(external_tensor(f, n.at(z))));
    auto value = Module::build(
        c, kCopresheafLegs, [&](const Module::Tuple& t) { return coends[t[0]].apex; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            VObj x = c->hom(s[0], d[0]);
            std::vector<VMap> h;
            for (std::size_t a = 0; a < n.a->size(); ++a) {
                VObj fa = f.value(a);
                h.push_back(compose(coends[d[0]].cowedge[a],
                                    compose(tensor(identity(ctx, fa), n.members[a].act(s[0], d[0])),
                                            tensor(symmetry(ctx, x, fa), identity(ctx, n.members[a].value(s[0]))))));
            }
            return coends[s[0]].factor_tensored(x, h);
        });
    return LResult{f, value, std::move(coends)};
}

YResult n_yoneda(const CopresheafFamily& n, const Copresheaf& e)
{
    require_legs(e, kCopresheafLegs, "Y input");
    if (!same_category(e.cat(), n.c))
        throw ContextMismatch("Y input lives over the wrong category");
    const auto& a = n.a;
    const auto& ctx = a->ctx();
    std::vector<HomObject> homs;
    for (const auto& m : n.members)
        homs.push_back(functor_hom_object(m, e));
    auto value = Module::build(
        a, kPresheafLegs, [&](const Module::Tuple& t) { return homs[t[0]].apex(); },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            std::size_t x = s[0], y = d[0];
            VObj h = a->hom(y, x);
            VObj apex = homs[x].apex();
            std::vector<VMap> u;
            for (std::size_t z = 0; z < n.c->size(); ++z) {
                VObj nx = n.members[x].value(z), ny = n.members[y].value(z);
                u.push_back(compose(eval(ctx, nx, e.value(z)),
                                    compose(tensor(homs[x].end.wedge[z], n.action(y, x, z)),
                                            tensor(symmetry(ctx, h, apex), identity(ctx, ny)))));
            }
            return homs[y].from_components(tensor(h, apex), u);
        });
    return YResult{e, value, std::move(homs)};
}

VMap l_unit(const CopresheafFamily& n, const LResult& lf, const YResult& ylf, std::size_t b)
{
    std::vector<VMap> u;
    for (std::size_t z = 0; z < n.c->size(); ++z)
        u.push_back(lf.coends[z].cowedge[b]);
    return ylf.homs[b].from_components(lf.f.value(b), u);
}

DaggerResult dagger_check(const CopresheafFamily& n, VObj x, std::size_t a, std::size_t b)
{
    const auto& ctx = n.c->ctx();
    auto h1 = functor_hom_object(n.members[b], n.members[a]);
    auto h2 = functor_hom_object(n.members[b], tensor_object(x, n.members[a]));
    std::vector<VMap> u;
    for (std::size_t z = 0; z < n.c->size(); ++z) {
        VObj nb = n.members[b].value(z), na = n.members[a].value(z);
        u.push_back(tensor(identity(ctx, x),
                           compose(eval(ctx, nb, na), tensor(h1.end.wedge[z], identity(ctx, nb)))));
    }
    auto map = h2.from_components(tensor(x, h1.apex()), u);
    return DaggerResult{map, classify_map(map)};
}

} // namespace kanex
