#include <set>

#include "kanex/kancoend.hpp"

namespace kanex {

namespace {

void require_over(const Copresheaf& f, const CatRef& on, const char* what)
{
    require_legs(f, kCopresheafLegs, what);
    if (!same_category(f.cat(), on))
        throw ContextMismatch(std::string(what) + " lives over the wrong category");
}

VNat counit_with(const LanResult& l, const Copresheaf& g)
{
    const auto& n = l.n;
    std::vector<VMap> comps;
    for (std::size_t c = 0; c < n.target()->size(); ++c) {
        std::vector<VMap> h;
        for (std::size_t a = 0; a < n.source()->size(); ++a)
            h.push_back(g.act(n.obj(a), c));
        comps.push_back(l.coends[c].factor(h));
    }
    return VNat(l.value, g, std::move(comps));
}

} // namespace

LanResult lan(const VFunctor& n, const Copresheaf& f)
{
    require_over(f, n.source(), "Kan extension input");
    const auto& a = n.source();
    const auto& c = n.target();
    const auto& ctx = a->ctx();
    std::vector<CoendResult> coends;
    for (std::size_t z = 0; z < c->size(); ++z)
        coends.push_back(coend(external_tensor(restrict_along(n, corepresentable(c, z)), f)));
    auto value = Module::build(
        c, kCopresheafLegs, [&](const Module::Tuple& t) { return coends[t[0]].apex; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            VObj x = c->hom(s[0], d[0]);
            std::vector<VMap> h;
            for (std::size_t i = 0; i < a->size(); ++i)
                h.push_back(compose(coends[d[0]].cowedge[i],
                                    tensor(c->comp(n.obj(i), s[0], d[0]), identity(ctx, f.value(i)))));
            return coends[s[0]].factor_tensored(x, h);
        });
    std::vector<VMap> eta;
    for (std::size_t b = 0; b < a->size(); ++b) {
        auto co = coyoneda_expand(f, b);
        std::vector<VMap> h;
        for (std::size_t i = 0; i < a->size(); ++i)
            h.push_back(compose(coends[n.obj(b)].cowedge[i], tensor(n.map(i, b), identity(ctx, f.value(i)))));
        eta.push_back(compose(co.coend.factor(h), co.iso));
    }
    VNat unit(f, restrict_along(n, value), std::move(eta));
    return LanResult{n, f, value, std::move(coends), std::move(unit)};
}

VNat lan_map(const LanResult& lf, const LanResult& lg, const VNat& alpha)
{
    const auto& ctx = lf.f.ctx();
    std::vector<VMap> comps;
    for (std::size_t c = 0; c < lf.coends.size(); ++c) {
        std::vector<VMap> h;
        for (std::size_t a = 0; a < lf.n.source()->size(); ++a)
            h.push_back(compose(lg.coends[c].cowedge[a],
                                tensor(identity(ctx, lf.n.target()->hom(lf.n.obj(a), c)), alpha.component(a))));
        comps.push_back(lf.coends[c].factor(h));
    }
    return VNat(lf.value, lg.value, std::move(comps));
}

VNat lan_map(const VFunctor& n, const VNat& alpha)
{
    return lan_map(lan(n, alpha.source()), lan(n, alpha.target()), alpha);
}

VNat lan_counit(const VFunctor& n, const Copresheaf& g)
{
    require_over(g, n.target(), "counit input");
    return counit_with(lan(n, restrict_along(n, g)), g);
}

VMap lan_reorder(const LanResult& lf, std::size_t c, const CoendResult& f_first)
{
    const auto& ctx = lf.f.ctx();
    std::vector<VMap> h;
    for (std::size_t a = 0; a < lf.n.source()->size(); ++a)
        h.push_back(compose(f_first.cowedge[a],
                            symmetry(ctx, lf.n.target()->hom(lf.n.obj(a), c), lf.f.value(a))));
    return lf.coends[c].factor(h);
}

AdjunctionReport adjunction_check(const VFunctor& n, const Copresheaf& f, const Copresheaf& g)
{
    require_over(f, n.source(), "adjunction: f");
    require_over(g, n.target(), "adjunction: g");
    const auto& ctx = f.ctx();
    AdjunctionReport r;

    auto lf = lan(n, f);
    auto l2 = lan(n, restrict_along(n, lf.value));
    auto t1 = compose(counit_with(l2, lf.value), lan_map(lf, l2, lf.unit));
    for (std::size_t c = 0; c < n.target()->size(); ++c)
        r.triangles.check("triangle: counit after Lan(unit)", {c}, t1.component(c),
                          identity(ctx, lf.value.value(c)));

    auto h = restrict_along(n, g);
    auto lh = lan(n, h);
    auto t2 = compose(restrict_along(n, counit_with(lh, g)), lh.unit);
    for (std::size_t a = 0; a < n.source()->size(); ++a)
        r.triangles.check("triangle: restricted counit after unit", {a}, t2.component(a),
                          identity(ctx, h.value(a)));

    auto left = nat_space(lf.value, g);
    auto right = nat_space(f, h);
    r.left_size = left.size;
    r.right_size = right.size;
    if (!left.complete || !right.complete)
        return r;

    bool ok = true;
    std::vector<VNat> transposes;
    for (const auto& phi : left.elements) {
        auto t = compose(restrict_along(n, phi), lf.unit);
        ok = ok && check_natural(t).lawful();
        transposes.push_back(std::move(t));
    }
    if (ctx.is_set()) {
        std::set<std::vector<VMap::Table>> seen;
        for (const auto& t : transposes) {
            std::vector<VMap::Table> key;
            for (const auto& m : t.components())
                key.push_back(m.table());
            seen.insert(std::move(key));
        }
        ok = ok && seen.size() == transposes.size();
    } else {
        std::size_t len = 0;
        for (std::size_t a = 0; a < f.count(); ++a)
            len += f.value(a).size * h.value(a).size;
        Matrix stack(transposes.size(), len);
        for (std::size_t i = 0; i < transposes.size(); ++i) {
            std::size_t col = 0;
            for (const auto& m : transposes[i].components())
                for (std::size_t x = 0; x < m.matrix().rows(); ++x)
                    for (std::size_t y = 0; y < m.matrix().cols(); ++y)
                        stack(i, col++) = m.matrix()(x, y);
        }
        ok = ok && rank(ctx.field(), stack) == transposes.size();
    }
    r.transposes_ok = ok;
    return r;
}

} // namespace kanex
