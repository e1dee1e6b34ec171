#include "kanex/kancoend.hpp"

namespace kanex {

Promonoidal monoid_promonoidal(const FiniteMonoid& m)
{
    auto a = monoid_discrete_category(m);
    const auto& ctx = a->ctx();
    auto p = Module::build(
        a, kTriModuleLegs, [&](const Module::Tuple& t) { return VObj{m.op(t[0], t[1]) == t[2] ? 1u : 0u}; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            VObj v{m.op(d[0], d[1]) == d[2] ? 1u : 0u};
            if (s == d)
                return identity(ctx, v);
            // some hom between distinct objects is empty
            return VMap::from_table(ctx, v, {});
        });
    return Promonoidal{a, p, representable(a, m.unit)};
}

CayleyResult cayley(const TriModule& p, const Copresheaf& f)
{
    require_legs(p, kTriModuleLegs, "promonoidal structure");
    require_legs(f, kCopresheafLegs, "Cayley input");
    if (!same_category(p.cat(), f.cat()))
        throw ContextMismatch("Cayley input lives over the wrong category");
    const auto& a = p.cat();
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    std::vector<CoendResult> coends;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
            auto slice = Module::build(
                a, kPresheafLegs, [&](const Module::Tuple& t) { return p.value({t[0], b, c}); },
                [&](const Module::Tuple& s, const Module::Tuple& d) { return p.one_sided(0, {s[0], b, c}, d[0]); });
            coends.push_back(coend(external_tensor(slice, f)));
        }
    auto value = Module::build(
        a, kBimoduleLegs, [&](const Module::Tuple& t) { return coends[t[0] * n + t[1]].apex; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            VObj x = tensor(a->hom(s[1], d[1]), a->hom(d[0], s[0]));
            std::vector<VMap> h;
            for (std::size_t i = 0; i < n; ++i) {
                VObj pv = p.value({i, s[0], s[1]});
                auto move = compose(p.joint({i, s[0], s[1]}, {i, d[0], d[1]}),
                                    tensor_all({identity(ctx, x), a->ident(i), identity(ctx, pv)}));
                h.push_back(compose(coends[d[0] * n + d[1]].cowedge[i], tensor(move, identity(ctx, f.value(i)))));
            }
            return coends[s[0] * n + s[1]].factor_tensored(x, h);
        });
    return CayleyResult{p, value, std::move(coends)};
}

VNat cayley_map(const CayleyResult& cf, const CayleyResult& cg, const VNat& alpha)
{
    const auto& a = cf.p.cat();
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    std::vector<VMap> comps;
    for (std::size_t i = 0; i < cf.coends.size(); ++i) {
        std::vector<VMap> h;
        for (std::size_t x = 0; x < n; ++x)
            h.push_back(compose(cg.coends[i].cowedge[x],
                                tensor(identity(ctx, cf.p.value({x, i / n, i % n})), alpha.component(x))));
        comps.push_back(cf.coends[i].factor(h));
    }
    return VNat(cf.value, cg.value, std::move(comps));
}

} // namespace kanex
