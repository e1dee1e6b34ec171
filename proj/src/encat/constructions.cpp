#include "kanex/encat.hpp"

namespace kanex {

namespace {

// Map X -> cod taking the i-th element / basis vector to elems[i].
VMap from_elements(const BaseCtx& ctx, VObj cod, const std::vector<VMap>& elems)
{
    if (ctx.is_set()) {
        VMap::Table t;
        for (const auto& e : elems)
            t.push_back(e.table()[0]);
        return VMap::from_table(ctx, cod, std::move(t));
    }
    Matrix m(cod.size, elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < cod.size; ++i)
            m(i, j) = elems[j].matrix()(i, 0);
    return VMap::from_matrix(ctx, std::move(m));
}

VMap random_element(const BaseCtx& ctx, VObj x, std::mt19937_64& rng)
{
    if (ctx.is_set())
        return element(ctx, x, rng() % x.size);
    Matrix m(x.size, 1);
    for (std::size_t i = 0; i < x.size; ++i)
        m(i, 0) = static_cast<long>(rng() % 3) - 1;
    return VMap::from_matrix(ctx, std::move(m));
}

} // namespace

Copresheaf representable(const CatRef& a, std::size_t b)
{
    if (b >= a->size())
        throw UnknownObject("representable at an unknown object");
    return Module::build(
        a, kCopresheafLegs, [&](const Module::Tuple& t) { return a->hom(b, t[0]); },
        [&](const Module::Tuple& s, const Module::Tuple& d) { return a->comp(b, s[0], d[0]); });
}

Presheaf corepresentable(const CatRef& a, std::size_t b)
{
    if (b >= a->size())
        throw UnknownObject("corepresentable at an unknown object");
    const auto& ctx = a->ctx();
    return Module::build(
        a, kPresheafLegs, [&](const Module::Tuple& t) { return a->hom(t[0], b); },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            std::size_t x = s[0], y = d[0];
            return compose(a->comp(y, x, b), symmetry(ctx, a->hom(y, x), a->hom(x, b)));
        });
}

Bimodule hom_bimodule(const CatRef& a)
{
    const auto& ctx = a->ctx();
    return Module::from_one_sided(
        a, kBimoduleLegs, [&](const Module::Tuple& t) { return a->hom(t[0], t[1]); },
        [&](std::size_t leg, const Module::Tuple& t, std::size_t x) {
            if (leg == 0)
                return compose(a->comp(x, t[0], t[1]), symmetry(ctx, a->hom(x, t[0]), a->hom(t[0], t[1])));
            return a->comp(t[0], t[1], x);
        });
}

Module zero_module(const CatRef& a, std::vector<Variance> legs)
{
    const auto& ctx = a->ctx();
    return Module::build(
        a, std::move(legs), [](const Module::Tuple&) { return VObj{0}; },
        [&](const Module::Tuple&, const Module::Tuple&) { return identity(ctx, VObj{0}); });
}

Module restrict_along(const VFunctor& n, const Module& g)
{
    if (!same_category(n.target(), g.cat()))
        throw ContextMismatch("restriction along a functor into a different category");
    const auto& ctx = g.ctx();
    auto image = [&](const Module::Tuple& t) {
        Module::Tuple u(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            u[i] = n.obj(t[i]);
        return u;
    };
    return Module::build(
        n.source(), g.legs(), [&](const Module::Tuple& t) { return g.value(image(t)); },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            std::vector<VMap> parts;
            for (std::size_t i = s.size(); i-- > 0;)
                parts.push_back(g.legs()[i] == Variance::Co ? n.map(s[i], d[i]) : n.map(d[i], s[i]));
            parts.push_back(identity(ctx, g.value(image(s))));
            return compose(g.joint(image(s), image(d)), tensor_all(parts));
        });
}

VNat restrict_along(const VFunctor& n, const VNat& alpha)
{
    auto f = restrict_along(n, alpha.source());
    auto g = restrict_along(n, alpha.target());
    std::vector<VMap> cs;
    for (std::size_t i = 0; i < f.count(); ++i) {
        auto t = f.tuple(i);
        for (auto& x : t)
            x = n.obj(x);
        cs.push_back(alpha.component(t));
    }
    return VNat(f, g, std::move(cs));
}

Module flip_variance(const Module& m, const CatRef& a_op)
{
    auto legs = m.legs();
    for (auto& l : legs)
        l = l == Variance::Co ? Variance::Contra : Variance::Co;
    return Module::build(
        a_op, legs, [&](const Module::Tuple& t) { return m.value(t); },
        [&](const Module::Tuple& s, const Module::Tuple& d) { return m.joint(s, d); });
}

std::size_t free_offset(const CatRef& a, const std::vector<VObj>& generators, std::size_t summand, std::size_t y)
{
    std::size_t off = 0;
    for (std::size_t x = 0; x < summand; ++x)
        off += a->hom(x, y).size * generators[x].size;
    return off;
}

Copresheaf free_copresheaf(const CatRef& a, const std::vector<VObj>& generators)
{
    if (generators.size() != a->size())
        throw InvalidStructure("free copresheaf needs one generator object per object");
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    auto summands = [&](std::size_t y) {
        std::vector<VObj> s;
        for (std::size_t x = 0; x < n; ++x)
            s.push_back(tensor(a->hom(x, y), generators[x]));
        return s;
    };
    return Module::build(
        a, kCopresheafLegs,
        [&](const Module::Tuple& t) {
            std::size_t d = 0;
            for (auto s : summands(t[0]))
                d += s.size;
            return VObj{d};
        },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            std::size_t y = s[0], z = d[0];
            std::vector<VMap> parts;
            for (std::size_t x = 0; x < n; ++x)
                parts.push_back(tensor(a->comp(x, y, z), identity(ctx, generators[x])));
            return compose(direct_sum(ctx, parts), distribute_left(ctx, a->hom(y, z), summands(y)));
        });
}

VNat free_map(const std::vector<VObj>& generators, const Copresheaf& free_source, const Copresheaf& target,
              const std::vector<std::vector<VMap>>& images)
{
    const auto& a = target.cat();
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    std::vector<VMap> gen;
    for (std::size_t x = 0; x < n; ++x) {
        if (images[x].size() != generators[x].size)
            throw InvalidStructure("free map needs one image per generator");
        gen.push_back(from_elements(ctx, target.value(x), images[x]));
    }
    std::vector<VMap> cs;
    for (std::size_t y = 0; y < n; ++y) {
        std::vector<VMap> hs;
        for (std::size_t x = 0; x < n; ++x)
            hs.push_back(compose(target.act(x, y), tensor(identity(ctx, a->hom(x, y)), gen[x])));
        cs.push_back(copair(ctx, hs, target.value(y)));
    }
    return VNat(free_source, target, std::move(cs));
}

Quotient coequalize(const VNat& f, const VNat& g)
{
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw BoundaryMismatch("coequalizer of transformations with different boundaries");
    const auto& t = f.target();
    std::vector<ColimitCocone> co;
    for (std::size_t i = 0; i < t.count(); ++i)
        co.push_back(coequalizer(f.component(i), g.component(i)));
    auto value = Module::build(
        t.cat(), t.legs(), [&](const Module::Tuple& x) { return co[t.index(x)].apex; },
        [&](const Module::Tuple& s, const Module::Tuple& d) {
            auto h = compose(co[t.index(d)].legs[0], t.joint(s, d));
            try {
                return tensor_left(t.joint_hom(s, d), co[t.index(s)]).factor({h});
            } catch (const IncompatibleCandidate&) {
                throw FactorizationFailure("action does not descend to the quotient; the pair is not natural");
            }
        });
    std::vector<VMap> qs;
    for (const auto& c : co)
        qs.push_back(c.legs[0]);
    return Quotient{value, VNat(t, value, std::move(qs))};
}

Copresheaf generate_copresheaf(const CatRef& a, const CopresheafSpec& spec)
{
    auto f = free_copresheaf(a, spec.generators);
    bool has_relations = false;
    for (auto r : spec.relations)
        has_relations = has_relations || r.size > 0;
    if (!has_relations)
        return f;
    auto r = free_copresheaf(a, spec.relations);
    auto l = free_map(spec.relations, r, f, spec.lhs);
    auto rr = free_map(spec.relations, r, f, spec.rhs);
    return coequalize(l, rr).value;
}

CopresheafSpec random_free_spec(const CatRef& a, std::mt19937_64& rng, std::size_t max_generators)
{
    CopresheafSpec s;
    std::size_t total = 0;
    for (std::size_t x = 0; x < a->size(); ++x) {
        std::size_t g = rng() % (max_generators + 1);
        s.generators.push_back(VObj{g});
        total += g;
    }
    if (total == 0)
        s.generators[rng() % a->size()] = VObj{1};
    s.relations.assign(a->size(), VObj{0});
    s.lhs.assign(a->size(), {});
    s.rhs.assign(a->size(), {});
    return s;
}

CopresheafSpec random_quotient_spec(const CatRef& a, std::mt19937_64& rng, std::size_t max_generators)
{
    auto s = random_free_spec(a, rng, max_generators);
    auto f = free_copresheaf(a, s.generators);
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < a->size(); ++x)
        if (f.value(x).size > 0)
            candidates.push_back(x);
    if (candidates.empty())
        return s;
    std::size_t x = candidates[rng() % candidates.size()];
    const auto& ctx = a->ctx();
    s.relations[x] = VObj{1};
    s.lhs[x].push_back(random_element(ctx, f.value(x), rng));
    if (ctx.is_set())
        s.rhs[x].push_back(random_element(ctx, f.value(x), rng));
    else
        s.rhs[x].push_back(zero_map(ctx, unit_obj(), f.value(x)));
    return s;
}

} // namespace kanex
