#include "kanex/encat.hpp"

namespace kanex {

namespace {

std::size_t power(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i)
        r *= n;
    return r;
}

Module::Tuple with(Module::Tuple t, std::size_t leg, std::size_t x)
{
    t[leg] = x;
    return t;
}

} // namespace

std::size_t Module::index(const Tuple& t) const
{
    std::size_t n = cat()->size();
    std::size_t i = 0;
    for (auto x : t)
        i = i * n + x;
    return i;
}

Module::Tuple Module::tuple(std::size_t index) const
{
    std::size_t n = cat()->size();
    Tuple t(arity());
    for (std::size_t i = arity(); i-- > 0;) {
        t[i] = index % n;
        index /= n;
    }
    return t;
}

VObj Module::leg_hom(std::size_t leg, std::size_t from, std::size_t to) const
{
    return legs()[leg] == Variance::Co ? cat()->hom(from, to) : cat()->hom(to, from);
}

VObj Module::joint_hom(const Tuple& src, const Tuple& dst) const
{
    VObj h = unit_obj();
    for (std::size_t i = arity(); i-- > 0;)
        h = tensor(h, leg_hom(i, src[i], dst[i]));
    return h;
}

VMap Module::one_sided(std::size_t leg, const Tuple& src, std::size_t x) const
{
    if (arity() == 1)
        return act(src[0], x);
    const auto& ctx = this->ctx();
    std::vector<VMap> parts;
    for (std::size_t i = arity(); i-- > 0;)
        parts.push_back(i == leg ? identity(ctx, leg_hom(i, src[i], x)) : cat()->ident(src[i]));
    parts.push_back(identity(ctx, value(src)));
    return compose(joint(src, with(src, leg, x)), tensor_all(parts));
}

Module Module::build(CatRef cat, std::vector<Variance> legs, const ValueFn& value, const JointFn& joint)
{
    if (legs.empty())
        throw InvalidStructure("module needs at least one leg");
    auto d = std::make_shared<Data>();
    d->cat = std::move(cat);
    d->legs = std::move(legs);
    Module m;
    m.d_ = d;
    std::size_t count = power(d->cat->size(), d->legs.size());
    d->values.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        d->values.push_back(value(m.tuple(i)));
    d->joints.reserve(count * count);
    const auto& ctx = d->cat->ctx();
    for (std::size_t s = 0; s < count; ++s)
        for (std::size_t t = 0; t < count; ++t) {
            auto src = m.tuple(s);
            auto dst = m.tuple(t);
            VMap j = joint(src, dst);
            if (!(j.ctx() == ctx) || j.dom() != tensor(m.joint_hom(src, dst), d->values[s]) || j.cod() != d->values[t])
                throw InvalidStructure("module action has the wrong shape");
            d->joints.push_back(std::move(j));
        }
    return m;
}

Module Module::from_one_sided(CatRef cat, std::vector<Variance> legs, const ValueFn& value, const OneSidedFn& act)
{
    // A scratch module answers the index and hom-shape questions.
    Module shape;
    {
        auto d = std::make_shared<Data>();
        d->cat = cat;
        d->legs = legs;
        d->values.resize(power(cat->size(), legs.size()));
        shape.d_ = d;
    }
    const auto& ctx = cat->ctx();
    return build(cat, legs, value, [&](const Tuple& src, const Tuple& dst) {
        std::size_t k = src.size();
        Tuple t = src;
        VMap acc = identity(ctx, tensor(shape.joint_hom(src, dst), value(src)));
        for (std::size_t i = 0; i < k; ++i) {
            VObj outer = unit_obj();
            for (std::size_t j = k; j-- > i + 1;)
                outer = tensor(outer, shape.leg_hom(j, src[j], dst[j]));
            VMap step = act(i, t, dst[i]);
            acc = compose(tensor(identity(ctx, outer), step), acc);
            t[i] = dst[i];
        }
        return acc;
    });
}

bool operator==(const Module& x, const Module& y)
{
    if (x.d_ == y.d_)
        return true;
    return same_category(x.cat(), y.cat()) && x.d_->legs == y.d_->legs && x.d_->values == y.d_->values &&
           x.d_->joints == y.d_->joints;
}

void require_legs(const Module& m, const std::vector<Variance>& legs, const char* what)
{
    if (m.legs() != legs)
        throw InvalidStructure(std::string(what) + " has the wrong variance layout");
}

VNat::VNat(Module source, Module target, std::vector<VMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    if (!same_category(source_.cat(), target_.cat()) || source_.legs() != target_.legs())
        throw InvalidStructure("natural transformation between modules of different shape");
    if (components_.size() != source_.count())
        throw InvalidStructure("natural transformation has the wrong number of components");
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].dom() != source_.value_at(i) || components_[i].cod() != target_.value_at(i))
            throw InvalidStructure("natural transformation component has the wrong shape");
}

bool operator==(const VNat& x, const VNat& y)
{
    return x.source_ == y.source_ && x.target_ == y.target_ && x.components_ == y.components_;
}

VNat identity_nat(const Module& m)
{
    std::vector<VMap> cs;
    for (std::size_t i = 0; i < m.count(); ++i)
        cs.push_back(identity(m.ctx(), m.value_at(i)));
    return VNat(m, m, std::move(cs));
}

VNat compose(const VNat& beta, const VNat& alpha)
{
    if (!(alpha.target() == beta.source()))
        throw BoundaryMismatch("composing natural transformations with mismatched boundary");
    std::vector<VMap> cs;
    for (std::size_t i = 0; i < alpha.components().size(); ++i)
        cs.push_back(compose(beta.component(i), alpha.component(i)));
    return VNat(alpha.source(), beta.target(), std::move(cs));
}

bool is_iso(const VNat& alpha)
{
    for (const auto& c : alpha.components())
        if (!classify_map(c).iso)
            return false;
    return true;
}

LawReport check_action(const Module& m)
{
    LawReport r;
    const auto& ctx = m.ctx();
    const auto& a = *m.cat();
    std::size_t n = a.size();
    std::size_t k = m.arity();

    for (std::size_t i = 0; i < m.count(); ++i) {
        auto t = m.tuple(i);
        std::vector<VMap> parts;
        for (std::size_t j = k; j-- > 0;)
            parts.push_back(a.ident(t[j]));
        parts.push_back(identity(ctx, m.value(t)));
        r.check("unit", t, compose(m.joint(t, t), tensor_all(parts)), identity(ctx, m.value(t)));
    }

    if (k > 1)
        for (std::size_t s = 0; s < m.count(); ++s)
            for (std::size_t d = 0; d < m.count(); ++d) {
                auto src = m.tuple(s);
                auto dst = m.tuple(d);
                auto t = src;
                VMap acc = identity(ctx, tensor(m.joint_hom(src, dst), m.value(src)));
                for (std::size_t i = 0; i < k; ++i) {
                    VObj outer = unit_obj();
                    for (std::size_t j = k; j-- > i + 1;)
                        outer = tensor(outer, m.leg_hom(j, src[j], dst[j]));
                    acc = compose(tensor(identity(ctx, outer), m.one_sided(i, t, dst[i])), acc);
                    t[i] = dst[i];
                }
                auto at = src;
                at.insert(at.end(), dst.begin(), dst.end());
                r.check("joint action", at, m.joint(src, dst), acc);
            }

    for (std::size_t i = 0; i < m.count(); ++i) {
        auto t = m.tuple(i);
        for (std::size_t leg = 0; leg < k; ++leg) {
            std::size_t x = t[leg];
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    auto ty = with(t, leg, y);
                    VObj hyz = m.leg_hom(leg, y, z);
                    auto lhs = compose(m.one_sided(leg, ty, z), tensor(identity(ctx, hyz), m.one_sided(leg, t, y)));
                    VMap c = m.legs()[leg] == Variance::Co
                                 ? a.comp(x, y, z)
                                 : compose(a.comp(z, y, x), symmetry(ctx, a.hom(z, y), a.hom(y, x)));
                    auto rhs = compose(m.one_sided(leg, t, z), tensor(c, identity(ctx, m.value(t))));
                    auto at = t;
                    at.push_back(leg);
                    at.push_back(y);
                    at.push_back(z);
                    r.check("associativity", at, lhs, rhs);
                }
        }
        for (std::size_t li = 0; li < k; ++li)
            for (std::size_t lj = li + 1; lj < k; ++lj)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        VObj hi = m.leg_hom(li, t[li], x);
                        VObj hj = m.leg_hom(lj, t[lj], y);
                        auto lhs = compose(m.one_sided(lj, with(t, li, x), y),
                                           tensor(identity(ctx, hj), m.one_sided(li, t, x)));
                        auto rhs = compose_all({m.one_sided(li, with(t, lj, y), x),
                                                tensor(identity(ctx, hi), m.one_sided(lj, t, y)),
                                                tensor(symmetry(ctx, hj, hi), identity(ctx, m.value(t)))});
                        auto at = t;
                        at.push_back(x);
                        at.push_back(y);
                        r.check("interchange", at, lhs, rhs);
                    }
    }
    return r;
}

LawReport check_natural(const VNat& alpha)
{
    LawReport r;
    const auto& f = alpha.source();
    const auto& g = alpha.target();
    const auto& ctx = f.ctx();
    std::size_t n = f.cat()->size();
    for (std::size_t i = 0; i < f.count(); ++i) {
        auto t = f.tuple(i);
        for (std::size_t leg = 0; leg < f.arity(); ++leg)
            for (std::size_t x = 0; x < n; ++x) {
                auto tx = with(t, leg, x);
                auto lhs = compose(alpha.component(tx), f.one_sided(leg, t, x));
                auto rhs = compose(g.one_sided(leg, t, x),
                                   tensor(identity(ctx, f.leg_hom(leg, t[leg], x)), alpha.component(i)));
                auto at = t;
                at.push_back(x);
                r.check("naturality", at, lhs, rhs);
            }
    }
    return r;
}

} // namespace kanex
