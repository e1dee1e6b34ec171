#include "kanex/encat.hpp"

#include <algorithm>

namespace kanex {

namespace {

void expect_shape(const VMap& m, const BaseCtx& ctx, VObj dom, VObj cod, const std::string& what)
{
    if (!(m.ctx() == ctx))
        throw InvalidStructure(what + ": map over the wrong base");
    if (m.dom() != dom || m.cod() != cod)
        throw InvalidStructure(what + ": expected " + std::to_string(dom.size) + " -> " +
                               std::to_string(cod.size) + ", got " + std::to_string(m.dom().size) + " -> " +
                               std::to_string(m.cod().size));
}

std::string triple(const VCat& a, std::size_t x, std::size_t y, std::size_t z)
{
    return "(" + a.name(x) + "," + a.name(y) + "," + a.name(z) + ")";
}

} // namespace

CatRef VCat::build(const BaseCtx& ctx, std::vector<std::string> objects, const HomFn& hom, const CompFn& comp,
                   const IdentFn& ident)
{
    std::shared_ptr<VCat> c(new VCat(ctx));
    c->objects_ = std::move(objects);
    auto sorted = c->objects_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidStructure("category has repeated object names");
    std::size_t n = c->size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            c->homs_.push_back(hom(a, b));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t b = 0; b < n; ++b) {
                VMap m = comp(a, x, b);
                expect_shape(m, ctx, tensor(c->hom(x, b), c->hom(a, x)), c->hom(a, b),
                             "composition at " + triple(*c, a, x, b));
                c->comps_.push_back(std::move(m));
            }
    for (std::size_t a = 0; a < n; ++a) {
        VMap m = ident(a);
        expect_shape(m, ctx, unit_obj(), c->hom(a, a), "identity at " + c->name(a));
        c->idents_.push_back(std::move(m));
    }
    return c;
}

std::size_t VCat::index(const std::string& name) const
{
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end())
        throw UnknownObject("unknown object \"" + name + "\"");
    return static_cast<std::size_t>(it - objects_.begin());
}

bool same_category(const CatRef& a, const CatRef& b)
{
    return a == b || (a && b && *a == *b);
}

VFunctor VFunctor::build(CatRef source, CatRef target, std::vector<std::size_t> obj_map, const MapFn& map)
{
    if (!(source->ctx() == target->ctx()))
        throw InvalidStructure("functor between categories over different bases");
    if (obj_map.size() != source->size())
        throw InvalidStructure("functor object map has the wrong length");
    for (auto c : obj_map)
        if (c >= target->size())
            throw InvalidStructure("functor object map leaves the target category");
    VFunctor f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.obj_map_ = std::move(obj_map);
    std::size_t n = f.source_->size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            VMap m = map(a, b);
            expect_shape(m, f.source_->ctx(), f.source_->hom(a, b), f.target_->hom(f.obj(a), f.obj(b)),
                         "functor component at (" + f.source_->name(a) + "," + f.source_->name(b) + ")");
            f.maps_.push_back(std::move(m));
        }
    return f;
}

VFunctor identity_functor(const CatRef& a)
{
    std::vector<std::size_t> objs(a->size());
    for (std::size_t i = 0; i < objs.size(); ++i)
        objs[i] = i;
    return VFunctor::build(a, a, objs, [&](std::size_t x, std::size_t y) { return identity(a->ctx(), a->hom(x, y)); });
}

CatRef opposite(const CatRef& a)
{
    const auto& ctx = a->ctx();
    return VCat::build(
        ctx, a->objects(), [&](std::size_t x, std::size_t y) { return a->hom(y, x); },
        [&](std::size_t x, std::size_t c, std::size_t y) {
            return compose(a->comp(y, c, x), symmetry(ctx, a->hom(y, c), a->hom(c, x)));
        },
        [&](std::size_t x) { return a->ident(x); });
}

VFunctor opposite_functor(const VFunctor& n, const CatRef& source_op, const CatRef& target_op)
{
    return VFunctor::build(source_op, target_op, n.obj_map(), [&](std::size_t a, std::size_t b) { return n.map(b, a); });
}

void LawReport::check(const std::string& law, std::vector<std::size_t> at, const VMap& lhs, const VMap& rhs)
{
    if (!(lhs == rhs))
        violations.push_back(Violation{law, std::move(at), lhs, rhs});
}

void LawReport::merge(const LawReport& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

LawReport check_category(const VCat& a)
{
    LawReport r;
    const auto& ctx = a.ctx();
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            r.check("left unit", {x, y}, compose(a.comp(x, y, y), tensor(a.ident(y), identity(ctx, a.hom(x, y)))),
                    identity(ctx, a.hom(x, y)));
            r.check("right unit", {x, y}, compose(a.comp(x, x, y), tensor(identity(ctx, a.hom(x, y)), a.ident(x))),
                    identity(ctx, a.hom(x, y)));
        }
    // A(c,b) (x) A(d,c) (x) A(x,d) -> A(x,b)
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t b = 0; b < n; ++b) {
                    auto lhs = compose(a.comp(x, c, b), tensor(identity(ctx, a.hom(c, b)), a.comp(x, d, c)));
                    auto rhs = compose(a.comp(x, d, b), tensor(a.comp(d, c, b), identity(ctx, a.hom(x, d))));
                    r.check("associativity", {x, d, c, b}, lhs, rhs);
                }
    return r;
}

LawReport check_functor(const VFunctor& n)
{
    LawReport r;
    const auto& a = *n.source();
    const auto& c = *n.target();
    std::size_t size = a.size();
    for (std::size_t x = 0; x < size; ++x)
        r.check("preserves identity", {x}, compose(n.map(x, x), a.ident(x)), c.ident(n.obj(x)));
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            for (std::size_t b = 0; b < size; ++b) {
                auto lhs = compose(n.map(x, b), a.comp(x, y, b));
                auto rhs = compose(c.comp(n.obj(x), n.obj(y), n.obj(b)), tensor(n.map(y, b), n.map(x, y)));
                r.check("preserves composition", {x, y, b}, lhs, rhs);
            }
    return r;
}

} // namespace kanex
