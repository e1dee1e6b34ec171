#include "kanex/catalog.hpp"

#include <algorithm>

namespace kanex {

void validate_monoid(const FiniteMonoid& m)
{
    std::size_t n = m.size();
    if (m.mul.size() != n * n || m.unit >= n)
        throw InvalidStructure("monoid " + m.name + ": table has the wrong size");
    for (auto v : m.mul)
        if (v >= n)
            throw InvalidStructure("monoid " + m.name + ": table entry out of range");
    for (std::size_t x = 0; x < n; ++x)
        if (m.op(m.unit, x) != x || m.op(x, m.unit) != x)
            throw InvalidStructure("monoid " + m.name + ": unit law fails at " + m.elements[x]);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z)))
                    throw InvalidStructure("monoid " + m.name + ": not associative at (" + m.elements[x] + "," +
                                           m.elements[y] + "," + m.elements[z] + ")");
}

bool is_group(const FiniteMonoid& m)
{
    for (std::size_t x = 0; x < m.size(); ++x) {
        bool found = false;
        for (std::size_t y = 0; y < m.size() && !found; ++y)
            found = m.op(x, y) == m.unit && m.op(y, x) == m.unit;
        if (!found)
            return false;
    }
    return true;
}

std::vector<std::size_t> inverses(const FiniteMonoid& g)
{
    std::vector<std::size_t> inv(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
        bool found = false;
        for (std::size_t y = 0; y < g.size() && !found; ++y)
            if (g.op(x, y) == g.unit && g.op(y, x) == g.unit) {
                inv[x] = y;
                found = true;
            }
        if (!found)
            throw InvalidStructure(g.name + " is not a group: " + g.elements[x] + " has no inverse");
    }
    return inv;
}

FiniteMonoid trivial_group()
{
    return FiniteMonoid{"1", {"e"}, {0}, 0};
}

FiniteMonoid cyclic_group(std::size_t n)
{
    FiniteMonoid m{"Z" + std::to_string(n), {}, {}, 0};
    for (std::size_t i = 0; i < n; ++i)
        m.elements.push_back(std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.mul.push_back((i + j) % n);
    return m;
}

FiniteMonoid symmetric_group3()
{
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    FiniteMonoid m{"S3", {}, {}, 0};
    for (const auto& q : perms)
        m.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    for (const auto& s : perms)
        for (const auto& t : perms) {
            std::vector<std::size_t> st{s[t[0]], s[t[1]], s[t[2]]};
            m.mul.push_back(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), st) - perms.begin()));
        }
    return m;
}

FiniteMonoid left_zero_monoid()
{
    // e x y
    return FiniteMonoid{"LZ3", {"e", "x", "y"}, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0};
}

CatRef monoid_algebra_category(const FiniteMonoid& m, const Field& k)
{
    validate_monoid(m);
    auto ctx = BaseCtx::finvect(k);
    std::size_t n = m.size();
    return VCat::build(
        ctx, {"*"}, [&](std::size_t, std::size_t) { return VObj{n}; },
        [&](std::size_t, std::size_t, std::size_t) {
            Matrix c(n, n * n);
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t h = 0; h < n; ++h)
                    c(m.op(g, h), g * n + h) = 1;
            return VMap::from_matrix(ctx, std::move(c));
        },
        [&](std::size_t) { return element(ctx, VObj{n}, m.unit); });
}

CatRef monoid_set_category(const FiniteMonoid& m)
{
    validate_monoid(m);
    auto ctx = BaseCtx::finset();
    std::size_t n = m.size();
    return VCat::build(
        ctx, {"*"}, [&](std::size_t, std::size_t) { return VObj{n}; },
        [&](std::size_t, std::size_t, std::size_t) {
            VMap::Table t;
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t h = 0; h < n; ++h)
                    t.push_back(m.op(g, h));
            return VMap::from_table(ctx, VObj{n}, std::move(t));
        },
        [&](std::size_t) { return element(ctx, VObj{n}, m.unit); });
}

VFunctor monoid_hom_functor(const CatRef& source, const CatRef& target, const FiniteMonoid& h,
                            const FiniteMonoid& g, const std::vector<std::size_t>& phi)
{
    if (phi.size() != h.size())
        throw InvalidStructure("homomorphism table has the wrong length");
    if (phi[h.unit] != g.unit)
        throw InvalidStructure("homomorphism does not preserve the unit");
    for (std::size_t x = 0; x < h.size(); ++x)
        for (std::size_t y = 0; y < h.size(); ++y)
            if (phi[h.op(x, y)] != g.op(phi[x], phi[y]))
                throw InvalidStructure("table is not a homomorphism " + h.name + " -> " + g.name);
    const auto& ctx = source->ctx();
    return VFunctor::build(source, target, {0}, [&](std::size_t, std::size_t) {
        Matrix m(g.size(), h.size());
        for (std::size_t x = 0; x < h.size(); ++x)
            m(phi[x], x) = 1;
        return VMap::from_matrix(ctx, std::move(m));
    });
}

namespace {

std::vector<std::string> numbered(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    return names;
}

// Category where every hom is I or 0 and composition is the unique / unit map.
CatRef thin_category(const BaseCtx& ctx, std::vector<std::string> names, const std::function<bool(std::size_t, std::size_t)>& arrow)
{
    return VCat::build(
        ctx, std::move(names), [&](std::size_t a, std::size_t b) { return VObj{arrow(a, b) ? 1u : 0u}; },
        [&](std::size_t a, std::size_t c, std::size_t b) {
            VObj dom{arrow(c, b) && arrow(a, c) ? 1u : 0u};
            VObj cod{arrow(a, b) ? 1u : 0u};
            if (dom.size == 1 && cod.size == 0)
                throw InvalidStructure("thin category is not closed under composition");
            if (ctx.is_set())
                return VMap::from_table(ctx, cod, VMap::Table(dom.size, 0));
            Matrix m(cod.size, dom.size);
            if (dom.size == 1)
                m(0, 0) = 1;
            return VMap::from_matrix(ctx, std::move(m));
        },
        [&](std::size_t a) { return identity(ctx, VObj{arrow(a, a) ? 1u : 0u}); });
}

} // namespace

CatRef terminal_category(const BaseCtx& ctx)
{
    return thin_category(ctx, {"*"}, [](std::size_t, std::size_t) { return true; });
}

CatRef indiscrete_category(const BaseCtx& ctx, std::size_t n)
{
    return thin_category(ctx, numbered(n), [](std::size_t, std::size_t) { return true; });
}

CatRef discrete_category(const BaseCtx& ctx, std::size_t n)
{
    return thin_category(ctx, numbered(n), [](std::size_t a, std::size_t b) { return a == b; });
}

CatRef monoid_discrete_category(const FiniteMonoid& m)
{
    validate_monoid(m);
    return thin_category(BaseCtx::finset(), m.elements, [](std::size_t a, std::size_t b) { return a == b; });
}

VFunctor object_map_functor(const CatRef& source, const CatRef& target, std::vector<std::size_t> obj_map)
{
    const auto& ctx = source->ctx();
    auto om = obj_map;
    return VFunctor::build(source, target, std::move(obj_map), [&](std::size_t a, std::size_t b) {
        VObj dom = source->hom(a, b);
        VObj cod = target->hom(om[a], om[b]);
        if (dom.size > 1 || cod.size > 1 || dom.size > cod.size)
            throw InvalidStructure("object map does not extend to a functor");
        if (ctx.is_set())
            return VMap::from_table(ctx, cod, VMap::Table(dom.size, 0));
        Matrix m(cod.size, dom.size);
        if (dom.size == 1)
            m(0, 0) = 1;
        return VMap::from_matrix(ctx, std::move(m));
    });
}

VFunctor augmentation(const CatRef& source, const CatRef& terminal)
{
    const auto& ctx = source->ctx();
    return VFunctor::build(source, terminal, std::vector<std::size_t>(source->size(), 0), [&](std::size_t a, std::size_t b) {
        VObj dom = source->hom(a, b);
        if (ctx.is_set())
            return VMap::from_table(ctx, unit_obj(), VMap::Table(dom.size, 0));
        Matrix m(1, dom.size);
        for (std::size_t j = 0; j < dom.size; ++j)
            m(0, j) = 1;
        return VMap::from_matrix(ctx, std::move(m));
    });
}

} // namespace kanex
