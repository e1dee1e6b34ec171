#pragma once

// Small generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "kanex/vbase.hpp"

namespace kanex::testing {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t n)
{
    return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

inline VMap random_map(std::mt19937_64& rng, const BaseCtx& ctx, VObj dom, VObj cod)
{
    if (ctx.is_set()) {
        VMap::Table t(dom.size);
        for (auto& v : t)
            v = uniform(rng, cod.size);
        return VMap::from_table(ctx, cod, std::move(t));
    }
    Matrix m(cod.size, dom.size);
    for (std::size_t i = 0; i < cod.size; ++i)
        for (std::size_t j = 0; j < dom.size; ++j)
            m(i, j) = static_cast<long>(uniform(rng, 5)) - 2;
    return VMap::from_matrix(ctx, std::move(m));
}

/// Random injective table / full-column-rank matrix, dom <= cod.
inline VMap random_mono(std::mt19937_64& rng, const BaseCtx& ctx, VObj dom, VObj cod)
{
    if (ctx.is_set()) {
        std::vector<std::size_t> pool(cod.size);
        for (std::size_t i = 0; i < cod.size; ++i)
            pool[i] = i;
        for (std::size_t i = cod.size; i > 1; --i)
            std::swap(pool[i - 1], pool[uniform(rng, i)]);
        pool.resize(dom.size);
        return VMap::from_table(ctx, cod, pool);
    }
    for (;;) {
        VMap m = random_map(rng, ctx, dom, cod);
        if (rank(ctx.field(), m.matrix()) == dom.size)
            return m;
    }
}

/// Every FinSet table dom -> cod (small sizes only).
inline std::vector<VMap> all_tables(const BaseCtx& ctx, VObj dom, VObj cod)
{
    std::vector<VMap> out;
    std::size_t count = 1;
    for (std::size_t i = 0; i < dom.size; ++i)
        count *= cod.size;
    for (std::size_t idx = 0; idx < count; ++idx) {
        VMap::Table t(dom.size);
        std::size_t r = idx;
        for (std::size_t i = 0; i < dom.size; ++i) {
            t[i] = r % cod.size;
            r /= cod.size;
        }
        out.push_back(VMap::from_table(ctx, cod, std::move(t)));
    }
    return out;
}

} // namespace kanex::testing
