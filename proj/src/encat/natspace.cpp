#include "kanex/encat.hpp"

namespace kanex {

namespace {

struct Move
{
    std::size_t from;
    std::size_t to;
    VMap f_act;
    VMap g_act;
    std::size_t hom;
};

// Every one-sided action of f and g, the naturality equations being indexed by these.
std::vector<Move> moves(const Module& f, const Module& g)
{
    std::vector<Move> out;
    std::size_t n = f.cat()->size();
    for (std::size_t i = 0; i < f.count(); ++i) {
        auto t = f.tuple(i);
        for (std::size_t leg = 0; leg < f.arity(); ++leg)
            for (std::size_t x = 0; x < n; ++x) {
                auto u = t;
                u[leg] = x;
                out.push_back(Move{i, f.index(u), f.one_sided(leg, t, x), g.one_sided(leg, t, x),
                                   f.leg_hom(leg, t[leg], x).size});
            }
    }
    return out;
}

NatSpace linear_space(const Module& f, const Module& g)
{
    const auto& k = f.ctx().field();
    std::vector<std::size_t> offset(f.count() + 1, 0);
    for (std::size_t i = 0; i < f.count(); ++i)
        offset[i + 1] = offset[i] + f.value_at(i).size * g.value_at(i).size;
    std::size_t unknowns = offset.back();
    RowReducer rr(k, unknowns);
    for (const auto& mv : moves(f, g)) {
        std::size_t fs = f.value_at(mv.from).size, gs = g.value_at(mv.from).size;
        std::size_t ft = f.value_at(mv.to).size, gt = g.value_at(mv.to).size;
        const auto& fa = mv.f_act.matrix();
        const auto& ga = mv.g_act.matrix();
        // alpha_to * fa - ga * (1 (x) alpha_from) = 0, entry (r, (h, s)).
        for (std::size_t h = 0; h < mv.hom; ++h)
            for (std::size_t s = 0; s < fs; ++s)
                for (std::size_t r = 0; r < gt; ++r) {
                    std::vector<Scalar> row(unknowns);
                    bool any = false;
                    for (std::size_t u = 0; u < ft; ++u) {
                        const auto& c = fa(u, h * fs + s);
                        if (sgn(c) != 0) {
                            auto& e = row[offset[mv.to] + r * ft + u];
                            e = k.add(e, c);
                            any = true;
                        }
                    }
                    for (std::size_t v = 0; v < gs; ++v) {
                        const auto& c = ga(r, h * gs + v);
                        if (sgn(c) != 0) {
                            auto& e = row[offset[mv.from] + v * fs + s];
                            e = k.sub(e, c);
                            any = true;
                        }
                    }
                    if (any)
                        rr.add_row(std::move(row));
                }
    }
    Matrix basis = rr.kernel();
    NatSpace space;
    space.size = basis.cols();
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::vector<VMap> cs;
        for (std::size_t i = 0; i < f.count(); ++i) {
            std::size_t fs = f.value_at(i).size, gs = g.value_at(i).size;
            Matrix m(gs, fs);
            for (std::size_t r = 0; r < gs; ++r)
                for (std::size_t s = 0; s < fs; ++s)
                    m(r, s) = basis(offset[i] + r * fs + s, j);
            cs.push_back(VMap::from_matrix(f.ctx(), std::move(m)));
        }
        space.elements.emplace_back(f, g, std::move(cs));
    }
    return space;
}

struct SetSearch
{
    const Module& f;
    const Module& g;
    std::size_t cap;

    // value[target_var] must equal g_table[h * stride + value[source_var]];
    // listed under both variables.
    struct Constraint
    {
        std::size_t source_var;
        std::size_t target_var;
        const VMap::Table* g_table;
        std::size_t stride;
        std::size_t h;
    };

    std::vector<std::size_t> var_offset;
    std::vector<std::size_t> var_tuple;
    std::vector<std::size_t> domain;
    std::vector<std::vector<Constraint>> touching;
    std::vector<Move> mv;
    std::vector<long> value;
    NatSpace space;

    SetSearch(const Module& f_, const Module& g_, std::size_t cap_) : f(f_), g(g_), cap(cap_)
    {
        var_offset.assign(f.count() + 1, 0);
        for (std::size_t i = 0; i < f.count(); ++i) {
            var_offset[i + 1] = var_offset[i] + f.value_at(i).size;
            for (std::size_t x = 0; x < f.value_at(i).size; ++x) {
                var_tuple.push_back(i);
                domain.push_back(g.value_at(i).size);
            }
        }
        touching.resize(var_tuple.size());
        mv = moves(f, g);
        for (const auto& m : mv) {
            std::size_t fs = f.value_at(m.from).size;
            const auto& ft = m.f_act.table();
            for (std::size_t h = 0; h < m.hom; ++h)
                for (std::size_t s = 0; s < fs; ++s) {
                    std::size_t src = var_offset[m.from] + s;
                    std::size_t dst = var_offset[m.to] + ft[h * fs + s];
                    Constraint c{src, dst, &m.g_act.table(), g.value_at(m.from).size, h};
                    touching[src].push_back(c);
                    touching[dst].push_back(c);
                }
        }
        value.assign(var_tuple.size(), -1);
    }

    bool consistent(std::size_t var) const
    {
        for (const auto& c : touching[var]) {
            if (value[c.source_var] < 0 || value[c.target_var] < 0)
                continue;
            auto want = (*c.g_table)[c.h * c.stride + static_cast<std::size_t>(value[c.source_var])];
            if (static_cast<std::size_t>(value[c.target_var]) != want)
                return false;
        }
        return true;
    }

    void record()
    {
        std::vector<VMap> cs;
        for (std::size_t i = 0; i < f.count(); ++i) {
            VMap::Table t;
            for (std::size_t v = var_offset[i]; v < var_offset[i + 1]; ++v)
                t.push_back(static_cast<std::size_t>(value[v]));
            cs.push_back(VMap::from_table(f.ctx(), g.value_at(i), std::move(t)));
        }
        space.elements.emplace_back(f, g, std::move(cs));
    }

    void run(std::size_t var)
    {
        if (var == value.size()) {
            if (space.elements.size() >= cap)
                space.complete = false;
            else
                record();
            return;
        }
        for (std::size_t x = 0; x < domain[var]; ++x) {
            value[var] = static_cast<long>(x);
            if (consistent(var))
                run(var + 1);
            if (!space.complete)
                break;
        }
        value[var] = -1;
    }
};

} // namespace

NatSpace nat_space(const Module& f, const Module& g, std::size_t cap)
{
    if (!same_category(f.cat(), g.cat()) || f.legs() != g.legs())
        throw InvalidStructure("natural transformations between modules of different shape");
    if (f.ctx().is_linear())
        return linear_space(f, g);
    SetSearch search(f, g, cap);
    search.run(0);
    search.space.size = search.space.elements.size();
    return std::move(search.space);
}

std::vector<VNat> generate_nat(const Module& f, const Module& g, std::uint64_t seed, std::size_t samples)
{
    auto space = nat_space(f, g);
    if (space.elements.empty() && f.ctx().is_set())
        throw EmptySolution("no natural transformation exists");
    std::vector<VNat> out;
    if (f == g)
        out.push_back(identity_nat(f));
    for (const auto& e : space.elements)
        if (out.empty() || !(e == out.front()))
            out.push_back(e);
    if (f.ctx().is_linear() && space.size > 0) {
        std::mt19937_64 rng(seed);
        const auto& k = f.ctx().field();
        for (std::size_t s = 0; s < samples; ++s) {
            std::vector<VMap> cs;
            for (std::size_t i = 0; i < f.count(); ++i)
                cs.push_back(zero_map(f.ctx(), f.value_at(i), g.value_at(i)));
            for (std::size_t j = 0; j < space.size; ++j) {
                Scalar c = k.from_int(static_cast<long>(rng() % 5) - 2);
                if (sgn(c) == 0)
                    continue;
                for (std::size_t i = 0; i < f.count(); ++i)
                    cs[i] = add(cs[i], scale(c, space.elements[j].component(i)));
            }
            out.emplace_back(f, g, std::move(cs));
        }
    }
    return out;
}

} // namespace kanex
