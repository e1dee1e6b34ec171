#include "kanex/vbase.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kanex {

namespace {

constexpr std::size_t kMaxEnumerated = std::size_t{1} << 22;

void require_same_ctx(const BaseCtx& a, const BaseCtx& b, const char* what)
{
    if (!(a == b))
        throw ContextMismatch(std::string(what) + ": maps live over " + a.name() + " and " + b.name());
}

std::size_t checked_mul(std::size_t a, std::size_t b)
{
    if (a != 0 && b > kMaxEnumerated / a)
        throw SizeLimitExceeded("object too large to enumerate");
    return a * b;
}

std::size_t checked_pow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

// Smallest-representative union-find used for FinSet quotients.
class DisjointSet
{
public:
    explicit DisjointSet(std::size_t n) : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

std::string BaseCtx::name() const
{
    return is_set() ? "FinSet" : "FinVect/" + field_.name();
}

VMap VMap::from_table(const BaseCtx& ctx, VObj cod, Table table)
{
    if (!ctx.is_set())
        throw ContextMismatch("function tables are FinSet data");
    for (auto v : table)
        if (v >= cod.size)
            throw BoundaryMismatch("table entry " + std::to_string(v) + " outside codomain of size " +
                                   std::to_string(cod.size));
    VObj dom{table.size()};
    return VMap(ctx, dom, cod, std::move(table));
}

VMap VMap::from_matrix(const BaseCtx& ctx, Matrix m)
{
    if (!ctx.is_linear())
        throw ContextMismatch("matrices are FinVect data");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!ctx.field().is_canonical(m(i, j)))
                m(i, j) = ctx.field().canonical(m(i, j));
    VObj dom{m.cols()}, cod{m.rows()};
    return VMap(ctx, dom, cod, std::move(m));
}

const VMap::Table& VMap::table() const
{
    if (auto* t = std::get_if<Table>(&data_))
        return *t;
    throw ContextMismatch("table() on a FinVect map");
}

const Matrix& VMap::matrix() const
{
    if (auto* m = std::get_if<Matrix>(&data_))
        return *m;
    throw ContextMismatch("matrix() on a FinSet map");
}

// --- category structure -----------------------------------------------------

VMap identity(const BaseCtx& ctx, VObj x)
{
    if (ctx.is_set()) {
        VMap::Table t(x.size);
        std::iota(t.begin(), t.end(), std::size_t{0});
        return VMap::from_table(ctx, x, std::move(t));
    }
    return VMap::from_matrix(ctx, Matrix::identity(x.size));
}

VMap compose(const VMap& g, const VMap& f)
{
    require_same_ctx(g.ctx(), f.ctx(), "compose");
    if (f.cod() != g.dom())
        throw BoundaryMismatch("compose: codomain " + std::to_string(f.cod().size) + " vs domain " +
                               std::to_string(g.dom().size));
    const auto& ctx = f.ctx();
    if (ctx.is_set()) {
        const auto& ft = f.table();
        const auto& gt = g.table();
        VMap::Table t(ft.size());
        for (std::size_t i = 0; i < ft.size(); ++i)
            t[i] = gt[ft[i]];
        return VMap::from_table(ctx, g.cod(), std::move(t));
    }
    return VMap::from_matrix(ctx, multiply(ctx.field(), g.matrix(), f.matrix()));
}

VMap compose_all(std::initializer_list<VMap> fs)
{
    if (fs.size() == 0)
        throw BoundaryMismatch("compose_all of nothing");
    auto it = std::rbegin(fs);
    VMap acc = *it;
    for (++it; it != std::rend(fs); ++it)
        acc = compose(*it, acc);
    return acc;
}

// --- monoidal structure -----------------------------------------------------

VObj unit_obj()
{
    return VObj{1};
}

VObj tensor(VObj x, VObj y)
{
    return VObj{x.size * y.size};
}

VObj tensor_all(const std::vector<VObj>& xs)
{
    VObj r = unit_obj();
    for (auto x : xs)
        r = tensor(r, x);
    return r;
}

VMap tensor(const VMap& f, const VMap& g)
{
    require_same_ctx(f.ctx(), g.ctx(), "tensor");
    const auto& ctx = f.ctx();
    VObj cod = tensor(f.cod(), g.cod());
    if (ctx.is_set()) {
        const auto& ft = f.table();
        const auto& gt = g.table();
        VMap::Table t(ft.size() * gt.size());
        for (std::size_t x = 0; x < ft.size(); ++x)
            for (std::size_t y = 0; y < gt.size(); ++y)
                t[x * gt.size() + y] = ft[x] * g.cod().size + gt[y];
        return VMap::from_table(ctx, cod, std::move(t));
    }
    return VMap::from_matrix(ctx, kronecker(ctx.field(), f.matrix(), g.matrix()));
}

VMap tensor_all(const std::vector<VMap>& fs)
{
    if (fs.empty())
        throw BoundaryMismatch("tensor_all of nothing");
    VMap r = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        r = tensor(r, fs[i]);
    return r;
}

namespace {

// Map given by an index permutation src -> dst (dst[i] is the image of i).
VMap permutation_map(const BaseCtx& ctx, VObj dom, const std::vector<std::size_t>& dst)
{
    if (ctx.is_set())
        return VMap::from_table(ctx, dom, dst);
    Matrix m(dom.size, dom.size);
    for (std::size_t i = 0; i < dst.size(); ++i)
        m(dst[i], i) = 1;
    return VMap::from_matrix(ctx, std::move(m));
}

} // namespace

VMap permute_factors(const BaseCtx& ctx, const std::vector<VObj>& factors, const std::vector<std::size_t>& perm)
{
    const std::size_t k = factors.size();
    if (perm.size() != k)
        throw BoundaryMismatch("permute_factors: permutation length");
    {
        auto sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < k; ++i)
            if (sorted[i] != i)
                throw BoundaryMismatch("permute_factors: not a permutation");
    }
    VObj total = tensor_all(factors);
    std::vector<VObj> out_factors(k);
    for (std::size_t i = 0; i < k; ++i)
        out_factors[i] = factors[perm[i]];
    std::vector<std::size_t> dst(total.size);
    std::vector<std::size_t> digits(k);
    for (std::size_t idx = 0; idx < total.size; ++idx) {
        std::size_t r = idx;
        for (std::size_t f = k; f-- > 0;) {
            digits[f] = r % factors[f].size;
            r /= factors[f].size;
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < k; ++i)
            out = out * out_factors[i].size + digits[perm[i]];
        dst[idx] = out;
    }
    return permutation_map(ctx, total, dst);
}

VMap symmetry(const BaseCtx& ctx, VObj x, VObj y)
{
    return permute_factors(ctx, {x, y}, {1, 0});
}

VMap associator(const BaseCtx& ctx, VObj x, VObj y, VObj z)
{
    return identity(ctx, tensor_all({x, y, z}));
}

VMap left_unitor(const BaseCtx& ctx, VObj x)
{
    return identity(ctx, x);
}

VMap right_unitor(const BaseCtx& ctx, VObj x)
{
    return identity(ctx, x);
}

// --- closed structure -------------------------------------------------------

VObj internal_hom(const BaseCtx& ctx, VObj x, VObj y)
{
    if (ctx.is_set())
        return VObj{checked_pow(y.size, x.size)};
    return VObj{x.size * y.size};
}

namespace {

std::size_t encode_table(const VMap::Table& t, std::size_t cod)
{
    std::size_t idx = 0;
    for (auto v : t)
        idx = idx * cod + v;
    return idx;
}

VMap::Table decode_table(std::size_t idx, std::size_t dom, std::size_t cod)
{
    VMap::Table t(dom);
    for (std::size_t x = dom; x-- > 0;) {
        t[x] = idx % cod;
        idx /= cod;
    }
    return t;
}

} // namespace

VMap name(const VMap& f)
{
    const auto& ctx = f.ctx();
    VObj hom = internal_hom(ctx, f.dom(), f.cod());
    if (ctx.is_set())
        return VMap::from_table(ctx, hom, {encode_table(f.table(), f.cod().size)});
    Matrix v(hom.size, 1);
    const auto& m = f.matrix();
    for (std::size_t x = 0; x < f.dom().size; ++x)
        for (std::size_t y = 0; y < f.cod().size; ++y)
            v(x * f.cod().size + y, 0) = m(y, x);
    return VMap::from_matrix(ctx, std::move(v));
}

VMap unname(const VMap& e, VObj x, VObj y)
{
    const auto& ctx = e.ctx();
    if (e.dom() != unit_obj() || e.cod() != internal_hom(ctx, x, y))
        throw BoundaryMismatch("unname: not an element of [X, Y]");
    if (ctx.is_set())
        return VMap::from_table(ctx, y, decode_table(e.table()[0], x.size, y.size));
    Matrix m(y.size, x.size);
    const auto& v = e.matrix();
    for (std::size_t i = 0; i < x.size; ++i)
        for (std::size_t j = 0; j < y.size; ++j)
            m(j, i) = v(i * y.size + j, 0);
    return VMap::from_matrix(ctx, std::move(m));
}

VMap curry(const VMap& f, VObj z, VObj x)
{
    const auto& ctx = f.ctx();
    if (f.dom() != tensor(z, x))
        throw BoundaryMismatch("curry: domain is not Z (x) X");
    VObj y = f.cod();
    VObj hom = internal_hom(ctx, x, y);
    if (ctx.is_set()) {
        const auto& ft = f.table();
        VMap::Table t(z.size);
        for (std::size_t i = 0; i < z.size; ++i) {
            VMap::Table row(ft.begin() + static_cast<std::ptrdiff_t>(i * x.size),
                            ft.begin() + static_cast<std::ptrdiff_t>((i + 1) * x.size));
            t[i] = encode_table(row, y.size);
        }
        return VMap::from_table(ctx, hom, std::move(t));
    }
    const auto& fm = f.matrix();
    Matrix m(hom.size, z.size);
    for (std::size_t i = 0; i < z.size; ++i)
        for (std::size_t a = 0; a < x.size; ++a)
            for (std::size_t b = 0; b < y.size; ++b)
                m(a * y.size + b, i) = fm(b, i * x.size + a);
    return VMap::from_matrix(ctx, std::move(m));
}

VMap uncurry(const VMap& h, VObj x, VObj y)
{
    const auto& ctx = h.ctx();
    if (h.cod() != internal_hom(ctx, x, y))
        throw BoundaryMismatch("uncurry: codomain is not [X, Y]");
    VObj z = h.dom();
    if (ctx.is_set()) {
        VMap::Table t(z.size * x.size);
        for (std::size_t i = 0; i < z.size; ++i) {
            auto row = decode_table(h.table()[i], x.size, y.size);
            for (std::size_t a = 0; a < x.size; ++a)
                t[i * x.size + a] = row[a];
        }
        return VMap::from_table(ctx, y, std::move(t));
    }
    const auto& hm = h.matrix();
    Matrix m(y.size, z.size * x.size);
    for (std::size_t i = 0; i < z.size; ++i)
        for (std::size_t a = 0; a < x.size; ++a)
            for (std::size_t b = 0; b < y.size; ++b)
                m(b, i * x.size + a) = hm(a * y.size + b, i);
    return VMap::from_matrix(ctx, std::move(m));
}

VMap eval(const BaseCtx& ctx, VObj x, VObj y)
{
    return uncurry(identity(ctx, internal_hom(ctx, x, y)), x, y);
}

// --- elements ---------------------------------------------------------------

VMap element(const BaseCtx& ctx, VObj x, std::size_t i)
{
    if (i >= x.size)
        throw BoundaryMismatch("element index out of range");
    if (ctx.is_set())
        return VMap::from_table(ctx, x, {i});
    Matrix m(x.size, 1);
    m(i, 0) = 1;
    return VMap::from_matrix(ctx, std::move(m));
}

VMap tabulate(const BaseCtx& ctx, VObj dom, VObj cod, const std::function<VMap(const VMap&)>& on_element)
{
    if (ctx.is_set()) {
        VMap::Table t(dom.size);
        for (std::size_t i = 0; i < dom.size; ++i) {
            VMap v = on_element(element(ctx, dom, i));
            if (v.dom() != unit_obj() || v.cod() != cod)
                throw BoundaryMismatch("tabulate: value is not an element of the codomain");
            t[i] = v.table()[0];
        }
        return VMap::from_table(ctx, cod, std::move(t));
    }
    Matrix m(cod.size, dom.size);
    for (std::size_t i = 0; i < dom.size; ++i) {
        VMap v = on_element(element(ctx, dom, i));
        if (v.dom() != unit_obj() || v.cod() != cod)
            throw BoundaryMismatch("tabulate: value is not an element of the codomain");
        const auto& c = v.matrix();
        for (std::size_t r = 0; r < cod.size; ++r)
            m(r, i) = c(r, 0);
    }
    return VMap::from_matrix(ctx, std::move(m));
}

// --- linear structure -------------------------------------------------------

VMap zero_map(const BaseCtx& ctx, VObj x, VObj y)
{
    if (ctx.is_set()) {
        if (x.size != 0)
            throw ContextMismatch("zero_map: FinSet has no zero maps out of a nonempty set");
        return VMap::from_table(ctx, y, {});
    }
    return VMap::from_matrix(ctx, Matrix(y.size, x.size));
}

VMap add(const VMap& f, const VMap& g)
{
    require_same_ctx(f.ctx(), g.ctx(), "add");
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw BoundaryMismatch("add: maps are not parallel");
    return VMap::from_matrix(f.ctx(), add(f.ctx().field(), f.matrix(), g.matrix()));
}

VMap subtract(const VMap& f, const VMap& g)
{
    require_same_ctx(f.ctx(), g.ctx(), "subtract");
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw BoundaryMismatch("subtract: maps are not parallel");
    return VMap::from_matrix(f.ctx(), subtract(f.ctx().field(), f.matrix(), g.matrix()));
}

VMap scale(const Scalar& c, const VMap& f)
{
    const auto& k = f.ctx().field();
    return VMap::from_matrix(f.ctx(), scale(k, k.canonical(c), f.matrix()));
}

// --- finite (co)limits ------------------------------------------------------

namespace {

void require_parallel(const VMap& f, const VMap& g, const char* what)
{
    require_same_ctx(f.ctx(), g.ctx(), what);
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw BoundaryMismatch(std::string(what) + ": maps are not parallel");
}

std::vector<std::size_t> offsets_of(const std::vector<VObj>& xs)
{
    std::vector<std::size_t> off(xs.size() + 1, 0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        off[i + 1] = off[i] + xs[i].size;
    return off;
}

} // namespace

VMap copair(const BaseCtx& ctx, const std::vector<VMap>& hs, VObj z)
{
    std::size_t total = 0;
    for (const auto& h : hs) {
        require_same_ctx(ctx, h.ctx(), "copair");
        if (h.cod() != z)
            throw IncompatibleCandidate("copair: leg with wrong codomain");
        total += h.dom().size;
    }
    if (ctx.is_set()) {
        VMap::Table t;
        t.reserve(total);
        for (const auto& h : hs)
            t.insert(t.end(), h.table().begin(), h.table().end());
        return VMap::from_table(ctx, z, std::move(t));
    }
    Matrix m(z.size, total);
    std::size_t col = 0;
    for (const auto& h : hs) {
        const auto& hm = h.matrix();
        for (std::size_t j = 0; j < hm.cols(); ++j, ++col)
            for (std::size_t i = 0; i < z.size; ++i)
                m(i, col) = hm(i, j);
    }
    return VMap::from_matrix(ctx, std::move(m));
}

ColimitCocone coproduct(const BaseCtx& ctx, const std::vector<VObj>& xs)
{
    auto off = offsets_of(xs);
    VObj apex{off.back()};
    std::vector<VMap> inj;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ctx.is_set()) {
            VMap::Table t(xs[i].size);
            std::iota(t.begin(), t.end(), off[i]);
            inj.push_back(VMap::from_table(ctx, apex, std::move(t)));
        } else {
            Matrix m(apex.size, xs[i].size);
            for (std::size_t j = 0; j < xs[i].size; ++j)
                m(off[i] + j, j) = 1;
            inj.push_back(VMap::from_matrix(ctx, std::move(m)));
        }
    }
    ColimitCocone c;
    c.apex = apex;
    c.legs = inj;
    c.factorizer = [ctx, xs](const std::vector<VMap>& hs) {
        if (hs.size() != xs.size())
            throw IncompatibleCandidate("coproduct: wrong number of legs");
        if (hs.empty())
            throw IncompatibleCandidate("coproduct: the empty cocone does not determine a codomain");
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (hs[i].dom() != xs[i])
                throw IncompatibleCandidate("coproduct: leg with wrong domain");
        return copair(ctx, hs, hs.front().cod());
    };
    return c;
}

namespace {

// Factorization through a coequalizer with known section: h' = h s, then
// h' q = h is re-verified.
VMap factor_through_split_quotient(const VMap& f, const VMap& g, const VMap& q, const VMap& s, const VMap& h)
{
    if (h.dom() != q.dom())
        throw IncompatibleCandidate("coequalizer: candidate has the wrong domain");
    if (!(compose(h, f) == compose(h, g)))
        throw IncompatibleCandidate("coequalizer: candidate does not coequalize the pair");
    VMap hp = compose(h, s);
    if (!(compose(hp, q) == h))
        throw IncompatibleCandidate("coequalizer: induced map fails h' q = h");
    return hp;
}

ColimitCocone make_coequalizer(const VMap& f, const VMap& g, const VMap& q, const VMap& s)
{
    ColimitCocone c;
    c.apex = q.cod();
    c.legs = {q};
    c.diagram = {f, g};
    c.section = s;
    c.factorizer = [f, g, q, s](const std::vector<VMap>& hs) {
        if (hs.size() != 1)
            throw IncompatibleCandidate("coequalizer: expects a single leg");
        return factor_through_split_quotient(f, g, q, s, hs[0]);
    };
    return c;
}

} // namespace

ColimitCocone coequalizer(const VMap& f, const VMap& g)
{
    require_parallel(f, g, "coequalizer");
    const auto& ctx = f.ctx();
    const std::size_t m = f.cod().size;
    if (ctx.is_set()) {
        DisjointSet uf(m);
        for (std::size_t x = 0; x < f.dom().size; ++x)
            uf.unite(f.table()[x], g.table()[x]);
        std::vector<std::size_t> cls(m, m);
        VMap::Table q(m), rep;
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t r = uf.find(y);
            if (cls[r] == m) {
                cls[r] = rep.size();
                rep.push_back(y);
            }
            q[y] = cls[r];
        }
        VObj apex{rep.size()};
        return make_coequalizer(f, g, VMap::from_table(ctx, apex, std::move(q)),
                                VMap::from_table(ctx, f.cod(), std::move(rep)));
    }
    const auto& k = ctx.field();
    Matrix d = subtract(k, f.matrix(), g.matrix());
    Echelon e = rref(k, transpose(d));
    std::vector<bool> is_pivot(m, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < m; ++j)
        if (!is_pivot[j])
            complement.push_back(j);
    Matrix q(complement.size(), m), s(m, complement.size());
    for (std::size_t r = 0; r < complement.size(); ++r) {
        std::size_t j = complement[r];
        q(r, j) = 1;
        s(j, r) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (sgn(e.reduced(i, j)) != 0)
                q(r, e.pivots[i]) = k.neg(e.reduced(i, j));
    }
    return make_coequalizer(f, g, VMap::from_matrix(ctx, std::move(q)), VMap::from_matrix(ctx, std::move(s)));
}

ColimitCocone tensor_left(VObj x, const ColimitCocone& coeq)
{
    if (coeq.diagram.size() != 2 || !coeq.section || coeq.legs.size() != 1)
        throw BoundaryMismatch("tensor_left: not a coequalizer cocone");
    const auto& ctx = coeq.legs[0].ctx();
    VMap id = identity(ctx, x);
    return make_coequalizer(tensor(id, coeq.diagram[0]), tensor(id, coeq.diagram[1]), tensor(id, coeq.legs[0]),
                            tensor(id, *coeq.section));
}

ColimitCocone pushout(const VMap& f, const VMap& g)
{
    require_same_ctx(f.ctx(), g.ctx(), "pushout");
    if (f.dom() != g.dom())
        throw BoundaryMismatch("pushout: maps do not share a domain");
    const auto& ctx = f.ctx();
    auto sum = coproduct(ctx, {f.cod(), g.cod()});
    auto coeq = coequalizer(compose(sum.legs[0], f), compose(sum.legs[1], g));
    ColimitCocone c;
    c.apex = coeq.apex;
    c.legs = {compose(coeq.legs[0], sum.legs[0]), compose(coeq.legs[0], sum.legs[1])};
    c.diagram = {f, g};
    c.factorizer = [ctx, f, g, sum, coeq](const std::vector<VMap>& hs) {
        if (hs.size() != 2)
            throw IncompatibleCandidate("pushout: expects two legs");
        if (!(compose(hs[0], f) == compose(hs[1], g)))
            throw IncompatibleCandidate("pushout: legs do not agree on the span");
        return coeq.factor({sum.factor(hs)});
    };
    return c;
}

VMap pair(const BaseCtx& ctx, const std::vector<VMap>& hs, VObj w)
{
    std::vector<VObj> ys;
    for (const auto& h : hs) {
        require_same_ctx(ctx, h.ctx(), "pair");
        if (h.dom() != w)
            throw IncompatibleCandidate("pair: leg with wrong domain");
        ys.push_back(h.cod());
    }
    if (ctx.is_set()) {
        VObj apex{1};
        for (auto y : ys)
            apex = VObj{checked_mul(apex.size, y.size)};
        VMap::Table t(w.size);
        for (std::size_t i = 0; i < w.size; ++i) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < hs.size(); ++j)
                idx = idx * ys[j].size + hs[j].table()[i];
            t[i] = idx;
        }
        return VMap::from_table(ctx, apex, std::move(t));
    }
    auto off = offsets_of(ys);
    Matrix m(off.back(), w.size);
    for (std::size_t j = 0; j < hs.size(); ++j) {
        const auto& hm = hs[j].matrix();
        for (std::size_t r = 0; r < hm.rows(); ++r)
            for (std::size_t c = 0; c < w.size; ++c)
                m(off[j] + r, c) = hm(r, c);
    }
    return VMap::from_matrix(ctx, std::move(m));
}

LimitCone product(const BaseCtx& ctx, const std::vector<VObj>& xs)
{
    LimitCone c;
    if (ctx.is_set()) {
        std::size_t total = 1;
        for (auto x : xs)
            total = checked_mul(total, x.size);
        c.apex = VObj{total};
        // stride of factor i = product of sizes after i
        std::vector<std::size_t> stride(xs.size(), 1);
        for (std::size_t i = xs.size(); i-- > 1;)
            stride[i - 1] = stride[i] * xs[i].size;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            VMap::Table t(total);
            for (std::size_t idx = 0; idx < total; ++idx)
                t[idx] = (idx / stride[i]) % xs[i].size;
            c.legs.push_back(VMap::from_table(ctx, xs[i], std::move(t)));
        }
    } else {
        auto off = offsets_of(xs);
        c.apex = VObj{off.back()};
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Matrix m(xs[i].size, off.back());
            for (std::size_t j = 0; j < xs[i].size; ++j)
                m(j, off[i] + j) = 1;
            c.legs.push_back(VMap::from_matrix(ctx, std::move(m)));
        }
    }
    c.factorizer = [ctx, xs](const std::vector<VMap>& hs) {
        if (hs.size() != xs.size())
            throw IncompatibleCandidate("product: wrong number of legs");
        if (hs.empty())
            throw IncompatibleCandidate("product: the empty cone does not determine a domain");
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (hs[i].cod() != xs[i])
                throw IncompatibleCandidate("product: leg with wrong codomain");
        return pair(ctx, hs, hs.front().dom());
    };
    return c;
}

LimitCone equalizer(const VMap& f, const VMap& g)
{
    require_parallel(f, g, "equalizer");
    const auto& ctx = f.ctx();
    LimitCone c;
    c.diagram = {f, g};
    if (ctx.is_set()) {
        VMap::Table incl;
        std::vector<std::size_t> position(f.dom().size, f.dom().size);
        for (std::size_t x = 0; x < f.dom().size; ++x)
            if (f.table()[x] == g.table()[x]) {
                position[x] = incl.size();
                incl.push_back(x);
            }
        c.apex = VObj{incl.size()};
        c.legs = {VMap::from_table(ctx, f.dom(), std::move(incl))};
        VObj apex = c.apex;
        c.factorizer = [ctx, f, g, position, apex](const std::vector<VMap>& hs) {
            if (hs.size() != 1 || hs[0].cod() != f.dom())
                throw IncompatibleCandidate("equalizer: expects one leg into the domain");
            if (!(compose(f, hs[0]) == compose(g, hs[0])))
                throw IncompatibleCandidate("equalizer: candidate does not equalize the pair");
            VMap::Table t;
            for (auto v : hs[0].table())
                t.push_back(position[v]);
            return VMap::from_table(ctx, apex, std::move(t));
        };
        return c;
    }
    const auto& k = ctx.field();
    Matrix d = subtract(k, f.matrix(), g.matrix());
    VMap incl = VMap::from_matrix(ctx, nullspace(k, d));
    c.apex = incl.dom();
    c.legs = {incl};
    c.factorizer = [f, g, incl](const std::vector<VMap>& hs) {
        if (hs.size() != 1 || hs[0].cod() != f.dom())
            throw IncompatibleCandidate("equalizer: expects one leg into the domain");
        if (!(compose(f, hs[0]) == compose(g, hs[0])))
            throw IncompatibleCandidate("equalizer: candidate does not equalize the pair");
        auto x = solve(incl.ctx().field(), incl.matrix(), hs[0].matrix());
        if (!x)
            throw IncompatibleCandidate("equalizer: candidate outside the kernel");
        return VMap::from_matrix(incl.ctx(), std::move(*x));
    };
    return c;
}

LimitCone pullback(const VMap& f, const VMap& g)
{
    require_same_ctx(f.ctx(), g.ctx(), "pullback");
    if (f.cod() != g.cod())
        throw BoundaryMismatch("pullback: maps do not share a codomain");
    const auto& ctx = f.ctx();
    auto prod = product(ctx, {f.dom(), g.dom()});
    auto eq = equalizer(compose(f, prod.legs[0]), compose(g, prod.legs[1]));
    LimitCone c;
    c.apex = eq.apex;
    c.legs = {compose(prod.legs[0], eq.legs[0]), compose(prod.legs[1], eq.legs[0])};
    c.diagram = {f, g};
    c.factorizer = [f, g, prod, eq](const std::vector<VMap>& hs) {
        if (hs.size() != 2)
            throw IncompatibleCandidate("pullback: expects two legs");
        if (!(compose(f, hs[0]) == compose(g, hs[1])))
            throw IncompatibleCandidate("pullback: legs do not agree on the cospan");
        return eq.factor({prod.factor(hs)});
    };
    return c;
}

VMap factor_universal(const ColimitCocone& cocone, const std::vector<VMap>& candidate)
{
    return cocone.factor(candidate);
}

VMap factor_universal(const LimitCone& cone, const std::vector<VMap>& candidate)
{
    return cone.factor(candidate);
}

VMap direct_sum(const BaseCtx& ctx, const std::vector<VMap>& fs)
{
    std::vector<VObj> doms, cods;
    for (const auto& f : fs) {
        doms.push_back(f.dom());
        cods.push_back(f.cod());
    }
    auto target = coproduct(ctx, cods);
    std::vector<VMap> legs;
    for (std::size_t i = 0; i < fs.size(); ++i)
        legs.push_back(compose(target.legs[i], fs[i]));
    return copair(ctx, legs, target.apex);
}

VMap distribute_left(const BaseCtx& ctx, VObj x, const std::vector<VObj>& ys)
{
    auto off_in = offsets_of(ys);
    std::vector<std::size_t> off_out(ys.size() + 1, 0);
    for (std::size_t i = 0; i < ys.size(); ++i)
        off_out[i + 1] = off_out[i] + x.size * ys[i].size;
    std::vector<std::size_t> dst(x.size * off_in.back());
    for (std::size_t a = 0; a < x.size; ++a)
        for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t b = 0; b < ys[i].size; ++b)
                dst[a * off_in.back() + off_in[i] + b] = off_out[i] + a * ys[i].size + b;
    return permutation_map(ctx, VObj{dst.size()}, dst);
}

// --- classification ---------------------------------------------------------

namespace {

MapClass classify_basic(const VMap& m)
{
    MapClass c;
    const auto& ctx = m.ctx();
    const std::size_t n = m.dom().size, r = m.cod().size;
    if (ctx.is_set()) {
        const auto& t = m.table();
        std::vector<std::size_t> first(r, n);
        bool injective = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (first[t[x]] != n)
                injective = false;
            else
                first[t[x]] = x;
        }
        bool surjective = std::none_of(first.begin(), first.end(), [n](std::size_t v) { return v == n; });
        c.mono = injective;
        c.epi = surjective;
        c.iso = injective && surjective;
        if (surjective) {
            c.split_epi = true;
            c.section = VMap::from_table(ctx, m.dom(), first);
        }
        if (injective && (n > 0 || r == 0)) {
            c.split_mono = true;
            VMap::Table back(r, 0);
            for (std::size_t y = 0; y < r; ++y)
                if (first[y] != n)
                    back[y] = first[y];
            c.retraction = VMap::from_table(ctx, m.dom(), std::move(back));
        }
        if (c.iso)
            c.inverse = c.section;
        return c;
    }
    const auto& k = ctx.field();
    std::size_t rk = rank(k, m.matrix());
    c.mono = rk == n;
    c.epi = rk == r;
    c.iso = c.mono && c.epi;
    if (c.epi) {
        c.split_epi = true;
        c.section = VMap::from_matrix(ctx, *solve(k, m.matrix(), Matrix::identity(r)));
    }
    if (c.mono) {
        c.split_mono = true;
        c.retraction = VMap::from_matrix(ctx, transpose(*solve(k, transpose(m.matrix()), Matrix::identity(n))));
    }
    if (c.iso)
        c.inverse = c.section;
    return c;
}

} // namespace

MapClass classify_map(const VMap& m)
{
    MapClass c = classify_basic(m);
    auto cokernel_pair = pushout(m, m);
    VMap u = cokernel_pair.legs[0];
    VMap v = cokernel_pair.legs[1];
    auto eq = equalizer(u, v);
    VMap k = eq.factor({m});
    c.regular_mono = classify_basic(k).iso;
    c.witness_u = u;
    c.witness_v = v;
    return c;
}

} // namespace kanex
