#include "kanex/certify.hpp"

namespace kanex {

namespace {

bool averaging_available(const VCat& a, const std::optional<FiniteMonoid>& g)
{
    if (!g)
        return false;
    const auto& k = a.ctx().field();
    return k.is_rational() || g->size() % k.characteristic() != 0;
}

/// apex -> (+)_a S(a,a), [s] |-> (1/|G|) sum_g g.s.g^-1
VMap averaging_section(const CoendResult& co, const FiniteMonoid& g)
{
    const auto& s = co.module;
    const auto& a = *s.cat();
    const auto& ctx = a.ctx();
    auto inv = inverses(g);
    VObj h = a.hom(0, 0), v = s.value({0, 0});
    VMap sum = zero_map(ctx, v, v);
    for (std::size_t x = 0; x < g.size(); ++x)
        sum = add(sum, compose(s.joint({0, 0}, {0, 0}),
                               tensor_all({element(ctx, h, x), element(ctx, h, inv[x]), identity(ctx, v)})));
    auto avg = scale(ctx.field().inv(ctx.field().from_int(static_cast<long>(g.size()))), sum);
    return compose(co.diagonal.legs[0], co.factor({avg}));
}

/// The map induced on coends by phi : S -> S'.
VMap coend_map(const CoendResult& from, const CoendResult& to, const VNat& phi)
{
    std::vector<VMap> h;
    for (std::size_t a = 0; a < from.cat->size(); ++a)
        h.push_back(compose(to.cowedge[a], phi.component({a, a})));
    return from.factor(h);
}

VMap diagonal_sum(const VNat& phi)
{
    std::vector<VMap> d;
    for (std::size_t a = 0; a < phi.source().cat()->size(); ++a)
        d.push_back(phi.component({a, a}));
    return direct_sum(phi.source().ctx(), d);
}

/// Any sigma with q sigma = 1 and sigma c(phi) = (+)phi sigma for the given endomorphisms.
std::optional<Matrix> natural_section(const Field& k, const Matrix& q, const std::vector<std::pair<Matrix, Matrix>>& eqs)
{
    std::size_t qd = q.rows(), d = q.cols();
    std::size_t unknowns = d * qd;
    std::size_t rows = qd * qd + eqs.size() * d * qd;
    Matrix sys(rows, unknowns), rhs(rows, 1);
    std::size_t row = 0;
    for (std::size_t i = 0; i < qd; ++i)
        for (std::size_t j = 0; j < qd; ++j, ++row) {
            for (std::size_t l = 0; l < d; ++l)
                sys(row, l * qd + j) = q(i, l);
            rhs(row, 0) = i == j ? 1 : 0;
        }
    for (const auto& [m, p] : eqs)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < qd; ++j, ++row) {
                for (std::size_t l = 0; l < qd; ++l)
                    sys(row, i * qd + l) = k.add(sys(row, i * qd + l), m(l, j));
                for (std::size_t l = 0; l < d; ++l)
                    sys(row, l * qd + j) = k.sub(sys(row, l * qd + j), p(i, l));
            }
    auto x = solve(k, sys, rhs);
    if (!x)
        return std::nullopt;
    Matrix sigma(d, qd);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < qd; ++j)
            sigma(i, j) = (*x)(i * qd + j, 0);
    return sigma;
}

std::vector<VNat> sampled_nats(const Module& s, const Module& t, const ProbeConfig& cfg, const std::string& task)
{
    try {
        return generate_nat(s, t, task_seed(cfg.seed, task), cfg.samples);
    } catch (const EmptySolution&) {
        return {};
    }
}

} // namespace

std::optional<FiniteMonoid> group_of(const VCat& a)
{
    if (a.size() != 1 || !a.ctx().is_linear())
        return std::nullopt;
    std::size_t n = a.hom(0, 0).size;
    const auto& k = a.ctx().field();
    auto basis_index = [&](const Matrix& m, std::size_t col) -> std::optional<std::size_t> {
        std::optional<std::size_t> at;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, col) == 0)
                continue;
            if (at || m(i, col) != k.one())
                return std::nullopt;
            at = i;
        }
        return at;
    };
    FiniteMonoid g{"extracted", {}, std::vector<std::size_t>(n * n), 0};
    for (std::size_t i = 0; i < n; ++i)
        g.elements.push_back("g" + std::to_string(i));
    const auto& comp = a.comp(0, 0, 0).matrix();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto i = basis_index(comp, x * n + y);
            if (!i)
                return std::nullopt;
            g.mul[x * n + y] = *i;
        }
    auto u = basis_index(a.ident(0).matrix(), 0);
    if (!u)
        return std::nullopt;
    g.unit = *u;
    try {
        validate_monoid(g);
    } catch (const InvalidStructure&) {
        return std::nullopt;
    }
    if (!is_group(g))
        return std::nullopt;
    return g;
}

std::pair<std::vector<std::string>, std::vector<Bimodule>> bimodule_battery(const CatRef& a, const ProbeConfig& cfg)
{
    auto f = copresheaf_battery(a, cfg, "bimodules").members.front();
    return {{"regular", "tensor0"}, {hom_bimodule(a), external_tensor(corepresentable(a, 0), f)}};
}

Report maschke_split(const CatRef& a, const std::vector<std::string>& names, const std::vector<Bimodule>& bimodules,
                     const ProbeConfig& cfg, const std::string& title)
{
    const auto& ctx = a->ctx();
    Report r;
    r.title = title;
    r.provenance = Json{{"config", cfg.to_json()}, {"bimodules", names}};
    auto g = group_of(*a);
    bool avg = averaging_available(*a, g);
    r.summary["averaging"] = avg ? "available" : "unavailable";
    if (!avg)
        r.add_na("averaging", "averaging section",
                 g ? "|G| is not invertible in " + ctx.field().name() : "not a one-object group algebra");

    std::vector<CoendResult> coends;
    std::vector<VMap> sections;
    for (const auto& s : bimodules)
        coends.push_back(coend(s));
    Json found = Json::object();
    for (std::size_t i = 0; i < bimodules.size(); ++i) {
        const auto& co = coends[i];
        const auto& q = co.quotient.legs[0];
        std::string at = " " + names[i];
        if (avg) {
            auto sigma = averaging_section(co, *g);
            r.add("averaging", "q after sigma is the identity" + at, compose(q, sigma) == identity(ctx, co.apex));
            sections.push_back(sigma);
            continue;
        }
        // exact search, constrained by naturality against sampled endomorphisms
        std::vector<std::pair<Matrix, Matrix>> eqs;
        auto endos = sampled_nats(bimodules[i], bimodules[i], cfg, title + "/endo/" + names[i]);
        for (const auto& phi : endos)
            eqs.emplace_back(coend_map(co, co, phi).matrix(), diagonal_sum(phi).matrix());
        auto plain = solve(ctx.field(), q.matrix(), Matrix::identity(co.apex.size));
        r.add("search", "some section exists" + at, plain.has_value());
        auto nat = natural_section(ctx.field(), q.matrix(), eqs);
        if (nat) {
            auto sigma = VMap::from_matrix(ctx, *nat);
            r.add("search", "found section splits q" + at, compose(q, sigma) == identity(ctx, co.apex));
            found[names[i]] = "natural on sampled maps";
            sections.push_back(sigma);
        } else {
            r.add_na("search", "natural section" + at, "none found");
            found[names[i]] = "none found";
        }
    }
    if (!avg) {
        r.summary["search"] = found;
        return r;
    }
    for (std::size_t i = 0; i < bimodules.size(); ++i)
        for (std::size_t j = 0; j < bimodules.size(); ++j)
            for (const auto& phi :
                 sampled_nats(bimodules[i], bimodules[j], cfg, title + "/nat/" + names[i] + "/" + names[j])) {
                auto lhs = compose(sections[j], coend_map(coends[i], coends[j], phi));
                auto rhs = compose(diagonal_sum(phi), sections[i]);
                r.add("naturality", "sigma natural " + names[i] + " -> " + names[j], lhs == rhs, "",
                      Json{{"lhs", map_to_json(lhs)}, {"rhs", map_to_json(rhs)}});
            }
    return r;
}

Report section4_pipeline(const VFunctor& n, const OpcatStructure& op, const Battery& battery, const ProbeConfig& cfg,
                         const std::string& title)
{
    const auto& a = n.source();
    const auto& c = n.target();
    const auto& ctx = a->ctx();
    Report r;
    r.title = title;
    r.provenance = Json{{"config", cfg.to_json()}, {"battery", battery.spec}};
    r.summary["kind"] = "certified via split coends";
    for (std::size_t x = 0; x < a->size(); ++x)
        for (std::size_t y = 0; y < a->size(); ++y)
            add_regular_mono(r, "hypotheses", "N component regular mono (" + a->name(x) + "," + a->name(y) + ")",
                             n.map(x, y));
    auto g = group_of(*a);
    bool avg = averaging_available(*a, g);
    r.add("hypotheses", "canonical epis split naturally by averaging", avg);
    if (avg)
        for (std::size_t i = 0; i < battery.size(); ++i) {
            const auto& f = battery.members[i];
            auto lf = lan(n, f);
            for (std::size_t b = 0; b < a->size(); ++b) {
                std::string at = " " + battery.names[i] + " at " + a->name(b);
                auto s = external_tensor(corepresentable(a, b), f);
                auto s2 = external_tensor(restrict_along(n, corepresentable(c, n.obj(b))), f);
                std::vector<VMap> comps;
                for (std::size_t k = 0; k < s.count(); ++k) {
                    auto t = s.tuple(k);
                    comps.push_back(tensor(n.map(t[0], b), identity(ctx, f.value(t[1]))));
                }
                VNat phi(s, s2, std::move(comps));
                r.add_laws("unit", "N (x) 1 natural" + at, check_natural(phi));
                auto co = coend(s), co2 = coend(s2);
                auto sigma = averaging_section(co, *g), sigma2 = averaging_section(co2, *g);
                auto induced = coend_map(co, co2, phi);
                auto sum = diagonal_sum(phi);
                r.add("unit", "sections commute with N (x) 1" + at,
                      compose(sigma2, induced) == compose(sum, sigma));
                add_regular_mono(r, "unit", "sum of N (x) 1 regular mono" + at, sum);
                auto coyo = coyoneda_expand(f, b);
                auto unit = compose(induced, coyo.iso);
                r.add("unit", "induced map after coYoneda is the unit" + at, unit == lf.unit.component(b));
                add_regular_mono(r, "unit", "unit regular mono" + at, unit);
            }
        }
    if (!r.passed("hypotheses"))
        r.mark_informational("unit");
    auto own = r.status();
    auto s2 = certify_section2(n, op, battery, cfg, title + " (opcat)");
    r.add("comparison", "agrees with the opcat pathway", own == s2.status(),
          std::string("split ") + to_string(own) + ", opcat " + to_string(s2.status()));
    r.summary["split"] = to_string(own);
    r.summary["opcat"] = to_string(s2.status());
    return r;
}

Report cayley_probe(const TriModule& p, std::size_t unit, const Battery& battery, const ProbeConfig& cfg,
                    const std::string& title)
{
    const auto& a = p.cat();
    const auto& ctx = a->ctx();
    std::size_t n = a->size();
    Report r;
    r.title = title;
    r.provenance = Json{{"config", cfg.to_json()}, {"battery", battery.spec}, {"unit", a->name(unit)}};
    r.summary["kind"] = "certified via retraction";
    r.add_laws("hypotheses", "promonoidal action laws", check_action(p));
    for (std::size_t c = 0; c < n; ++c)
        r.add("hypotheses", "P(c,u,c) is a point at " + a->name(c), p.value({c, unit, c}).size == 1);
    if (!r.passed("hypotheses"))
        return r;

    std::vector<CayleyResult> cs;
    std::vector<std::vector<VMap>> phis;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto& f = battery.members[i];
        cs.push_back(cayley(p, f));
        phis.emplace_back();
        for (std::size_t c = 0; c < n; ++c) {
            auto phi = compose(cs.back().coends[unit * n + c].cowedge[c],
                               tensor(element(ctx, VObj{1}, 0), identity(ctx, f.value(c))));
            auto cl = classify_map(phi);
            r.add("retraction", "f(c) to Exists_P f(u,c) iso " + battery.names[i] + " at " + a->name(c), cl.iso,
                  "", Json{{"map", map_to_json(phi)}});
            phis.back().push_back(std::move(phi));
        }
    }
    for (std::size_t i = 0; i < battery.size(); ++i)
        for (std::size_t j = 0; j < battery.size(); ++j)
            for (const auto& alpha :
                 sampled_nats(battery.members[i], battery.members[j], cfg,
                              title + "/retraction/" + battery.names[i] + "/" + battery.names[j])) {
                auto m = cayley_map(cs[i], cs[j], alpha);
                for (std::size_t c = 0; c < n; ++c) {
                    auto lhs = compose(m.component({unit, c}), phis[i][c]);
                    auto rhs = compose(phis[j][c], alpha.component(c));
                    r.add("retraction",
                          "retraction natural " + battery.names[i] + " -> " + battery.names[j] + " at " + a->name(c),
                          lhs == rhs, "", Json{{"lhs", map_to_json(lhs)}, {"rhs", map_to_json(rhs)}});
                }
            }
    conservativity_probe(
        r, "probe", battery, [&](std::size_t i, std::size_t j, const VNat& alpha) { return cayley_map(cs[i], cs[j], alpha); },
        cfg, title);
    return r;
}

std::optional<std::vector<std::size_t>> opcat_obstruction(const VCat& a)
{
    // over FinVect the zero map always exists, so emptiness only obstructs in FinSet
    if (!a.ctx().is_set())
        return std::nullopt;
    std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (a.hom(x, y).size > 0 && tensor(a.hom(z, y), a.hom(x, z)).size == 0)
                    return std::vector<std::size_t>{x, y, z};
    return std::nullopt;
}

Report falsify_necessity(const ProbeConfig& cfg)
{
    Report r;
    r.title = "opcat hypothesis is not necessary";
    r.provenance = Json{{"config", cfg.to_json()}};

    auto z2 = cyclic_group(2);
    auto pm = monoid_promonoidal(z2);
    auto obs = opcat_obstruction(*pm.a);
    std::string where;
    if (obs)
        where = "delta at (" + pm.a->name((*obs)[0]) + "," + pm.a->name((*obs)[1]) + "," + pm.a->name((*obs)[2]) +
                ") would map a point to the empty set";
    r.add("witness", "no opcat structure on the 2-object discrete FinSet category", obs.has_value(), where);
    r.summary["obstruction"] = obs ? Json(*obs) : Json();

    auto battery = copresheaf_battery(pm.a, cfg, "falsify/cayley");
    auto cp = cayley_probe(pm.p, z2.unit, battery, cfg, "Cayley functor of Z2 over FinSet");
    r.add("witness", "Cayley functor on the same category is conservative by retraction",
          cp.status() == Status::Certified, to_string(cp.status()));
    r.summary["cayley"] = Json{{"status", to_string(cp.status())}, {"probe", cp.summary["probe"]}};

    const auto k = Field::rationals();
    auto z3 = monoid_algebra_category(cyclic_group(3), k);
    auto s3g = symmetric_group3();
    auto s3 = monoid_algebra_category(s3g, k);
    auto incl = monoid_hom_functor(z3, s3, cyclic_group(3), s3g, {0, 3, 4});
    auto op = group_algebra_frobenius(cyclic_group(3), k);
    auto s2 = certify_section2(incl, op, copresheaf_battery(z3, cfg, "falsify/control"), cfg,
                               "control Q[Z3] in Q[S3]");
    r.add("control", "Q[Z3] in Q[S3] meets the hypotheses", s2.passed("hypotheses"));
    r.add("control", "Q[Z3] in Q[S3] certified", s2.status() == Status::Certified, to_string(s2.status()));
    r.summary["control"] = Json{{"status", to_string(s2.status())}, {"probe", s2.summary["probe"]}};
    return r;
}

} // namespace kanex
