// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kanex/bundle.hpp"
#include "kanex/catalog.hpp"

using namespace kanex;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what)
    {
        ++checks;
        if (!cond) {
            ok = false;
            if (failures.size() < 5)
                failures.push_back(what);
        }
    }
};

const std::uint64_t kSeed = 1;

std::vector<BaseCtx> bases()
{
    return {BaseCtx::finset(), BaseCtx::finvect(Field::rationals()), BaseCtx::finvect(Field::prime(5))};
}

bool jointly_epi(const BaseCtx& ctx, const std::vector<VMap>& legs, VObj apex)
{
    return classify_map(copair(ctx, legs, apex)).epi;
}

bool jointly_mono(const BaseCtx& ctx, const std::vector<VMap>& legs, VObj apex)
{
    return classify_map(pair(ctx, legs, apex)).mono;
}

template <class Cone>
bool rejects(const Cone& c, const std::vector<VMap>& bad)
{
    try {
        c.factor(bad);
    } catch (const IncompatibleCandidate&) {
        return true;
    }
    return false;
}

// --- 1 ----------------------------------------------------------------------

Outcome crit_base_laws()
{
    Outcome o;
    for (const auto& ctx : bases()) {
        std::string tag = ctx.name();
        std::mt19937_64 rng(task_seed(kSeed, "base laws " + tag));
        auto rnd = [&](std::size_t d, std::size_t c) { return random_map(rng, ctx, VObj{d}, VObj{c}); };
        // FinSet has no map from a nonempty set into the empty one
        auto has = [&](std::size_t d, std::size_t c) { return !ctx.is_set() || d == 0 || c > 0; };
        auto id = [&](std::size_t n) { return identity(ctx, VObj{n}); };
        for (std::size_t x = 0; x <= 3; ++x)
            for (std::size_t y = 0; y <= 3; ++y) {
                VObj X{x}, Y{y};
                std::string at = tag + " " + std::to_string(x) + "," + std::to_string(y);

                auto cp = coproduct(ctx, {X, Y});
                o.expect(jointly_epi(ctx, cp.legs, cp.apex), "coproduct legs jointly epi " + at);
                auto pr = product(ctx, {X, Y});
                o.expect(jointly_mono(ctx, pr.legs, pr.apex), "product legs jointly mono " + at);
                for (std::size_t z = 0; z <= 3; ++z) {
                    if (has(x, z) && has(y, z)) {
                        auto h0 = rnd(x, z), h1 = rnd(y, z);
                        auto u = cp.factor({h0, h1});
                        o.expect(compose(u, cp.legs[0]) == h0 && compose(u, cp.legs[1]) == h1,
                                 "coproduct factor " + at);
                    }
                    if (has(z, x) && has(z, y)) {
                        auto k0 = rnd(z, x), k1 = rnd(z, y);
                        auto v = pr.factor({k0, k1});
                        o.expect(compose(pr.legs[0], v) == k0 && compose(pr.legs[1], v) == k1, "product factor " + at);
                    }
                }

                if (!has(x, y))
                    continue;
                // parallel pairs X => Y
                auto f = rnd(x, y), g = rnd(x, y);
                auto ce = coequalizer(f, g);
                const auto& q = ce.legs[0];
                o.expect(compose(q, f) == compose(q, g), "coequalizer coequalizes " + at);
                o.expect(classify_map(q).epi, "coequalizer epi " + at);
                auto eq = equalizer(f, g);
                const auto& e = eq.legs[0];
                o.expect(compose(f, e) == compose(g, e), "equalizer equalizes " + at);
                o.expect(classify_map(e).mono, "equalizer mono " + at);
                for (std::size_t z = 0; z <= 3; ++z) {
                    if (has(ce.apex.size, z)) {
                        auto h = compose(rnd(ce.apex.size, z), q);
                        o.expect(compose(ce.factor({h}), q) == h, "coequalizer factor " + at);
                    }
                    if (has(z, eq.apex.size)) {
                        auto k = compose(e, rnd(z, eq.apex.size));
                        o.expect(compose(e, eq.factor({k})) == k, "equalizer factor " + at);
                    }
                    if (has(y, z)) {
                        auto bad = rnd(y, z);
                        if (compose(bad, f) != compose(bad, g))
                            o.expect(rejects(ce, {bad}), "coequalizer rejects " + at);
                    }
                    if (has(z, x)) {
                        auto bad2 = rnd(z, x);
                        if (compose(f, bad2) != compose(g, bad2))
                            o.expect(rejects(eq, {bad2}), "equalizer rejects " + at);
                    }
                }

                // span Y <- W -> X and cospan X -> W <- Y with W = min(x, y) + 1
                std::size_t w = std::min(x, y) + 1;
                if (x > 0 && y > 0) {
                    auto s0 = rnd(w, y), s1 = rnd(w, x);
                    auto po = pushout(s0, s1);
                    o.expect(compose(po.legs[0], s0) == compose(po.legs[1], s1), "pushout square " + at);
                    o.expect(jointly_epi(ctx, po.legs, po.apex), "pushout legs jointly epi " + at);
                    auto r = rnd(po.apex.size, 2);
                    auto c0 = compose(r, po.legs[0]), c1 = compose(r, po.legs[1]);
                    auto u = po.factor({c0, c1});
                    o.expect(compose(u, po.legs[0]) == c0 && compose(u, po.legs[1]) == c1, "pushout factor " + at);
                }
                auto t0 = rnd(x, w), t1 = rnd(y, w);
                auto pb = pullback(t0, t1);
                o.expect(compose(t0, pb.legs[0]) == compose(t1, pb.legs[1]), "pullback square " + at);
                o.expect(jointly_mono(ctx, pb.legs, pb.apex), "pullback legs jointly mono " + at);
                if (has(2, pb.apex.size)) {
                    auto r = rnd(2, pb.apex.size);
                    auto d0 = compose(pb.legs[0], r), d1 = compose(pb.legs[1], r);
                    auto v = pb.factor({d0, d1});
                    o.expect(compose(pb.legs[0], v) == d0 && compose(pb.legs[1], v) == d1, "pullback factor " + at);
                }

                for (std::size_t z = 0; z <= 3; ++z) {
                    VObj Z{z};
                    std::string atz = at + "," + std::to_string(z);
                    // curry / uncurry
                    auto fz = rnd(z * x, y);
                    auto c = curry(fz, Z, X);
                    o.expect(uncurry(c, X, Y) == fz, "uncurry after curry " + atz);
                    o.expect(compose(eval(ctx, X, Y), tensor(c, id(x))) == fz, "eval after curry " + atz);
                    auto hom = internal_hom(ctx, X, Y);
                    if (has(z, hom.size)) {
                        auto h = random_map(rng, ctx, Z, hom);
                        o.expect(curry(uncurry(h, X, Y), Z, X) == h, "curry after uncurry " + atz);
                    }

                    // symmetry
                    auto sxy = symmetry(ctx, X, Y);
                    o.expect(compose(symmetry(ctx, Y, X), sxy) == id(x * y), "symmetry involutive " + at);
                    auto lhs = symmetry(ctx, X, tensor(Y, Z));
                    auto rhs = compose(tensor(id(y), symmetry(ctx, X, Z)), tensor(sxy, id(z)));
                    o.expect(lhs == rhs, "hexagon " + atz);
                    if (!has(x, z) || !has(y, x))
                        continue;
                    auto a = rnd(x, z), b = rnd(y, x);
                    o.expect(compose(symmetry(ctx, Z, X), tensor(a, b)) == compose(tensor(b, a), sxy),
                             "symmetry natural " + atz);
                    auto m = rnd(x, z);
                    o.expect(compose(left_unitor(ctx, Z), tensor(id(1), m)) == compose(m, left_unitor(ctx, X)) &&
                                 compose(right_unitor(ctx, Z), tensor(m, id(1))) == compose(m, right_unitor(ctx, X)),
                             "unitors natural " + atz);
                    o.expect(associator(ctx, X, Y, Z) == id(x * y * z), "associator " + atz);
                }
            }
    }
    return o;
}

// --- 2 ----------------------------------------------------------------------

Outcome crit_regular_monos()
{
    Outcome o;
    for (const auto& ctx : bases()) {
        std::string tag = ctx.name();
        std::mt19937_64 rng(task_seed(kSeed, "regular monos " + tag));
        auto mono = [&](std::size_t d, std::size_t extra) { return random_mono(rng, ctx, VObj{d}, VObj{d + extra}); };
        for (int i = 0; i < 100; ++i) {
            auto m = mono(uniform_index(rng, 4), uniform_index(rng, 3));
            auto cls = classify_map(m);
            o.expect(cls.regular_mono && cls.witness_u && verify_regular_mono(m), "classified " + tag);
        }
        for (int i = 0; i < 100; ++i) {
            auto m = mono(uniform_index(rng, 3), uniform_index(rng, 2));
            auto n = random_mono(rng, ctx, m.cod(), VObj{m.cod().size + uniform_index(rng, 2)});
            o.expect(verify_regular_mono(compose(n, m)), "composite " + tag);
        }
        for (int i = 0; i < 100; ++i) {
            auto m = mono(uniform_index(rng, 3), uniform_index(rng, 2));
            VObj x{uniform_index(rng, 4)};
            o.expect(verify_regular_mono(tensor(m, identity(ctx, x))), "tensor " + tag);
        }
    }
    return o;
}

// --- 3 ----------------------------------------------------------------------

struct NamedCat
{
    std::string name;
    CatRef cat;
};

std::vector<NamedCat> shipped_categories()
{
    auto q = Field::rationals();
    auto qv = BaseCtx::finvect(q);
    std::vector<NamedCat> out{{"terminal", terminal_category(qv)},
                              {"Q[Z2]", monoid_algebra_category(cyclic_group(2), q)},
                              {"Q[Z3]", monoid_algebra_category(cyclic_group(3), q)},
                              {"Q[S3]", monoid_algebra_category(symmetric_group3(), q)},
                              {"F3[Z3]", monoid_algebra_category(cyclic_group(3), Field::prime(3))}};
    for (std::size_t n = 1; n <= 3; ++n)
        out.push_back({"indiscrete " + std::to_string(n), indiscrete_category(qv, n)});
    return out;
}

Outcome crit_coyoneda()
{
    Outcome o;
    ProbeConfig cfg;
    cfg.seed = kSeed;
    for (const auto& [name, a] : shipped_categories()) {
        auto battery = copresheaf_battery(a, cfg, "coyoneda " + name);
        for (std::size_t i = 0; i < battery.size(); ++i) {
            const auto& f = battery.members[i];
            for (std::size_t b = 0; b < a->size(); ++b) {
                auto cy = coyoneda_expand(f, b);
                const auto& ctx = a->ctx();
                o.expect(compose(cy.inverse, cy.iso) == identity(ctx, f.value(b)) &&
                             compose(cy.iso, cy.inverse) == identity(ctx, cy.iso.cod()),
                         name + " " + battery.names[i] + " at " + a->name(b));
            }
        }
    }
    return o;
}

// --- 4 ----------------------------------------------------------------------

Outcome crit_frobenius_laws()
{
    Outcome o;
    ProbeConfig cfg;
    cfg.seed = kSeed;
    std::vector<FiniteMonoid> groups{trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group3()};
    for (const auto& k : {Field::rationals(), Field::prime(3), Field::prime(5)})
        for (const auto& g : groups) {
            std::string at = g.name + " over " + k.name();
            auto op = group_algebra_frobenius(g, k);
            o.expect(check_counit(op).lawful(), "counit " + at);
            auto nat = check_delta_naturality(op);
            o.expect(nat.level == NaturalityLevel::FullOpcat, "full opcat " + at);
            auto battery = copresheaf_battery(op.base, cfg, "frobenius " + at);
            for (std::size_t i = 0; i < battery.size(); ++i)
                for (std::size_t b = 0; b < op.base->size(); ++b)
                    o.expect(coretraction_check(op, battery.members[i], b).lawful(),
                             "coretraction " + at + " " + battery.names[i]);
        }
    return o;
}

// --- 5, 6 -------------------------------------------------------------------

struct Instance
{
    std::string name;
    const Bundle* bundle;
    std::string functor;
    std::string opcat;
};

const Bundle& bundle_named(const std::string& name)
{
    static std::map<std::string, Bundle> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, builtin_bundle(name)).first;
    return it->second;
}

// every functor whose source carries an opcat structure in its bundle
std::vector<Instance> shipped_instances()
{
    std::vector<Instance> out;
    for (const auto& bn : builtin_bundle_names()) {
        const auto& b = bundle_named(bn);
        for (const auto& [fname, n] : b.functors) {
            std::string op = "frob_" + b.category_name(n.source());
            if (b.opcats.count(op))
                out.push_back({bn + "/" + fname, &b, fname, op});
        }
    }
    return out;
}

ProbeConfig probe_config()
{
    ProbeConfig cfg;
    cfg.seed = kSeed;
    return cfg;
}

Outcome crit_section2()
{
    Outcome o;
    auto cfg = probe_config();
    std::vector<Instance> cases{{"Q[Z3] in Q[S3]", &bundle_named("rational"), "incl_Z3_S3", "frob_Z3"},
                                {"F3[Z3] in F3[S3]", &bundle_named("prime3"), "incl_Z3_S3", "frob_Z3"},
                                {"indiscrete 2 in 3", &bundle_named("rational"), "incl_Ind2_Ind3", "frob_Ind2"},
                                {"identity on Q[S3]", &bundle_named("rational"), "id_S3", "frob_S3"}};
    std::ostringstream d;
    for (const auto& c : cases) {
        const auto& n = c.bundle->functor(c.functor);
        auto r = certify_section2(n, c.bundle->opcat(c.opcat), copresheaf_battery(n.source(), cfg, "battery"), cfg,
                                  c.functor);
        bool units = r.passed("unit");
        auto non_iso = r.summary["probe"]["non_iso"].get<std::size_t>();
        auto viol = r.summary["probe"]["violations"].get<std::size_t>();
        o.expect(r.status() == Status::Certified, c.name + " " + to_string(r.status()));
        o.expect(units, c.name + " unit components");
        o.expect(non_iso >= 200 && viol == 0, c.name + " probe " + std::to_string(non_iso) + "/" + std::to_string(viol));
        d << c.name << " " << non_iso << "; ";
    }
    o.detail = d.str();
    return o;
}

Outcome crit_section3()
{
    Outcome o;
    auto cfg = probe_config();
    std::ostringstream d;
    for (const auto& c : shipped_instances()) {
        const auto& n = c.bundle->functor(c.functor);
        auto a_op = opposite(n.source());
        auto fam = representable_family(n, a_op);
        std::mt19937_64 rng(task_seed(kSeed, "dagger " + c.name));
        for (std::size_t x : {std::size_t{1}, uniform_index(rng, 4)})
            for (std::size_t p = 0; p < a_op->size(); ++p)
                for (std::size_t q = 0; q < a_op->size(); ++q)
                    o.expect(dagger_check(fam, VObj{x}, p, q).classification.iso, "dagger iso " + c.name);
        auto r = recovery_check(n, c.bundle->opcat(c.opcat), copresheaf_battery(n.source(), cfg, "battery"), cfg,
                                c.functor);
        o.expect(r.passed("recovery"), "verdicts agree " + c.name);
        d << c.name << " " << r.summary["L"].get<std::string>() << "; ";
    }
    const auto& b = bundle_named("rational");
    const auto& n = b.functor("incl_Z3_S3");
    auto a_op = opposite(n.source());
    auto battery = copresheaf_battery(n.source(), cfg, "battery");
    auto z = certify_section3(zero_family(a_op, n.target()), opposite_opcat(b.opcat("frob_Z3"), a_op),
                              flip_battery(battery, a_op), cfg, "zero family");
    o.expect(z.passed("hypotheses"), "zero family hypotheses");
    o.expect(!z.passed("unit") && z.status() == Status::Violation, "zero family detected");
    d << "zero family " << to_string(z.status());
    o.detail = d.str();
    return o;
}

// --- 7 ----------------------------------------------------------------------

Outcome crit_maschke()
{
    Outcome o;
    auto cfg = probe_config();
    const auto& q = bundle_named("rational");
    for (const char* g : {"Z2", "S3"}) {
        const auto& a = q.category(g);
        auto [names, ms] = bimodule_battery(a, cfg);
        auto r = maschke_split(a, names, ms, cfg, g);
        o.expect(r.status() == Status::Certified && r.summary["averaging"] == "available",
                 std::string("averaging over Q[") + g + "]");
    }
    const auto& f2 = bundle_named("prime2").category("Z2");
    auto [names, ms] = bimodule_battery(f2, cfg);
    auto r = maschke_split(f2, names, ms, cfg, "F2[Z2]");
    o.expect(r.summary["averaging"] == "unavailable", "F2[Z2] averaging unavailable");

    const auto& n = q.functor("incl_Z3_S3");
    auto p = section4_pipeline(n, q.opcat("frob_Z3"), copresheaf_battery(n.source(), cfg, "battery"), cfg,
                               "incl_Z3_S3");
    o.expect(p.status() == Status::Certified && p.passed("comparison"), "pipeline reproduces the opcat verdict");
    o.detail = std::string("pipeline ") + to_string(p.status());
    return o;
}

// --- 8 ----------------------------------------------------------------------

Outcome crit_cayley()
{
    Outcome o;
    auto cfg = probe_config();
    const auto& s = bundle_named("sets");
    for (auto [name, unit] : std::vector<std::pair<std::string, std::string>>{{"P_1", "e"}, {"P_Z2", "0"}, {"P_LZ3", "e"}}) {
        const auto& p = s.trimodule(name);
        auto r = cayley_probe(p, p.cat()->index(unit), copresheaf_battery(p.cat(), cfg, "battery"), cfg, name);
        o.expect(r.status() == Status::Certified && r.passed("retraction"), name + " " + to_string(r.status()));
    }
    auto f = falsify_necessity(cfg);
    o.expect(f.status() == Status::Certified && f.passed("witness"), "falsify_necessity witness");
    o.detail = "obstruction at " + f.summary["obstruction"].dump();
    return o;
}

// --- 9 ----------------------------------------------------------------------

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome crit_determinism()
{
    Outcome o;
    auto cfg = probe_config();
    std::vector<std::function<Report()>> runs{
        [&] {
            const auto& b = bundle_named("rational");
            const auto& n = b.functor("incl_Z3_S3");
            return certify_section2(n, b.opcat("frob_Z3"), copresheaf_battery(n.source(), cfg, "battery"), cfg,
                                    "incl_Z3_S3");
        },
        [&] {
            const auto& a = bundle_named("rational").category("S3");
            auto [names, ms] = bimodule_battery(a, cfg);
            return maschke_split(a, names, ms, cfg, "S3");
        },
        [&] { return falsify_necessity(cfg); },
    };
    for (std::size_t i = 0; i < runs.size(); ++i)
        o.expect(runs[i]().to_json().dump(2) == runs[i]().to_json().dump(2), "report " + std::to_string(i));
    for (const auto& name : builtin_bundle_names()) {
        auto text = save_bundle_string(builtin_bundle(name));
        o.expect(save_bundle_string(load_bundle_string(text)) == text, "round trip " + name);
        auto shipped = read_file(std::string(KANEX_BUNDLE_DIR) + "/" + name + ".json");
        o.expect(shipped == text, "shipped " + name + ".json matches");
        o.expect(save_bundle_string(load_bundle_string(shipped)) == shipped, "shipped round trip " + name);
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        std::string title;
        std::function<Outcome()> run;
        double limit_s;
    };
    std::vector<Criterion> all{
        {1, "base laws", crit_base_laws, 10},
        {2, "regular monos", crit_regular_monos, 0},
        {3, "coYoneda", crit_coyoneda, 0},
        {4, "Frobenius laws", crit_frobenius_laws, 30},
        {5, "Lan certified end to end", crit_section2, 0},
        {6, "L recovery, dagger and zero family", crit_section3, 0},
        {7, "Maschke splitting", crit_maschke, 0},
        {8, "Cayley and non-necessity", crit_cayley, 0},
        {9, "determinism", crit_determinism, 0},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.failures.push_back(std::string("threw: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_s == 0 || s < c.limit_s;
        bool ok = o.ok && in_time;
        failed += !ok;
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.checks
                  << " checks, " << std::fixed;
        std::cout.precision(2);
        std::cout << s << " s";
        if (c.limit_s > 0)
            std::cout << " < " << c.limit_s << " s";
        std::cout << ")";
        if (!o.detail.empty())
            std::cout << "  " << o.detail;
        std::cout << std::endl;
        if (!in_time)
            std::cout << "    over the time limit\n";
        for (const auto& f : o.failures)
            std::cout << "    failed: " << f << "\n";
    }
    return failed == 0 ? 0 : 1;
}
