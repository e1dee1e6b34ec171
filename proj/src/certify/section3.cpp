#include "kanex/certify.hpp"

namespace kanex {

Report certify_section3(const CopresheafFamily& fam, const OpcatStructure& op3, const Battery& presheaves,
                        const ProbeConfig& cfg, const std::string& title)
{
    const auto& a = fam.a;
    const auto& c = fam.c;
    const auto& ctx = c->ctx();
    std::size_t na = a->size(), nc = c->size();
    auto id = [&](VObj x) { return identity(ctx, x); };

    Report r;
    r.title = title;
    r.provenance = Json{{"config", cfg.to_json()}, {"battery", presheaves.spec}};
    r.summary["kind"] = "certified via unit regular mono";

    r.add_laws("hypotheses", "family laws", check_family(fam));
    std::mt19937_64 rng(task_seed(cfg.seed, title + "/dagger"));
    std::vector<std::size_t> xs{1};
    for (std::size_t s = 0; s < cfg.samples; ++s)
        xs.push_back(uniform_index(rng, 4));
    for (auto x : xs)
        for (std::size_t p = 0; p < na; ++p)
            for (std::size_t q = 0; q < na; ++q)
                add_regular_mono(r, "hypotheses",
                                 "dagger regular mono X=" + std::to_string(x) + " (" + a->name(p) + "," + a->name(q) + ")",
                                 dagger_check(fam, VObj{x}, p, q).map);
    if (!same_category(op3.base, a)) {
        r.add("hypotheses", "opcat structure on the family's category", false);
        return r;
    }
    auto nat = check_delta_naturality(op3);
    r.add_laws("hypotheses", "opcat counit", nat.counit);
    r.add_laws("hypotheses", "delta natural in a and b", nat.ab);
    r.add("structure", "delta natural in c", nat.c.lawful()).informational = true;
    r.summary["level"] = to_string(nat.level);
    if (nat.level == NaturalityLevel::None) {
        r.mark_informational("unit");
        return r;
    }
    auto a_op = opposite(a);
    auto opo = opposite_opcat(op3, a_op);
    r.summary["opposite_level"] = to_string(opo.level);
    bool full = nat.level == NaturalityLevel::FullOpcat && opo.level == NaturalityLevel::FullOpcat;
    EndMode mode = full ? EndMode::End : EndMode::Product;
    if (opo.level == NaturalityLevel::None)
        opo.level = NaturalityLevel::Frobenius;

    for (std::size_t i = 0; i < presheaves.size(); ++i) {
        const auto& f = presheaves.members[i];
        const auto& fname = presheaves.names[i];
        auto fc = flip_variance(f, a_op);
        auto lf = l_functor(fam, f);
        auto ylf = n_yoneda(fam, lf.value);

        // K(z) = integral over x of f(x) (x) N(x)(z)
        std::vector<EndResult> kends;
        for (std::size_t z = 0; z < nc; ++z)
            kends.push_back(end(external_tensor(f, fam.at(z)), mode));
        auto k = Module::build(
            c, kCopresheafLegs, [&](const Module::Tuple& t) { return kends[t[0]].apex; },
            [&](const Module::Tuple& s, const Module::Tuple& d) {
                VObj h = c->hom(s[0], d[0]);
                std::vector<VMap> legs;
                for (std::size_t x = 0; x < na; ++x) {
                    VObj fx = f.value(x);
                    legs.push_back(compose(tensor(id(fx), fam.members[x].act(s[0], d[0])),
                                           compose(permute_factors(ctx, {h, fx, fam.members[x].value(s[0])}, {1, 0, 2}),
                                                   tensor(id(h), kends[s[0]].wedge[x]))));
                }
                return kends[d[0]].factor(legs);
            });
        // the legs into K(z) out of f(p) (x) N(p)(z), from an opcat component family at p
        auto into_k = [&](std::size_t p, std::size_t z, const std::vector<VMap>& to_x) {
            std::vector<VMap> w;
            for (std::size_t x = 0; x < na; ++x) {
                VObj fx = f.value(x), np = fam.members[p].value(z);
                w.push_back(compose(tensor(id(fx), fam.action(p, x, z)),
                                    compose(permute_factors(ctx, {a->hom(p, x), fx, np}, {1, 0, 2}),
                                            tensor(to_x[x], id(np)))));
            }
            return kends[z].factor(w);
        };

        std::vector<OpcatMap> oms;
        for (std::size_t p = 0; p < na; ++p)
            oms.push_back(opcat_map(opo, fc, p, mode));
        std::optional<VNat> kappa;
        try {
            std::vector<VMap> comps;
            for (std::size_t z = 0; z < nc; ++z) {
                std::vector<VMap> h;
                for (std::size_t p = 0; p < na; ++p)
                    h.push_back(into_k(p, z, oms[p].components));
                comps.push_back(lf.coends[z].factor(h));
            }
            kappa.emplace(lf.value, k, std::move(comps));
            r.add_laws("unit", "opcat composite natural " + fname, check_natural(*kappa));
        } catch (const FactorizationFailure& e) {
            r.add("unit", "opcat composite well defined " + fname, false, e.what());
        }

        for (std::size_t b = 0; b < na; ++b) {
            std::string at = fname + " at " + a->name(b);
            auto eta = l_unit(fam, lf, ylf, b);
            add_regular_mono(r, "unit", "unit regular mono " + at, eta);
            r.add_laws("unit", "opcat coretraction " + at, coretraction_check(opo, fc, b));
            if (!kappa)
                continue;
            auto to = functor_hom_object(fam.members[b], k);
            auto star = hom_postcompose(ylf.homs[b], to, *kappa);
            const auto& target = oms[b].target;
            std::vector<VMap> u;
            for (std::size_t z = 0; z < nc; ++z) {
                std::vector<VMap> to_x;
                for (std::size_t x = 0; x < na; ++x)
                    to_x.push_back(target.wedge[x]);
                u.push_back(into_k(b, z, to_x));
            }
            auto bottom = to.from_components(target.apex, u);
            auto lhs = compose(star, eta);
            auto rhs = compose(bottom, oms[b].map);
            r.add("unit", "square commutes " + at, lhs == rhs, lhs == rhs ? "" : "the two composites differ",
                  Json{{"lhs", map_to_json(lhs)}, {"rhs", map_to_json(rhs)}});
        }
    }
    if (!r.passed("hypotheses"))
        r.mark_informational("unit");
    return r;
}

Report recovery_check(const VFunctor& n, const OpcatStructure& op, const Battery& battery, const ProbeConfig& cfg,
                      const std::string& title)
{
    auto s2 = certify_section2(n, op, battery, cfg, title + " (Lan)");
    auto a_op = opposite(n.source());
    auto fam = representable_family(n, a_op);
    auto s3 = certify_section3(fam, opposite_opcat(op, a_op), flip_battery(battery, a_op), cfg, title + " (L)");
    Report r;
    r.title = title;
    r.provenance = s2.provenance;
    r.merge(s2, "lan: ");
    r.merge(s3, "L: ");
    // informational unit checks still carry the finding when hypotheses fail on one side only
    auto units_mono = [](const Report& x) {
        for (const auto& c : x.checks)
            if (c.phase == "unit" && c.verdict == Verdict::Fail)
                return false;
        return true;
    };
    bool lan_units = units_mono(s2), l_units = units_mono(s3);
    r.add("recovery", "verdicts agree", lan_units == l_units,
          std::string("lan ") + to_string(s2.status()) + (lan_units ? " (units regular)" : " (units fail)") + ", L " +
              to_string(s3.status()) + (l_units ? " (units regular)" : " (units fail)"));
    r.summary["lan"] = to_string(s2.status());
    r.summary["L"] = to_string(s3.status());
    r.summary["probe"] = s2.summary["probe"];
    return r;
}

} // namespace kanex
