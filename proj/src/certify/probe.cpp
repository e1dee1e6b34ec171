#include <set>

#include "kanex/certify.hpp"

namespace kanex {

namespace {

Json nat_to_json(const VNat& alpha)
{
    Json comps = Json::array();
    for (const auto& m : alpha.components())
        comps.push_back(map_to_json(m));
    return comps;
}

Json generator_sizes(const std::vector<VObj>& gens)
{
    Json j = Json::array();
    for (auto g : gens)
        j.push_back(g.size);
    return j;
}

} // namespace

Json ProbeConfig::to_json() const
{
    return Json{{"seed", seed},
                {"samples", samples},
                {"max_generators", max_generators},
                {"free_members", free_members},
                {"probe_target", probe_target},
                {"max_rounds", max_rounds}};
}

Battery copresheaf_battery(const CatRef& a, const ProbeConfig& cfg, const std::string& task)
{
    Battery b;
    Json members = Json::object();
    for (std::size_t i = 0; i < cfg.free_members; ++i) {
        std::string name = "free" + std::to_string(i);
        std::mt19937_64 rng(task_seed(cfg.seed, task + "/" + name));
        auto spec = random_free_spec(a, rng, cfg.max_generators);
        members[name] = Json{{"kind", "free"}, {"generators", generator_sizes(spec.generators)}};
        b.names.push_back(name);
        b.members.push_back(generate_copresheaf(a, spec));
    }
    std::mt19937_64 rng(task_seed(cfg.seed, task + "/quotient0"));
    auto spec = random_quotient_spec(a, rng, cfg.max_generators);
    members["quotient0"] = Json{{"kind", "quotient"},
                                {"generators", generator_sizes(spec.generators)},
                                {"relations", generator_sizes(spec.relations)}};
    b.names.push_back("quotient0");
    b.members.push_back(generate_copresheaf(a, spec));
    b.spec = Json{{"task", task}, {"members", std::move(members)}};
    return b;
}

Battery flip_battery(const Battery& b, const CatRef& a_op)
{
    Battery r{b.names, {}, b.spec};
    for (const auto& m : b.members)
        r.members.push_back(flip_variance(m, a_op));
    return r;
}

ProbeTally conservativity_probe(Report& r, const std::string& phase, const Battery& battery, const ImageFn& image,
                                const ProbeConfig& cfg, const std::string& task)
{
    ProbeTally t;
    std::set<std::string> seen;
    std::size_t recorded = 0;
    for (std::size_t round = 0; round < cfg.max_rounds && t.non_iso < cfg.probe_target; ++round) {
        std::size_t fresh = 0;
        for (std::size_t i = 0; i < battery.size(); ++i)
            for (std::size_t j = 0; j < battery.size(); ++j) {
                const auto& f = battery.members[i];
                const auto& g = battery.members[j];
                std::vector<VNat> alphas;
                try {
                    alphas = generate_nat(f, g,
                                          task_seed(cfg.seed, task + "/" + battery.names[i] + "/" + battery.names[j] +
                                                                  "/" + std::to_string(round)),
                                          cfg.samples);
                } catch (const EmptySolution&) {
                    continue;
                }
                if (round == 0 && f.ctx().is_linear()) {
                    std::vector<VMap> zero;
                    for (std::size_t a = 0; a < f.count(); ++a)
                        zero.push_back(zero_map(f.ctx(), f.value_at(a), g.value_at(a)));
                    alphas.emplace_back(f, g, std::move(zero));
                }
                for (const auto& alpha : alphas) {
                    Json comps = nat_to_json(alpha);
                    if (!seen.insert(std::to_string(i) + ";" + std::to_string(j) + ";" + comps.dump()).second)
                        continue;
                    ++fresh;
                    bool iso = is_iso(alpha);
                    auto im = image(i, j, alpha);
                    bool im_iso = is_iso(im);
                    if (iso)
                        ++t.controls;
                    else
                        ++t.non_iso;
                    if (iso == im_iso)
                        continue;
                    ++t.violations;
                    if (recorded++ >= 8)
                        continue;
                    r.add(phase,
                          std::string(iso ? "control" : "counterexample") + " " + battery.names[i] + " -> " +
                              battery.names[j] + " #" + std::to_string(t.violations),
                          false, iso ? "iso transformation with a non-iso image" : "non-iso transformation with an iso image",
                          Json{{"source", battery.names[i]},
                               {"target", battery.names[j]},
                               {"alpha", std::move(comps)},
                               {"image", nat_to_json(im)}});
                }
            }
        if (fresh == 0)
            break;
    }
    r.add(phase, "no contrapositive violation", t.violations == 0,
          std::to_string(t.non_iso) + " non-iso samples, " + std::to_string(t.controls) + " iso controls");
    r.summary["probe"] = Json{{"non_iso", t.non_iso}, {"controls", t.controls}, {"violations", t.violations}};
    return t;
}

Report lan_probe(const VFunctor& n, const Battery& battery, const ProbeConfig& cfg, const std::string& title)
{
    Report r;
    r.title = title;
    r.provenance = Json{{"config", cfg.to_json()}, {"battery", battery.spec}};
    std::vector<LanResult> lans;
    for (const auto& f : battery.members)
        lans.push_back(lan(n, f));
    conservativity_probe(
        r, "probe", battery, [&](std::size_t i, std::size_t j, const VNat& alpha) { return lan_map(lans[i], lans[j], alpha); },
        cfg, title);
    r.summary["kind"] = "probed";
    return r;
}

CheckResult& add_regular_mono(Report& r, const std::string& phase, const std::string& name, const VMap& m)
{
    if (verify_regular_mono(m))
        return r.add(phase, name, true);
    auto c = classify_map(m);
    Json w{{"map", map_to_json(m)}, {"mono", c.mono}};
    if (c.witness_u && c.witness_v) {
        w["cokernel_pair_u"] = map_to_json(*c.witness_u);
        w["cokernel_pair_v"] = map_to_json(*c.witness_v);
    }
    return r.add(phase, name, false, c.mono ? "mono but not the equalizer of its cokernel pair" : "not mono",
                 std::move(w));
}

} // namespace kanex
