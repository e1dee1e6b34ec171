#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kanex/bundle.hpp"

using namespace kanex;

namespace {

struct Common
{
    std::string bundle;
    std::string report;
    std::uint64_t seed = 1;
    std::size_t samples = 4;
    std::size_t target = 200;
    std::string battery;

    ProbeConfig config() const
    {
        ProbeConfig c;
        c.seed = seed;
        c.samples = samples;
        c.probe_target = target;
        return c;
    }
};

void add_common(CLI::App* app, Common& c, bool needs_bundle = true)
{
    if (needs_bundle)
        app->add_option("bundle", c.bundle, "bundle file")->required();
    app->add_option("--report", c.report, "write the machine-readable report here");
    app->add_option("--seed", c.seed, "global seed");
    app->add_option("--samples", c.samples, "random samples per pair and round");
    app->add_option("--target", c.target, "non-iso transformations a probe aims for");
}

Battery pick_battery(const Bundle& b, const Common& c, const CatRef& a)
{
    if (!c.battery.empty())
        return b.battery(c.battery);
    return copresheaf_battery(a, c.config(), "battery");
}

int emit(const Report& r, const Common& c)
{
    std::cout << r.to_text();
    if (!c.report.empty()) {
        std::ofstream out(c.report);
        if (!out) {
            std::cerr << "cannot write " << c.report << "\n";
            return 2;
        }
        out << r.to_json().dump(2) << "\n";
    }
    return r.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"kanex: conservativity certificates for left Kan extensions"};
    app.require_subcommand(1);

    Common c;
    std::string functor, opcat, copresheaf, at, family = "representable", category, mode = "lan", trimodule, unit;
    std::vector<std::string> bimodules;
    std::string out_dir = ".";

    auto* laws = app.add_subcommand("check-laws", "load a bundle and run every law checker");
    laws->add_option("bundle", c.bundle)->required();

    auto* s2 = app.add_subcommand("certify-s2", "certify Lan_N conservative through the opcat argument");
    add_common(s2, c);
    s2->add_option("--functor", functor)->required();
    s2->add_option("--opcat", opcat)->required();
    s2->add_option("--battery", c.battery);

    auto* replay = app.add_subcommand("replay-s2", "build the unit diagram and check every cell");
    add_common(replay, c);
    replay->add_option("--functor", functor)->required();
    replay->add_option("--opcat", opcat)->required();
    replay->add_option("--copresheaf", copresheaf)->required();
    replay->add_option("--at", at)->required();

    auto* s3 = app.add_subcommand("certify-s3", "certify L conservative for N(a) = C(Na,-) or the zero family");
    add_common(s3, c);
    s3->add_option("--functor", functor)->required();
    s3->add_option("--opcat", opcat)->required();
    s3->add_option("--family", family)->check(CLI::IsMember({"representable", "zero"}));
    s3->add_option("--battery", c.battery);

    auto* maschke = app.add_subcommand("maschke", "split canonical epis onto coends");
    add_common(maschke, c);
    maschke->add_option("--category", category);
    maschke->add_option("--bimodule", bimodules, "bundle bimodules (default: regular and a tensor)");
    maschke->add_option("--functor", functor, "also run the split-coend pipeline for this functor");
    maschke->add_option("--opcat", opcat);
    maschke->add_option("--battery", c.battery);

    auto* probe = app.add_subcommand("probe", "sample natural transformations against a functor");
    add_common(probe, c);
    probe->add_option("--mode", mode)->check(CLI::IsMember({"lan", "cayley"}));
    probe->add_option("--functor", functor);
    probe->add_option("--trimodule", trimodule);
    probe->add_option("--unit", unit);
    probe->add_option("--battery", c.battery);

    auto* falsify = app.add_subcommand("falsify", "show the opcat hypothesis is not necessary");
    add_common(falsify, c, false);

    auto* exp = app.add_subcommand("export", "write the built-in bundles");
    exp->add_option("--dir", out_dir);

    CLI11_PARSE(app, argc, argv);

    if (exp->parsed()) {
        for (const auto& name : builtin_bundle_names())
            save_bundle(builtin_bundle(name), out_dir + "/" + name + ".json");
        return 0;
    }
    if (falsify->parsed())
        return emit(falsify_necessity(c.config()), c);

    Bundle b;
    try {
        b = load_bundle(c.bundle);
    } catch (const Error& e) {
        std::cerr << "load failed: " << e.what() << "\n";
        return 2;
    }
    try {
        auto cfg = c.config();
        if (laws->parsed()) {
            std::cout << c.bundle << ": " << b.categories.size() << " categories, " << b.functors.size()
                      << " functors, " << b.copresheaves.size() + b.presheaves.size() + b.bimodules.size() +
                                              b.trimodules.size()
                      << " modules, " << b.opcats.size() << " opcat structures; all lawful\n";
            for (const auto& [name, op] : b.opcats)
                std::cout << "  " << name << ": " << to_string(op.level) << "\n";
            return 0;
        }
        if (s2->parsed()) {
            const auto& n = b.functor(functor);
            return emit(certify_section2(n, b.opcat(opcat), pick_battery(b, c, n.source()), cfg, functor), c);
        }
        if (replay->parsed()) {
            const auto& n = b.functor(functor);
            return emit(replay_diagram_s2(n, b.opcat(opcat), b.copresheaf(copresheaf), n.source()->index(at),
                                          functor + " / " + copresheaf + " at " + at),
                        c);
        }
        if (s3->parsed()) {
            const auto& n = b.functor(functor);
            auto battery = pick_battery(b, c, n.source());
            if (family == "representable")
                return emit(recovery_check(n, b.opcat(opcat), battery, cfg, functor), c);
            auto a_op = opposite(n.source());
            return emit(certify_section3(zero_family(a_op, n.target()), opposite_opcat(b.opcat(opcat), a_op),
                                         flip_battery(battery, a_op), cfg, functor + " zero family"),
                        c);
        }
        if (maschke->parsed()) {
            if (!functor.empty()) {
                const auto& n = b.functor(functor);
                return emit(section4_pipeline(n, b.opcat(opcat), pick_battery(b, c, n.source()), cfg, functor), c);
            }
            const auto& a = b.category(category);
            std::vector<std::string> names;
            std::vector<Bimodule> ms;
            if (bimodules.empty()) {
                std::tie(names, ms) = bimodule_battery(a, cfg);
            } else {
                for (const auto& m : bimodules) {
                    auto it = b.bimodules.find(m);
                    if (it == b.bimodules.end())
                        throw UnknownObject("unknown bimodule \"" + m + "\"");
                    names.push_back(m);
                    ms.push_back(it->second);
                }
            }
            return emit(maschke_split(a, names, ms, cfg, category), c);
        }
        if (probe->parsed()) {
            if (mode == "lan") {
                const auto& n = b.functor(functor);
                return emit(lan_probe(n, pick_battery(b, c, n.source()), cfg, functor), c);
            }
            const auto& p = b.trimodule(trimodule);
            std::size_t u = unit.empty() ? 0 : p.cat()->index(unit);
            return emit(cayley_probe(p, u, pick_battery(b, c, p.cat()), cfg, trimodule), c);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
