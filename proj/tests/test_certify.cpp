#include "doctest.h"

#include "kanex/bundle.hpp"

using namespace kanex;

namespace {

ProbeConfig small_config()
{
    ProbeConfig c;
    c.probe_target = 40;
    c.samples = 2;
    return c;
}

const Bundle& rational()
{
    static const Bundle b = builtin_bundle("rational");
    return b;
}

const Bundle& sets()
{
    static const Bundle b = builtin_bundle("sets");
    return b;
}

bool has_failure(const Report& r, const std::string& phase)
{
    for (const auto& c : r.checks)
        if (c.phase == phase && c.verdict == Verdict::Fail)
            return true;
    return false;
}

} // namespace

TEST_CASE("task seeds separate tasks and repeat")
{
    CHECK(task_seed(1, "a") == task_seed(1, "a"));
    CHECK(task_seed(1, "a") != task_seed(1, "b"));
    CHECK(task_seed(1, "a") != task_seed(2, "a"));
}

TEST_CASE("report status follows the phase of the first failure")
{
    Report r;
    r.add("unit", "x", true);
    CHECK(r.status() == Status::Certified);
    r.add("unit", "y", false, "broken");
    CHECK(r.status() == Status::Violation);
    CHECK(r.exit_code() == 1);
    r.add("hypotheses", "z", false);
    CHECK(r.status() == Status::HypothesesUnmet);
    CHECK(r.exit_code() == 2);

    Report q;
    q.add("structure", "cell", false).informational = true;
    q.add_na("search", "none", "nothing to search");
    CHECK(q.status() == Status::Certified);
    CHECK(q.failures() == 1);
}

TEST_CASE("report json is sorted and keeps witnesses on failures only")
{
    Report r;
    r.title = "t";
    r.add("b", "second", true, "", Json{{"k", 1}});
    r.add("a", "first", false, "why", Json{{"k", 2}});
    auto j = r.to_json();
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "first");
    CHECK(j["checks"][0]["witness"]["k"] == 2);
    CHECK(j["checks"][1]["witness"].is_null());
}

TEST_CASE("rational scalars round-trip and reject a zero denominator")
{
    auto k = Field::rationals();
    CHECK(scalar_to_json(k, Scalar(3)) == Json("3"));
    CHECK(scalar_to_json(k, Scalar(-1, 2)) == Json("-1/2"));
    CHECK(scalar_from_json(k, Json("-1/2")) == Scalar(-1, 2));
    CHECK_THROWS_AS(scalar_from_json(k, Json("1/0")), InvalidStructure);
    auto f5 = Field::prime(5);
    CHECK(scalar_from_json(f5, Json(4)) == Scalar(4));
    CHECK_THROWS_AS(scalar_from_json(f5, Json(7)), InvalidStructure);
}

TEST_CASE("maps round-trip through json")
{
    auto ctx = BaseCtx::finvect(Field::rationals());
    std::mt19937_64 rng(3);
    auto m = random_map(rng, ctx, VObj{2}, VObj{3});
    CHECK(map_from_json(ctx, map_to_json(m), VObj{2}, VObj{3}) == m);
    CHECK_THROWS_AS(map_from_json(ctx, map_to_json(m), VObj{3}, VObj{2}), InvalidStructure);

    auto s = BaseCtx::finset();
    auto t = random_map(rng, s, VObj{3}, VObj{2});
    CHECK(map_from_json(s, map_to_json(t), VObj{3}, VObj{2}) == t);
}

TEST_CASE("random monos are certified regular")
{
    for (auto ctx : {BaseCtx::finset(), BaseCtx::finvect(Field::rationals()), BaseCtx::finvect(Field::prime(5))}) {
        std::mt19937_64 rng(task_seed(1, "monos"));
        for (int i = 0; i < 20; ++i) {
            std::size_t d = uniform_index(rng, 3), c = d + uniform_index(rng, 2);
            CHECK(verify_regular_mono(random_mono(rng, ctx, VObj{d}, VObj{c})));
        }
    }
}

TEST_CASE("builtin bundles round-trip byte-exactly")
{
    for (const auto& name : builtin_bundle_names()) {
        auto text = save_bundle_string(builtin_bundle(name));
        CHECK(save_bundle_string(load_bundle_string(text)) == text);
    }
}

TEST_CASE("bundle load errors name the problem")
{
    CHECK_THROWS_AS(rational().category("Z7"), UnknownObject);
    CHECK_THROWS_AS(rational().functor("nope"), UnknownObject);
    CHECK_THROWS_AS(load_bundle_string("{"), Error);

    auto j = bundle_to_json(rational());
    j["functors"]["incl_Z3_S3"]["source"] = "Z7";
    CHECK_THROWS_AS(bundle_from_json(j), UnknownObject);

    auto k = bundle_to_json(sets());
    k["categories"]["Disc2"]["objects"].push_back("x,y");
    CHECK_THROWS_AS(bundle_from_json(k), InvalidStructure);
}

TEST_CASE("Lan certifies the inclusion Q[Z3] into Q[S3]")
{
    const auto& b = rational();
    const auto& n = b.functor("incl_Z3_S3");
    auto cfg = small_config();
    auto r = certify_section2(n, b.opcat("frob_Z3"), copresheaf_battery(n.source(), cfg, "t"), cfg, "incl");
    CHECK(r.status() == Status::Certified);
    CHECK(r.summary["probe"]["violations"] == 0);
    CHECK(r.summary["probe"]["non_iso"].get<int>() >= 40);
}

TEST_CASE("unit diagram replay closes every cell")
{
    const auto& b = rational();
    const auto& n = b.functor("incl_Z3_S3");
    auto r = replay_diagram_s2(n, b.opcat("frob_Z3"), b.copresheaf("regular_Z3"), 0, "replay");
    CHECK(r.status() == Status::Certified);
    CHECK(r.failures() == 0);
}

TEST_CASE("the augmentation Q[Z2] to Q collapses the sign representation")
{
    const auto& b = rational();
    const auto& n = b.functor("aug_Z2");
    auto cfg = small_config();
    auto probe = lan_probe(n, b.battery("collapse"), cfg, "aug");
    CHECK(probe.status() == Status::Violation);
    CHECK(probe.summary["probe"]["violations"].get<int>() > 0);

    auto r = certify_section2(n, b.opcat("frob_Z2"), b.battery("collapse"), cfg, "aug");
    CHECK(r.status() == Status::HypothesesUnmet);
}

TEST_CASE("L recovers the Lan verdict and catches the zero family")
{
    const auto& b = rational();
    const auto& n = b.functor("incl_Z3_S3");
    const auto& op = b.opcat("frob_Z3");
    auto cfg = small_config();
    auto battery = copresheaf_battery(n.source(), cfg, "t");
    auto r = recovery_check(n, op, battery, cfg, "incl");
    CHECK(r.status() == Status::Certified);
    CHECK(r.summary["L"] == "certified");

    auto a_op = opposite(n.source());
    auto z = certify_section3(zero_family(a_op, n.target()), opposite_opcat(op, a_op), flip_battery(battery, a_op),
                              cfg, "zero");
    CHECK(z.status() == Status::Violation);
    CHECK(has_failure(z, "unit"));
}

TEST_CASE("Maschke averaging over Q and its absence over F2")
{
    auto cfg = small_config();
    for (const char* g : {"Z2", "S3"}) {
        const auto& a = rational().category(g);
        auto [names, ms] = bimodule_battery(a, cfg);
        auto r = maschke_split(a, names, ms, cfg, g);
        CHECK(r.status() == Status::Certified);
        CHECK(r.summary["averaging"] == "available");
    }
    auto f2 = builtin_bundle("prime2");
    const auto& a = f2.category("Z2");
    auto [names, ms] = bimodule_battery(a, cfg);
    auto r = maschke_split(a, names, ms, cfg, "F2");
    CHECK(r.summary["averaging"] == "unavailable");
}

TEST_CASE("split-coend pipeline matches the opcat pathway")
{
    const auto& b = rational();
    const auto& n = b.functor("incl_Z3_S3");
    auto cfg = small_config();
    auto r = section4_pipeline(n, b.opcat("frob_Z3"), copresheaf_battery(n.source(), cfg, "t"), cfg, "incl");
    CHECK(r.status() == Status::Certified);
}

TEST_CASE("Cayley functors are conservative by retraction")
{
    const auto& b = sets();
    auto cfg = small_config();
    for (auto [name, unit] : std::vector<std::pair<std::string, std::string>>{{"P_1", ""}, {"P_Z2", "0"}, {"P_LZ3", "e"}}) {
        const auto& p = b.trimodule(name);
        std::size_t u = unit.empty() ? 0 : p.cat()->index(unit);
        auto r = cayley_probe(p, u, copresheaf_battery(p.cat(), cfg, name), cfg, name);
        CHECK_MESSAGE(r.status() == Status::Certified, name);
    }
}

TEST_CASE("the discrete two-object category has no opcat structure")
{
    auto obs = opcat_obstruction(*sets().category("Disc2"));
    CHECK(obs.has_value());
    CHECK_FALSE(opcat_obstruction(*sets().category("M_1")).has_value());
    auto r = falsify_necessity(small_config());
    CHECK(r.status() == Status::Certified);
}

TEST_CASE("reports are byte-identical across runs")
{
    const auto& b = sets();
    auto cfg = small_config();
    const auto& p = b.trimodule("P_Z2");
    auto run = [&] {
        return cayley_probe(p, 0, copresheaf_battery(p.cat(), cfg, "d"), cfg, "d").to_json().dump(2);
    };
    CHECK(run() == run());
}
