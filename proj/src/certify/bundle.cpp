#include "kanex/bundle.hpp"

#include <fstream>
#include <sstream>

namespace kanex {

namespace {

template <class F>
auto in(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const UnknownObject& e) {
        throw UnknownObject(where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidStructure(where + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidStructure(where + ": " + e.what());
    } catch (const Error& e) {
        throw InvalidStructure(where + ": " + e.what());
    }
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& kind, const std::string& name)
{
    auto it = m.find(name);
    if (it == m.end())
        throw UnknownObject("unknown " + kind + " \"" + name + "\"");
    return it->second;
}

std::string key(const VCat& a, const std::vector<std::size_t>& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + a.name(t[i]);
    return s;
}

const Json& field(const Json& j, const std::string& k)
{
    if (!j.is_object() || !j.contains(k))
        throw InvalidStructure("missing \"" + k + "\"");
    return j.at(k);
}

void check_name(const std::string& name)
{
    if (name.empty() || name.find_first_of(",;") != std::string::npos)
        throw InvalidStructure("name \"" + name + "\" is empty or contains ',' or ';'");
}

void require_lawful(const LawReport& r, const std::string& what)
{
    if (r.lawful())
        return;
    const auto& v = r.violations.front();
    std::string at;
    for (auto i : v.at)
        at += (at.empty() ? "" : ",") + std::to_string(i);
    throw InvalidStructure(what + " fails " + v.law + " at (" + at + ")");
}

Json base_to_json(const BaseCtx& ctx)
{
    if (ctx.is_set())
        return Json{{"kind", "finset"}};
    const auto& k = ctx.field();
    return Json{{"kind", "finvect"}, {"field", k.is_rational() ? Json("Q") : Json{{"Fp", k.characteristic()}}}};
}

BaseCtx base_from_json(const Json& j)
{
    auto kind = field(j, "kind").get<std::string>();
    if (kind == "finset")
        return BaseCtx::finset();
    if (kind != "finvect")
        throw InvalidStructure("unknown base kind \"" + kind + "\"");
    const auto& f = field(j, "field");
    if (f.is_string() && f.get<std::string>() == "Q")
        return BaseCtx::finvect(Field::rationals());
    return BaseCtx::finvect(Field::prime(field(f, "Fp").get<std::uint64_t>()));
}

Json category_to_json(const VCat& a)
{
    std::size_t n = a.size();
    Json hom = Json::object(), comp = Json::object(), id = Json::object();
    for (std::size_t x = 0; x < n; ++x) {
        id[a.name(x)] = map_to_json(a.ident(x));
        for (std::size_t y = 0; y < n; ++y) {
            hom[key(a, {x, y})] = a.hom(x, y).size;
            for (std::size_t z = 0; z < n; ++z)
                comp[key(a, {x, z, y})] = map_to_json(a.comp(x, z, y));
        }
    }
    return Json{{"objects", a.objects()}, {"hom", hom}, {"comp", comp}, {"id", id}};
}

CatRef category_from_json(const BaseCtx& ctx, const Json& j)
{
    auto objects = field(j, "objects").get<std::vector<std::string>>();
    for (const auto& o : objects)
        check_name(o);
    auto k = [&](const std::vector<std::size_t>& t) {
        std::string s;
        for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "," : "") + objects.at(t[i]);
        return s;
    };
    const auto& hom = field(j, "hom");
    auto h = [&](std::size_t x, std::size_t y) { return VObj{field(hom, k({x, y})).get<std::size_t>()}; };
    auto a = VCat::build(
        ctx, objects, h,
        [&](std::size_t x, std::size_t z, std::size_t y) {
            return map_from_json(ctx, field(field(j, "comp"), k({x, z, y})), tensor(h(z, y), h(x, z)), h(x, y));
        },
        [&](std::size_t x) { return map_from_json(ctx, field(field(j, "id"), objects.at(x)), unit_obj(), h(x, x)); });
    require_lawful(check_category(*a), "category");
    return a;
}

Json module_to_json(const Module& m, const std::string& cat)
{
    const auto& a = *m.cat();
    Json values = Json::object(), action = Json::object();
    for (std::size_t i = 0; i < m.count(); ++i) {
        auto t = m.tuple(i);
        values[key(a, t)] = m.value_at(i).size;
        for (std::size_t leg = 0; leg < m.arity(); ++leg)
            for (std::size_t x = 0; x < a.size(); ++x)
                action[std::to_string(leg) + ";" + key(a, t) + ";" + a.name(x)] = map_to_json(m.one_sided(leg, t, x));
    }
    return Json{{"category", cat}, {"values", values}, {"action", action}};
}

Module module_from_json(const Bundle& b, const Json& j, const std::vector<Variance>& legs)
{
    const auto& a = b.category(field(j, "category").get<std::string>());
    const auto& values = field(j, "values");
    const auto& action = field(j, "action");
    auto value = [&](const Module::Tuple& t) { return VObj{field(values, key(*a, t)).get<std::size_t>()}; };
    auto m = Module::from_one_sided(a, legs, value, [&](std::size_t leg, const Module::Tuple& t, std::size_t x) {
        VObj h = legs[leg] == Variance::Co ? a->hom(t[leg], x) : a->hom(x, t[leg]);
        auto d = t;
        d[leg] = x;
        return map_from_json(a->ctx(), field(action, std::to_string(leg) + ";" + key(*a, t) + ";" + a->name(x)),
                             tensor(h, value(t)), value(d));
    });
    require_lawful(check_action(m), "module action");
    return m;
}

} // namespace

const CatRef& Bundle::category(const std::string& name) const
{
    return lookup(categories, "category", name);
}

const VFunctor& Bundle::functor(const std::string& name) const
{
    return lookup(functors, "functor", name);
}

const Module& Bundle::copresheaf(const std::string& name) const
{
    return lookup(copresheaves, "copresheaf", name);
}

const Module& Bundle::trimodule(const std::string& name) const
{
    return lookup(trimodules, "trimodule", name);
}

const OpcatStructure& Bundle::opcat(const std::string& name) const
{
    return lookup(opcats, "opcat", name);
}

Battery Bundle::battery(const std::string& name) const
{
    const auto& ref = lookup(batteries, "battery", name);
    Battery r;
    for (const auto& m : ref.members) {
        r.names.push_back(m);
        r.members.push_back(copresheaf(m));
    }
    r.spec = Json{{"bundle_battery", name}, {"members", ref.members}};
    return r;
}

std::string Bundle::category_name(const CatRef& a) const
{
    for (const auto& [name, c] : categories)
        if (c == a)
            return name;
    for (const auto& [name, c] : categories)
        if (*c == *a)
            return name;
    throw UnknownObject("category with objects starting " + (a->size() ? a->name(0) : std::string("(none)")) +
                        " is not in the bundle");
}

Json bundle_to_json(const Bundle& b)
{
    Json j{{"base", base_to_json(b.ctx)}};
    Json cats = Json::object();
    for (const auto& [name, a] : b.categories)
        cats[name] = category_to_json(*a);
    j["categories"] = cats;
    Json fs = Json::object();
    for (const auto& [name, n] : b.functors) {
        const auto& s = *n.source();
        Json objs = Json::object(), maps = Json::object();
        for (std::size_t x = 0; x < s.size(); ++x) {
            objs[s.name(x)] = n.target()->name(n.obj(x));
            for (std::size_t y = 0; y < s.size(); ++y)
                maps[key(s, {x, y})] = map_to_json(n.map(x, y));
        }
        fs[name] = Json{{"source", b.category_name(n.source())},
                        {"target", b.category_name(n.target())},
                        {"objects", objs},
                        {"map", maps}};
    }
    j["functors"] = fs;
    auto modules = [&](const std::map<std::string, Module>& ms) {
        Json out = Json::object();
        for (const auto& [name, m] : ms)
            out[name] = module_to_json(m, b.category_name(m.cat()));
        return out;
    };
    j["copresheaves"] = modules(b.copresheaves);
    j["presheaves"] = modules(b.presheaves);
    j["bimodules"] = modules(b.bimodules);
    j["trimodules"] = modules(b.trimodules);
    Json ops = Json::object();
    for (const auto& [name, op] : b.opcats) {
        const auto& a = *op.base;
        Json delta = Json::object(), eps = Json::object();
        for (std::size_t x = 0; x < a.size(); ++x) {
            eps[a.name(x)] = map_to_json(op.epsilon(x));
            for (std::size_t y = 0; y < a.size(); ++y)
                for (std::size_t z = 0; z < a.size(); ++z)
                    delta[key(a, {x, y, z})] = map_to_json(op.delta(x, y, z));
        }
        ops[name] = Json{{"category", b.category_name(op.base)}, {"delta", delta}, {"epsilon", eps}};
    }
    j["opcats"] = ops;
    Json bats = Json::object();
    for (const auto& [name, ref] : b.batteries)
        bats[name] = Json{{"category", ref.category}, {"members", ref.members}};
    j["batteries"] = bats;
    return j;
}

Bundle bundle_from_json(const Json& j)
{
    Bundle b;
    b.ctx = in("base", [&] { return base_from_json(field(j, "base")); });
    auto section = [&](const char* k) -> Json {
        if (!j.contains(k))
            return Json::object();
        if (!j.at(k).is_object())
            throw InvalidStructure(std::string("\"") + k + "\" must be an object");
        return j.at(k);
    };
    const Json cats = section("categories");
    for (const auto& [name, cj] : cats.items()) {
        in("category " + name, [&] {
            check_name(name);
            b.categories.emplace(name, category_from_json(b.ctx, cj));
        });
    }
    const Json funs = section("functors");
    for (const auto& [name, fj] : funs.items()) {
        in("functor " + name, [&] {
            check_name(name);
            const auto& s = b.category(field(fj, "source").get<std::string>());
            const auto& t = b.category(field(fj, "target").get<std::string>());
            std::vector<std::size_t> objs;
            for (std::size_t x = 0; x < s->size(); ++x)
                objs.push_back(t->index(field(field(fj, "objects"), s->name(x)).get<std::string>()));
            auto n = VFunctor::build(s, t, objs, [&](std::size_t x, std::size_t y) {
                return map_from_json(b.ctx, field(field(fj, "map"), key(*s, {x, y})), s->hom(x, y),
                                     t->hom(objs[x], objs[y]));
            });
            require_lawful(check_functor(n), "functor");
            b.functors.emplace(name, std::move(n));
        });
    }
    auto modules = [&](const char* k, std::map<std::string, Module>& out, const std::vector<Variance>& legs) {
        const Json sec = section(k);
        for (const auto& [name, mj] : sec.items())
            in(std::string(k) + " " + name, [&] {
                check_name(name);
                out.emplace(name, module_from_json(b, mj, legs));
            });
    };
    modules("copresheaves", b.copresheaves, kCopresheafLegs);
    modules("presheaves", b.presheaves, kPresheafLegs);
    modules("bimodules", b.bimodules, kBimoduleLegs);
    modules("trimodules", b.trimodules, kTriModuleLegs);
    const Json ops = section("opcats");
    for (const auto& [name, oj] : ops.items()) {
        in("opcat " + name, [&] {
            check_name(name);
            const auto& a = b.category(field(oj, "category").get<std::string>());
            std::size_t n = a->size();
            OpcatStructure op{a, {}, {}};
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t z = 0; z < n; ++z)
                        op.deltas.push_back(map_from_json(b.ctx, field(field(oj, "delta"), key(*a, {x, y, z})),
                                                          a->hom(x, y), tensor(a->hom(z, y), a->hom(x, z))));
            for (std::size_t x = 0; x < n; ++x)
                op.epsilons.push_back(
                    map_from_json(b.ctx, field(field(oj, "epsilon"), a->name(x)), a->hom(x, x), unit_obj()));
            op = certify_level(std::move(op));
            if (op.level == NaturalityLevel::None) {
                auto nat = check_delta_naturality(op);
                require_lawful(nat.counit, "opcat");
                require_lawful(nat.ab, "opcat");
            }
            b.opcats.emplace(name, std::move(op));
        });
    }
    const Json bats = section("batteries");
    for (const auto& [name, bj] : bats.items()) {
        in("battery " + name, [&] {
            check_name(name);
            BatteryRef ref{field(bj, "category").get<std::string>(),
                           field(bj, "members").get<std::vector<std::string>>()};
            const auto& a = b.category(ref.category);
            for (const auto& m : ref.members)
                if (!same_category(b.copresheaf(m).cat(), a))
                    throw InvalidStructure("member " + m + " lives over another category");
            b.batteries.emplace(name, std::move(ref));
        });
    }
    return b;
}

std::string save_bundle_string(const Bundle& b)
{
    return bundle_to_json(b).dump(2) + "\n";
}

Bundle load_bundle_string(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidStructure(e.what());
    }
    return bundle_from_json(j);
}

Bundle load_bundle(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidStructure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_bundle_string(ss.str());
}

void save_bundle(const Bundle& b, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidStructure("cannot write " + path);
    out << save_bundle_string(b);
}

// --- built-in bundles ----------------------------------------------------------

namespace {

Module sign_rep(const CatRef& z2)
{
    const auto& ctx = z2->ctx();
    Matrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = ctx.field().neg(1);
    auto act = VMap::from_matrix(ctx, m);
    return Module::build(
        z2, kCopresheafLegs, [](const Module::Tuple&) { return VObj{1}; },
        [&](const Module::Tuple&, const Module::Tuple&) { return act; });
}

void add_groups(Bundle& b, const Field& k, const std::vector<FiniteMonoid>& groups)
{
    for (const auto& g : groups) {
        auto a = monoid_algebra_category(g, k);
        b.categories.emplace(g.name, a);
        b.opcats.emplace("frob_" + g.name, group_algebra_frobenius(g, k));
        b.functors.emplace("id_" + g.name, identity_functor(a));
        b.copresheaves.emplace("regular_" + g.name, representable(a, 0));
        b.bimodules.emplace("regular_" + g.name, hom_bimodule(a));
    }
}

void add_inclusion(Bundle& b)
{
    auto z3 = b.category("Z3"), s3 = b.category("S3");
    b.functors.emplace("incl_Z3_S3", monoid_hom_functor(z3, s3, cyclic_group(3), symmetric_group3(), {0, 3, 4}));
}

} // namespace

std::vector<std::string> builtin_bundle_names()
{
    return {"prime2", "prime3", "rational", "sets"};
}

Bundle builtin_bundle(const std::string& name)
{
    Bundle b;
    if (name == "rational") {
        auto k = Field::rationals();
        b.ctx = BaseCtx::finvect(k);
        add_groups(b, k, {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group3()});
        add_inclusion(b);
        for (std::size_t n : {2u, 3u}) {
            auto a = indiscrete_category(b.ctx, n);
            std::string cn = "Ind" + std::to_string(n);
            b.categories.emplace(cn, a);
            b.opcats.emplace("frob_" + cn, indiscrete_frobenius(n, k));
            b.functors.emplace("id_" + cn, identity_functor(a));
        }
        b.functors.emplace("incl_Ind2_Ind3", object_map_functor(b.category("Ind2"), b.category("Ind3"), {0, 1}));
        auto z2 = b.category("Z2");
        b.functors.emplace("aug_Z2", augmentation(z2, b.category("1")));
        b.copresheaves.emplace("sign_Z2", sign_rep(z2));
        b.batteries.emplace("collapse", BatteryRef{"Z2", {"regular_Z2", "sign_Z2"}});
    } else if (name == "prime3" || name == "prime2") {
        auto k = Field::prime(name == "prime3" ? 3 : 2);
        b.ctx = BaseCtx::finvect(k);
        if (name == "prime3") {
            add_groups(b, k, {cyclic_group(3), symmetric_group3()});
            add_inclusion(b);
        } else {
            add_groups(b, k, {cyclic_group(2)});
        }
    } else if (name == "sets") {
        b.ctx = BaseCtx::finset();
        for (const auto& m : {trivial_group(), cyclic_group(2), left_zero_monoid()}) {
            auto pm = monoid_promonoidal(m);
            b.categories.emplace("M_" + m.name, pm.a);
            b.trimodules.emplace("P_" + m.name, pm.p);
            b.copresheaves.emplace("J_" + m.name, pm.j);
        }
        b.categories.emplace("Disc2", discrete_category(b.ctx, 2));
    } else {
        throw UnknownObject("unknown built-in bundle \"" + name + "\"");
    }
    return b;
}

} // namespace kanex
