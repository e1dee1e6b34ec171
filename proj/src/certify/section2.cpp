#include "kanex/certify.hpp"

namespace kanex {

namespace {

EndMode mode_for(NaturalityLevel level)
{
    return level == NaturalityLevel::FullOpcat ? EndMode::End : EndMode::Product;
}

void closure_samples(Report& r, const BaseCtx& ctx, const ProbeConfig& cfg, const std::string& task)
{
    std::mt19937_64 rng(task_seed(cfg.seed, task + "/closure"));
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        std::size_t x = uniform_index(rng, 3), y = x + uniform_index(rng, 2), z = y + uniform_index(rng, 2);
        auto m1 = random_mono(rng, ctx, VObj{x}, VObj{y});
        auto m2 = random_mono(rng, ctx, VObj{y}, VObj{z});
        VObj w{uniform_index(rng, 4)};
        std::string k = " #" + std::to_string(s);
        add_regular_mono(r, "hypotheses", "composite of regular monos" + k, compose(m2, m1));
        add_regular_mono(r, "hypotheses", "regular mono tensor X" + k, tensor(m1, identity(ctx, w)));
    }
}

std::string at(const VCat& a, std::size_t x)
{
    return " at " + a.name(x);
}

} // namespace

Report certify_section2(const VFunctor& n, const OpcatStructure& op, const Battery& battery, const ProbeConfig& cfg,
                        const std::string& title)
{
    const auto& a = n.source();
    const auto& ctx = a->ctx();
    Report r;
    r.title = title;
    r.provenance = Json{{"config", cfg.to_json()}, {"battery", battery.spec}};
    r.summary["kind"] = "certified via unit regular mono";

    r.add_laws("hypotheses", "functor laws", check_functor(n));
    for (std::size_t x = 0; x < a->size(); ++x)
        for (std::size_t y = 0; y < a->size(); ++y)
            add_regular_mono(r, "hypotheses", "N component regular mono (" + a->name(x) + "," + a->name(y) + ")",
                             n.map(x, y));
    closure_samples(r, ctx, cfg, title);
    if (!same_category(op.base, a)) {
        r.add("hypotheses", "opcat structure on the source category", false);
        r.mark_informational("unit");
        return r;
    }
    auto nat = check_delta_naturality(op);
    r.add_laws("hypotheses", "opcat counit", nat.counit);
    r.add_laws("hypotheses", "delta natural in a and b", nat.ab);
    r.add("structure", "delta natural in c", nat.c.lawful()).informational = true;
    r.summary["level"] = to_string(nat.level);
    OpcatStructure leveled = op;
    leveled.level = nat.level;

    std::vector<LanResult> lans;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto& f = battery.members[i];
        lans.push_back(lan(n, f));
        for (std::size_t b = 0; b < a->size(); ++b) {
            add_regular_mono(r, "unit", "unit regular mono " + battery.names[i] + at(*a, b),
                             lans.back().unit.component(b));
            std::string name = "opcat coretraction " + battery.names[i] + at(*a, b);
            try {
                r.add_laws("unit", name, coretraction_check(leveled, f, b));
            } catch (const FactorizationFailure& e) {
                r.add("unit", name, false, e.what());
            }
        }
    }
    conservativity_probe(
        r, "probe", battery, [&](std::size_t i, std::size_t j, const VNat& alpha) { return lan_map(lans[i], lans[j], alpha); },
        cfg, title);
    if (!r.passed("hypotheses")) {
        r.mark_informational("unit");
        r.mark_informational("probe");
    }
    return r;
}

Report replay_diagram_s2(const VFunctor& n, const OpcatStructure& op, const Copresheaf& f, std::size_t b,
                         const std::string& title)
{
    const auto& a = n.source();
    const auto& c = n.target();
    const auto& ctx = a->ctx();
    std::size_t na = a->size();
    std::size_t nb = n.obj(b);
    auto id = [&](VObj x) { return identity(ctx, x); };

    Report r;
    r.title = title;
    r.provenance = Json{{"at", a->name(b)}};
    auto nat = check_delta_naturality(op);
    r.add("hypotheses", "delta is at least Frobenius", nat.level != NaturalityLevel::None);
    r.summary["level"] = to_string(nat.level);
    if (nat.level == NaturalityLevel::None)
        return r;
    EndMode mode = mode_for(nat.level);
    OpcatStructure leveled = op;
    leveled.level = nat.level;
    r.summary["integral"] = mode == EndMode::End ? "end" : "product";

    // an arrow that fails to be well defined is recorded and its cells skipped
    auto build = [&](const std::string& name, const std::function<VMap()>& make) -> std::optional<VMap> {
        try {
            auto m = make();
            r.add("arrows", name + " well defined", true);
            return m;
        } catch (const FactorizationFailure& e) {
            r.add("arrows", name + " well defined", false, e.what());
            return std::nullopt;
        }
    };

    auto co = coyoneda_expand(f, b);
    auto lf = lan(n, f);
    const auto& node_b = lf.coends[nb];
    auto corep_c = restrict_along(n, corepresentable(c, nb));
    auto corep_a = corepresentable(a, b);

    auto top = build("top N", [&] {
        std::vector<VMap> h;
        for (std::size_t x = 0; x < na; ++x)
            h.push_back(compose(node_b.cowedge[x], tensor(n.map(x, b), id(f.value(x)))));
        return co.coend.factor(h);
    });
    auto om = opcat_map(leveled, f, b, mode);
    const auto& node_h = om.target;
    auto node_i = end(external_tensor(corep_c, f), mode);
    auto bottom = build("bottom N", [&] {
        std::vector<VMap> w;
        for (std::size_t x = 0; x < na; ++x)
            w.push_back(compose(tensor(n.map(x, b), id(f.value(x))), node_h.wedge[x]));
        return node_i.factor(w);
    });

    // W(a') = integral over x of L(x) (x) A(a',x), contravariant in a'
    struct Side
    {
        std::vector<EndResult> ends;
        std::optional<Presheaf> w;
    };
    auto make_side = [&](const Presheaf& left) {
        Side s;
        for (std::size_t p = 0; p < na; ++p)
            s.ends.push_back(end(external_tensor(left, representable(a, p)), mode));
        s.w = Module::build(
            a, kPresheafLegs, [&](const Module::Tuple& t) { return s.ends[t[0]].apex; },
            [&](const Module::Tuple& src, const Module::Tuple& dst) {
                std::size_t p = src[0], q = dst[0];
                VObj h = a->hom(q, p);
                std::vector<VMap> legs;
                for (std::size_t x = 0; x < na; ++x) {
                    VObj lx = left.value(x);
                    legs.push_back(compose(tensor(id(lx), a->comp(q, p, x)),
                                           compose(permute_factors(ctx, {h, lx, a->hom(p, x)}, {1, 2, 0}),
                                                   tensor(id(h), s.ends[p].wedge[x]))));
                }
                return s.ends[q].factor(legs);
            });
        return s;
    };
    auto left_side = make_side(corep_a);
    auto right_side = make_side(corep_c);
    auto node_c = coend(external_tensor(*left_side.w, f));
    auto node_d = coend(external_tensor(*right_side.w, f));

    auto left_opcat = build("left opcat", [&] {
        std::vector<VMap> h;
        for (std::size_t p = 0; p < na; ++p) {
            std::vector<VMap> d;
            for (std::size_t x = 0; x < na; ++x)
                d.push_back(leveled.delta(p, b, x));
            auto theta = left_side.ends[p].factor(d);
            h.push_back(compose(node_c.cowedge[p], tensor(theta, id(f.value(p)))));
        }
        return co.coend.factor(h);
    });
    // coevaluation style: delta_{a,a,x} on the identity, N on the A(x,a) factor, then compose
    auto right_opcat = build("right opcat", [&] {
        std::vector<VMap> h;
        for (std::size_t p = 0; p < na; ++p) {
            std::size_t np = n.obj(p);
            VObj cp = c->hom(np, nb);
            std::vector<VMap> d;
            for (std::size_t x = 0; x < na; ++x) {
                VObj ax = a->hom(p, x);
                auto coev = compose(tensor(n.map(x, p), id(ax)), compose(leveled.delta(p, p, x), a->ident(p)));
                d.push_back(compose(tensor(c->comp(n.obj(x), np, nb), id(ax)), tensor(id(cp), coev)));
            }
            auto rho = right_side.ends[p].factor(d);
            h.push_back(compose(node_d.cowedge[p], tensor(rho, id(f.value(p)))));
        }
        return node_b.factor(h);
    });
    auto middle_top = build("c to d", [&] {
        std::vector<VMap> h;
        for (std::size_t p = 0; p < na; ++p) {
            std::vector<VMap> w;
            for (std::size_t x = 0; x < na; ++x)
                w.push_back(compose(tensor(n.map(x, b), id(a->hom(p, x))), left_side.ends[p].wedge[x]));
            auto nu = right_side.ends[p].factor(w);
            h.push_back(compose(node_d.cowedge[p], tensor(nu, id(f.value(p)))));
        }
        return node_c.factor(h);
    });

    auto lv = lan(identity_functor(a), f);
    auto node_e = end(external_tensor(corep_a, lv.value), mode);
    auto node_f = end(external_tensor(corep_c, lv.value), mode);
    auto can = [&](const CoendResult& from, const Side& side, const Presheaf& left, const EndResult& to) {
        std::vector<VMap> per_x;
        for (std::size_t x = 0; x < na; ++x) {
            std::vector<VMap> h;
            for (std::size_t p = 0; p < na; ++p)
                h.push_back(compose(tensor(id(left.value(x)), lv.coends[x].cowedge[p]),
                                    tensor(side.ends[p].wedge[x], id(f.value(p)))));
            per_x.push_back(from.factor(h));
        }
        return to.factor(per_x);
    };
    auto can_left = build("left can", [&] { return can(node_c, left_side, corep_a, node_e); });
    auto can_right = build("right can", [&] { return can(node_d, right_side, corep_c, node_f); });
    auto middle_bottom = build("e to f", [&] {
        std::vector<VMap> w;
        for (std::size_t x = 0; x < na; ++x)
            w.push_back(compose(tensor(n.map(x, b), id(lv.value.value(x))), node_e.wedge[x]));
        return node_f.factor(w);
    });
    auto side_iso = [&](const Presheaf& left, const EndResult& from, const EndResult& to) {
        std::vector<VMap> w;
        for (std::size_t x = 0; x < na; ++x) {
            std::vector<VMap> acts;
            for (std::size_t p = 0; p < na; ++p)
                acts.push_back(f.act(p, x));
            auto inverse = lv.coends[x].factor(acts);
            w.push_back(compose(tensor(id(left.value(x)), inverse), from.wedge[x]));
        }
        return to.factor(w);
    };
    auto iso_left = build("left coYoneda iso", [&] { return side_iso(corep_a, node_e, node_h); });
    auto iso_right = build("right coYoneda iso", [&] { return side_iso(corep_c, node_f, node_i); });
    if (iso_left)
        r.add("arrows", "left coYoneda iso invertible", classify_map(*iso_left).iso);
    if (iso_right)
        r.add("arrows", "right coYoneda iso invertible", classify_map(*iso_right).iso);
    if (top)
        r.add("arrows", "top N after coYoneda is the unit", compose(*top, co.iso) == lf.unit.component(b));
    if (bottom)
        add_regular_mono(r, "arrows", "bottom N regular mono", *bottom);
    r.add_laws("arrows", "opcat coretraction", coretraction_check(leveled, f, b));

    auto cell = [&](const std::string& name, std::initializer_list<const std::optional<VMap>*> needs,
                    const std::function<std::pair<VMap, VMap>()>& sides) {
        for (const auto* m : needs)
            if (!*m) {
                r.add_na("cells", name, "an arrow of the cell is not well defined");
                return;
            }
        auto [lhs, rhs] = sides();
        r.add("cells", name, lhs == rhs, lhs == rhs ? "" : "the two composites differ",
              Json{{"lhs", map_to_json(lhs)}, {"rhs", map_to_json(rhs)}});
    };
    cell("triangle", {&left_opcat, &can_left, &iso_left}, [&] {
        return std::pair{compose_all({*iso_left, *can_left, *left_opcat}), compose(om.map, co.inverse)};
    });
    cell("top square", {&left_opcat, &middle_top, &right_opcat, &top}, [&] {
        return std::pair{compose(*middle_top, *left_opcat), compose(*right_opcat, *top)};
    });
    cell("middle square", {&middle_top, &can_right, &can_left, &middle_bottom}, [&] {
        return std::pair{compose(*can_right, *middle_top), compose(*middle_bottom, *can_left)};
    });
    cell("bottom square", {&middle_bottom, &iso_right, &iso_left, &bottom}, [&] {
        return std::pair{compose(*iso_right, *middle_bottom), compose(*bottom, *iso_left)};
    });
    cell("outer", {&iso_right, &can_right, &right_opcat, &top, &bottom}, [&] {
        return std::pair{compose_all({*iso_right, *can_right, *right_opcat, *top}),
                         compose_all({*bottom, om.map, co.inverse})};
    });
    r.summary["dims"] = Json{{"fb", f.value(b).size},
                             {"a", co.coend.apex.size},
                             {"b", node_b.apex.size},
                             {"c", node_c.apex.size},
                             {"d", node_d.apex.size},
                             {"e", node_e.apex.size},
                             {"f", node_f.apex.size},
                             {"h", node_h.apex.size},
                             {"i", node_i.apex.size}};
    return r;
}

} // namespace kanex
