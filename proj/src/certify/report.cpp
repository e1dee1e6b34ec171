#include "kanex/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kanex {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::NotApplicable:
        return "n/a";
    }
    return "n/a";
}

const char* to_string(Status s)
{
    switch (s) {
    case Status::Certified:
        return "certified";
    case Status::Violation:
        return "violation";
    case Status::HypothesesUnmet:
        return "hypotheses-unmet";
    }
    return "violation";
}

CheckResult& Report::add(std::string phase, std::string name, bool ok, std::string detail, Json witness)
{
    checks.push_back(CheckResult{std::move(phase), std::move(name), ok ? Verdict::Pass : Verdict::Fail, false,
                                 std::move(detail), ok ? Json() : std::move(witness)});
    return checks.back();
}

void Report::add_na(std::string phase, std::string name, std::string detail)
{
    checks.push_back(CheckResult{std::move(phase), std::move(name), Verdict::NotApplicable, false, std::move(detail), {}});
}

void Report::add_laws(const std::string& phase, const std::string& name, const LawReport& laws)
{
    if (laws.lawful()) {
        add(phase, name, true);
        return;
    }
    std::set<std::string> seen;
    for (const auto& v : laws.violations) {
        std::string at;
        for (auto i : v.at)
            at += (at.empty() ? "" : ",") + std::to_string(i);
        std::string key = name + ": " + v.law + " at (" + at + ")";
        if (!seen.insert(key).second)
            continue;
        add(phase, key, false, "both composites differ", law_witness(v));
    }
}

void Report::mark_informational(const std::string& phase)
{
    for (auto& c : checks)
        if (c.phase == phase)
            c.informational = true;
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

bool Report::passed(const std::string& phase) const
{
    for (const auto& c : checks)
        if (c.phase == phase && c.verdict == Verdict::Fail)
            return false;
    return true;
}

std::size_t Report::failures() const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.verdict == Verdict::Fail;
    return n;
}

Status Report::status() const
{
    bool violation = false;
    for (const auto& c : checks) {
        if (c.verdict != Verdict::Fail)
            continue;
        if (c.phase == hypothesis_phase)
            return Status::HypothesesUnmet;
        if (!c.informational)
            violation = true;
    }
    return violation ? Status::Violation : Status::Certified;
}

Json Report::to_json() const
{
    std::vector<const CheckResult*> sorted;
    for (const auto& c : checks)
        sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const CheckResult* a, const CheckResult* b) {
        return std::tie(a->phase, a->name) < std::tie(b->phase, b->name);
    });
    Json list = Json::array();
    for (const auto* c : sorted) {
        Json e{{"phase", c->phase},
               {"name", c->name},
               {"verdict", to_string(c->verdict)},
               {"informational", c->informational}};
        if (!c->detail.empty())
            e["detail"] = c->detail;
        if (!c->witness.is_null())
            e["witness"] = c->witness;
        list.push_back(std::move(e));
    }
    return Json{{"title", title},
                {"status", to_string(status())},
                {"exit_code", exit_code()},
                {"provenance", provenance},
                {"summary", summary},
                {"checks", std::move(list)}};
}

std::string Report::to_text() const
{
    std::ostringstream out;
    out << title << "\n";
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& c : checks) {
        pass += c.verdict == Verdict::Pass;
        fail += c.verdict == Verdict::Fail;
        na += c.verdict == Verdict::NotApplicable;
    }
    std::string current;
    for (const auto& c : checks) {
        if (c.phase != current) {
            current = c.phase;
            out << "  " << current << ":\n";
        }
        // passing checks are summarised per phase; failures and n/a are listed
        if (c.verdict == Verdict::Pass)
            continue;
        out << "    [" << to_string(c.verdict) << (c.informational ? ", informational" : "") << "] " << c.name;
        if (!c.detail.empty())
            out << " - " << c.detail;
        out << "\n";
    }
    for (auto it = summary.begin(); it != summary.end(); ++it)
        out << "  " << it.key() << ": " << it.value().dump() << "\n";
    out << "  checks: " << pass << " pass, " << fail << " fail, " << na << " n/a\n";
    out << "  status: " << to_string(status()) << "\n";
    return out.str();
}

Json scalar_to_json(const Field& k, const Scalar& v)
{
    if (k.is_rational())
        return to_string(v);
    return Json(v.get_num().get_ui());
}

Scalar scalar_from_json(const Field& k, const Json& j)
{
    if (k.is_rational()) {
        if (j.is_string()) {
            try {
                return parse_rational(j.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw InvalidStructure(e.what());
            }
        }
        if (j.is_number_integer())
            return Scalar(j.get<long>());
        throw InvalidStructure("rational entry must be a \"p/q\" string");
    }
    if (!j.is_number_integer())
        throw InvalidStructure("entry over " + k.name() + " must be an integer");
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= k.characteristic())
        throw InvalidStructure("entry " + std::to_string(v) + " is not a residue mod " +
                               std::to_string(k.characteristic()));
    return Scalar(static_cast<long>(v));
}

Json map_to_json(const VMap& m)
{
    if (m.ctx().is_set())
        return Json{{"table", m.table()}};
    Json rows = Json::array();
    const auto& a = m.matrix();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(scalar_to_json(m.ctx().field(), a(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"matrix", std::move(rows)}};
}

VMap map_from_json(const BaseCtx& ctx, const Json& j, VObj dom, VObj cod)
{
    if (!j.is_object())
        throw InvalidStructure("map must be an object");
    if (ctx.is_set()) {
        if (!j.contains("table") || !j["table"].is_array())
            throw InvalidStructure("FinSet map needs a \"table\" array");
        VMap::Table t;
        for (const auto& v : j["table"]) {
            if (!v.is_number_unsigned())
                throw InvalidStructure("table entries must be non-negative integers");
            t.push_back(v.get<std::size_t>());
        }
        if (t.size() != dom.size)
            throw InvalidStructure("table has " + std::to_string(t.size()) + " entries, expected " +
                                   std::to_string(dom.size));
        return VMap::from_table(ctx, cod, std::move(t));
    }
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw InvalidStructure("FinVect map needs a \"matrix\" array");
    const auto& rows = j["matrix"];
    if (rows.size() != cod.size)
        throw InvalidStructure("matrix has " + std::to_string(rows.size()) + " rows, expected " +
                               std::to_string(cod.size));
    Matrix m(cod.size, dom.size);
    for (std::size_t i = 0; i < cod.size; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dom.size)
            throw InvalidStructure("matrix row " + std::to_string(i) + " should have " + std::to_string(dom.size) +
                                   " entries");
        for (std::size_t c = 0; c < dom.size; ++c)
            m(i, c) = scalar_from_json(ctx.field(), rows[i][c]);
    }
    return VMap::from_matrix(ctx, std::move(m));
}

Json law_witness(const Violation& v)
{
    return Json{{"law", v.law}, {"at", v.at}, {"lhs", map_to_json(v.lhs)}, {"rhs", map_to_json(v.rhs)}};
}

std::uint64_t task_seed(std::uint64_t seed, std::string_view task)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : task) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n)
{
    return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

VMap random_map(std::mt19937_64& rng, const BaseCtx& ctx, VObj dom, VObj cod)
{
    if (ctx.is_set()) {
        if (cod.size == 0 && dom.size > 0)
            throw InvalidStructure("no map from a nonempty set to the empty set");
        VMap::Table t(dom.size);
        for (auto& v : t)
            v = uniform_index(rng, cod.size);
        return VMap::from_table(ctx, cod, std::move(t));
    }
    Matrix m(cod.size, dom.size);
    for (std::size_t i = 0; i < cod.size; ++i)
        for (std::size_t j = 0; j < dom.size; ++j)
            m(i, j) = ctx.field().canonical(Scalar(static_cast<long>(uniform_index(rng, 5)) - 2));
    return VMap::from_matrix(ctx, std::move(m));
}

VMap random_mono(std::mt19937_64& rng, const BaseCtx& ctx, VObj dom, VObj cod)
{
    if (dom.size > cod.size)
        throw InvalidStructure("no mono into a smaller object");
    if (ctx.is_set()) {
        std::vector<std::size_t> pool(cod.size);
        for (std::size_t i = 0; i < cod.size; ++i)
            pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(dom.size);
        return VMap::from_table(ctx, cod, pool);
    }
    for (;;) {
        VMap m = random_map(rng, ctx, dom, cod);
        if (rank(ctx.field(), m.matrix()) == dom.size)
            return m;
    }
}

bool verify_regular_mono(const VMap& m)
{
    auto c = classify_map(m);
    if (!c.regular_mono || !c.witness_u || !c.witness_v)
        return false;
    if (!(compose(*c.witness_u, m) == compose(*c.witness_v, m)))
        return false;
    if (equalizer(*c.witness_u, *c.witness_v).apex.size != m.dom().size)
        return false;
    if (m.ctx().is_set()) {
        std::set<std::size_t> image(m.table().begin(), m.table().end());
        return image.size() == m.dom().size;
    }
    return rank(m.ctx().field(), m.matrix()) == m.dom().size;
}

} // namespace kanex
