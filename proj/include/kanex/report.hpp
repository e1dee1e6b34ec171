#pragma once

// Verdict reports with re-checkable witnesses, JSON encodings of maps, and
// the seeded random helpers behind the probe batteries.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kanex/encat.hpp"

namespace kanex {

using Json = nlohmann::json;

enum class Verdict { Pass, Fail, NotApplicable };
/// Exit codes 0, 1, 2.
enum class Status { Certified, Violation, HypothesesUnmet };

const char* to_string(Verdict v);
const char* to_string(Status s);

struct CheckResult
{
    std::string phase;
    std::string name;
    Verdict verdict = Verdict::Pass;
    /// Set for checks that do not bear on the status (phases run after unmet hypotheses, cell findings).
    bool informational = false;
    std::string detail;
    Json witness;
};

struct Report
{
    std::string title;
    Json provenance = Json::object();
    std::vector<CheckResult> checks;
    Json summary = Json::object();
    /// Phase whose failures mean "hypotheses unmet" rather than a violation.
    std::string hypothesis_phase = "hypotheses";

    CheckResult& add(std::string phase, std::string name, bool ok, std::string detail = {}, Json witness = {});
    void add_na(std::string phase, std::string name, std::string detail);
    /// Adds one check per law violation, or a single pass.
    void add_laws(const std::string& phase, const std::string& name, const LawReport& laws);
    /// Marks every later check of the given phases informational.
    void mark_informational(const std::string& phase);
    void merge(const Report& other, const std::string& prefix);

    bool passed(const std::string& phase) const;
    std::size_t failures() const;
    Status status() const;
    int exit_code() const { return static_cast<int>(status()); }

    /// Checks sorted by (phase, name); keys sorted; byte-stable.
    Json to_json() const;
    std::string to_text() const;
};

Json scalar_to_json(const Field& k, const Scalar& v);
Scalar scalar_from_json(const Field& k, const Json& j);
/// {"table": [...]} or {"matrix": [[...], ...]} row-major.
Json map_to_json(const VMap& m);
/// Reads a map of the given type; throws InvalidStructure on shape or entry errors.
VMap map_from_json(const BaseCtx& ctx, const Json& j, VObj dom, VObj cod);
Json law_witness(const Violation& v);

/// splitmix64(seed ^ fnv1a(task)).
std::uint64_t task_seed(std::uint64_t seed, std::string_view task);

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);
/// Entries in -2..2 (FinVect) or a uniform table (FinSet).
VMap random_map(std::mt19937_64& rng, const BaseCtx& ctx, VObj dom, VObj cod);
/// Injective table / full column rank; requires dom <= cod.
VMap random_mono(std::mt19937_64& rng, const BaseCtx& ctx, VObj dom, VObj cod);

/// Re-verifies a regular-mono classification: the cokernel pair coequalizes
/// m, and m factors isomorphically through the equalizer of the pair.
bool verify_regular_mono(const VMap& m);

} // namespace kanex
