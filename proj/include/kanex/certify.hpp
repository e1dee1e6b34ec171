#pragma once

// The verification harness: replays the conservativity arguments for Lan_N,
// for L -| Y, for split coends and for the Cayley functor on concrete data,
// and probes conservativity by sampling natural transformations.

#include <functional>
#include <optional>

#include "kanex/frobenius.hpp"
#include "kanex/report.hpp"

namespace kanex {

struct ProbeConfig
{
    std::uint64_t seed = 1;
    /// Random transformations per (f, g) pair and round; closure samples per check.
    std::size_t samples = 4;
    /// Generator sizes of battery copresheaves.
    std::size_t max_generators = 2;
    /// Free members; one quotient-of-free is always added.
    std::size_t free_members = 3;
    /// Distinct non-iso transformations a probe tries to reach.
    std::size_t probe_target = 200;
    std::size_t max_rounds = 64;

    Json to_json() const;
};

struct Battery
{
    std::vector<std::string> names;
    std::vector<Module> members;
    Json spec = Json::object();

    std::size_t size() const { return members.size(); }
};

/// free0.. and quotient0, each drawn from its own task seed.
Battery copresheaf_battery(const CatRef& a, const ProbeConfig& cfg, const std::string& task);
/// Reads every member as a module over a_op.
Battery flip_battery(const Battery& b, const CatRef& a_op);

/// The image of alpha : members[i] -> members[j] under the probed functor.
using ImageFn = std::function<VNat(std::size_t i, std::size_t j, const VNat& alpha)>;

struct ProbeTally
{
    std::size_t non_iso = 0;
    std::size_t controls = 0;
    std::size_t violations = 0;
};

/// Contrapositive sampling: every non-iso alpha must have a non-iso image and
/// every iso alpha an iso image.  Evidence, not proof.
ProbeTally conservativity_probe(Report& r, const std::string& phase, const Battery& battery, const ImageFn& image,
                                const ProbeConfig& cfg, const std::string& task);
/// Stand-alone probe of Lan_N over a battery.
Report lan_probe(const VFunctor& n, const Battery& battery, const ProbeConfig& cfg, const std::string& title);

/// Regular-mono check with the cokernel pair as witness on failure.
CheckResult& add_regular_mono(Report& r, const std::string& phase, const std::string& name, const VMap& m);

Report certify_section2(const VFunctor& n, const OpcatStructure& op, const Battery& battery, const ProbeConfig& cfg,
                        const std::string& title);

/// Builds every node and arrow of the diagram relating the unit of Lan_N to
/// the opcat map and reports each cell as an exact map equality.
Report replay_diagram_s2(const VFunctor& n, const OpcatStructure& op, const Copresheaf& f, std::size_t b,
                         const std::string& title);

/// op3 lives on fam.a; the battery holds presheaves on fam.a.
Report certify_section3(const CopresheafFamily& fam, const OpcatStructure& op3, const Battery& presheaves,
                        const ProbeConfig& cfg, const std::string& title);
/// Runs the second pipeline on N(a) = C(Na,-) over A^op and compares verdicts.
Report recovery_check(const VFunctor& n, const OpcatStructure& op, const Battery& battery, const ProbeConfig& cfg,
                      const std::string& title);

/// The underlying group of a one-object linear category whose composition
/// multiplies basis vectors, if it is one.
std::optional<FiniteMonoid> group_of(const VCat& a);

/// Canonical epis onto coends for each bimodule: the averaging section when
/// available, otherwise an exact search for a (sampled-)natural section.
Report maschke_split(const CatRef& a, const std::vector<std::string>& names, const std::vector<Bimodule>& bimodules,
                     const ProbeConfig& cfg, const std::string& title);
/// Regular bimodule plus A(-,0) (x) free0.
std::pair<std::vector<std::string>, std::vector<Bimodule>> bimodule_battery(const CatRef& a, const ProbeConfig& cfg);
/// Split coends => unit regular mono, compared against certify_section2.
Report section4_pipeline(const VFunctor& n, const OpcatStructure& op, const Battery& battery, const ProbeConfig& cfg,
                         const std::string& title);

/// Retraction f(c) ~ Exists_P(f)(u,c) plus sampling probes.  P(c,u,c) must be
/// a point for every c.
Report cayley_probe(const TriModule& p, std::size_t unit, const Battery& battery, const ProbeConfig& cfg,
                    const std::string& title);

/// A triple (a,b,c) with A(a,b) nonempty and A(c,b) (x) A(a,c) empty: no delta can exist.
std::optional<std::vector<std::size_t>> opcat_obstruction(const VCat& a);

Report falsify_necessity(const ProbeConfig& cfg);

} // namespace kanex
