#pragma once

// Opcategory / Frobenius data delta : A(a,b) -> A(c,b) (x) A(a,c) and
// epsilon : A(a,a) -> I on a V-category, the law checkers, and the map
// fb -> prod_x A(x,b) (x) fx derived from delta.

#include "kanex/catalog.hpp"
#include "kanex/kancoend.hpp"

namespace kanex {

/// None: counit or a,b-naturality fails.  Frobenius: counit square and
/// naturality in a and b.  FullOpcat: additionally natural in c, epsilon natural.
enum class NaturalityLevel { None, Frobenius, FullOpcat };

const char* to_string(NaturalityLevel level);

struct OpcatStructure
{
    CatRef base;
    /// delta_[(a * n + b) * n + c] : A(a,b) -> A(c,b) (x) A(a,c)
    std::vector<VMap> deltas;
    std::vector<VMap> epsilons;
    NaturalityLevel level = NaturalityLevel::None;

    const VMap& delta(std::size_t a, std::size_t b, std::size_t c) const
    {
        std::size_t n = base->size();
        return deltas[(a * n + b) * n + c];
    }
    const VMap& epsilon(std::size_t a) const { return epsilons[a]; }
};

/// Checks that every map has the right domain and codomain; throws BoundaryMismatch.
void validate_opcat(const OpcatStructure& op);

/// (epsilon_b (x) 1) . delta_{a,b,b} = 1 on A(a,b).
LawReport check_counit(const OpcatStructure& op);

struct NaturalityReport
{
    LawReport counit;
    /// Naturality squares in a and b.
    LawReport ab;
    /// Extraordinary naturality in c and of epsilon.
    LawReport c;
    NaturalityLevel level = NaturalityLevel::None;
};

NaturalityReport check_delta_naturality(const OpcatStructure& op);
/// (delta_{c,b,d} (x) 1) . delta_{a,b,c} = (1 (x) delta_{a,d,c}) . delta_{a,b,d}.  Informational only.
LawReport check_coassociativity(const OpcatStructure& op);
/// Runs the checkers and stores the certified level.
OpcatStructure certify_level(OpcatStructure op);

struct OpcatMap
{
    /// End (or, below FullOpcat, product) over x of A(x,b) (x) fx.
    EndResult target;
    /// fb -> A(x,b) (x) fx
    std::vector<VMap> components;
    VMap map;
};

/// The opcat map fb -> prod_x A(x,b) (x) fx, landing in the end when the
/// structure is FullOpcat.  Throws FactorizationFailure when the cowedge
/// through the coYoneda coend is not well defined.
OpcatMap opcat_map(const OpcatStructure& op, const Copresheaf& f, std::size_t b);
OpcatMap opcat_map(const OpcatStructure& op, const Copresheaf& f, std::size_t b, EndMode mode);
/// unitor . (epsilon_b (x) 1) . proj_b : prod_x A(x,b) (x) fx -> fb
VMap opcat_retraction(const OpcatStructure& op, const OpcatMap& m, const Copresheaf& f, std::size_t b);
LawReport coretraction_check(const OpcatStructure& op, const Copresheaf& f, std::size_t b);

/// delta(g) = sum_h g h^-1 (x) h, epsilon(g) = [g = e] on k[G].
OpcatStructure group_algebra_frobenius(const FiniteMonoid& g, const Field& k);
/// n objects, homs k, delta 1 -> 1 (x) 1, epsilon = 1.
OpcatStructure indiscrete_frobenius(std::size_t n, const Field& k);
/// delta^op_{a,b,c} = swap . delta_{b,a,c} on the opposite category.
OpcatStructure opposite_opcat(const OpcatStructure& op, const CatRef& a_op);

} // namespace kanex
