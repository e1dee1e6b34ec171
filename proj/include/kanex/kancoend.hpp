#pragma once

// Coends and ends as explicit (co)equalizers, the coYoneda expansion, left Kan
// extension with its unit and counit, functor-category hom objects, the
// N-Yoneda adjunction L -| Y for E = [C,V], and the Cayley functor.

#include <optional>

#include "kanex/catalog.hpp"
#include "kanex/encat.hpp"

namespace kanex {

struct CoendResult
{
    CatRef cat;
    Bimodule module;
    VObj apex;
    /// omega_a : S(a,a) -> apex
    std::vector<VMap> cowedge;
    /// (+)_a S(a,a) with its injections.
    ColimitCocone diagonal;
    /// The canonical regular epi (+)_a S(a,a) -> apex, as a coequalizer with section.
    ColimitCocone quotient;

    /// The map apex -> Z induced by a cowedge h_a : S(a,a) -> Z.  Throws
    /// FactorizationFailure if h is not a cowedge.
    VMap factor(const std::vector<VMap>& h) const;
    /// X (x) apex -> Z induced by h_a : X (x) S(a,a) -> Z.
    VMap factor_tensored(VObj x, const std::vector<VMap>& h) const;
};

/// Both cowedge composites A(a,b) (x) S(b,a) -> S(b,b) and -> S(a,a).
std::pair<VMap, VMap> coend_relation(const Bimodule& s, std::size_t a, std::size_t b);
CoendResult coend(const Bimodule& s);

enum class EndMode { End, Product };

struct EndResult
{
    CatRef cat;
    Bimodule module;
    VObj apex;
    bool is_end = true;
    /// pi_x : apex -> S(x,x)
    std::vector<VMap> wedge;
    LimitCone product;
    /// The equalizer into the product (End mode only).
    std::optional<LimitCone> equalizer;

    /// Z -> apex from a wedge (or, in Product mode, any family) w_x : Z -> S(x,x).
    VMap factor(const std::vector<VMap>& w) const;
};

EndResult end(const Bimodule& s, EndMode mode);

/// S(x,y) = P(x) (x) Q(y) for a presheaf P and copresheaf Q.
Bimodule external_tensor(const Presheaf& p, const Copresheaf& q);
/// X (x) F, valuewise.
Module tensor_object(VObj x, const Module& f);
/// The pointwise product of modules of equal shape, with its projections.
struct ModuleProduct
{
    Module value;
    std::vector<LimitCone> cones;
    std::vector<VNat> projections;
};
ModuleProduct product(const std::vector<Module>& ms);

struct CoyonedaResult
{
    CoendResult coend;
    /// f(b) -> coend over a of A(a,b) (x) f(a)
    VMap iso;
    VMap inverse;
};

CoyonedaResult coyoneda_expand(const Copresheaf& f, std::size_t b);

struct LanResult
{
    VFunctor n;
    Copresheaf f;
    Copresheaf value;
    /// Per object c of C: coend over a of C(Na,c) (x) f(a).
    std::vector<CoendResult> coends;
    /// eta_f : f -> [N,1] Lan_N f
    VNat unit;
};

LanResult lan(const VFunctor& n, const Copresheaf& f);
/// Lan_N(alpha) between two computed extensions.
VNat lan_map(const LanResult& lf, const LanResult& lg, const VNat& alpha);
VNat lan_map(const VFunctor& n, const VNat& alpha);
/// Lan_N [N,1] g -> g.
VNat lan_counit(const VFunctor& n, const Copresheaf& g);
/// The symmetry C(Na,c) (x) f(a) -> f(a) (x) C(Na,c) induced on coends, from
/// Lan_N f(c) to a coend taken in the f-first order.
VMap lan_reorder(const LanResult& lf, std::size_t c, const CoendResult& f_first);

struct AdjunctionReport
{
    LawReport triangles;
    /// Size of Nat(Lan f, g) and of Nat(f, [N,1] g).
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    /// Transposes of the left side are natural and pairwise distinct / independent.
    bool transposes_ok = false;

    bool ok() const { return triangles.lawful() && left_size == right_size && transposes_ok; }
};

AdjunctionReport adjunction_check(const VFunctor& n, const Copresheaf& f, const Copresheaf& g);

struct Interchange
{
    std::vector<CoendResult> coends;
    CoendResult product_coend;
    ModuleProduct family_product;
    LimitCone apex_product;
    /// coend_a prod_x T_x(a,a) -> prod_x coend_a T_x(a,a)
    VMap can;
};

Interchange interchange_can(const std::vector<Bimodule>& family);

// --- hom objects in [C,V] -----------------------------------------------------

struct HomObject
{
    Copresheaf source;
    Copresheaf target;
    EndResult end;

    VObj apex() const { return end.apex; }
    /// The transformation named by an element I -> apex.
    VNat extract(const VMap& element) const;
    /// The element naming a transformation.
    VMap insert(const VNat& alpha) const;
    /// Z -> apex from maps Z (x) F(c) -> G(c) natural in c.
    VMap from_components(VObj z, const std::vector<VMap>& uncurried) const;
};

/// H(c,c') = [F c, G c'] as a bimodule over C.
Bimodule internal_hom_bimodule(const Copresheaf& f, const Copresheaf& g);
HomObject functor_hom_object(const Copresheaf& f, const Copresheaf& g);
/// Postcomposition E(F, G) -> E(F, G') with beta : G -> G'.
VMap hom_postcompose(const HomObject& from, const HomObject& to, const VNat& beta);

// --- the N-Yoneda adjunction for E = [C,V] -----------------------------------

/// N : A -> [C,V] presented as copresheaves on C with an A-action.
struct CopresheafFamily
{
    CatRef a;
    CatRef c;
    std::vector<Copresheaf> members;
    /// act[(x * |A| + y) * |C| + z] : A(x,y) (x) N(x)(z) -> N(y)(z)
    std::vector<VMap> act;

    const VMap& action(std::size_t x, std::size_t y, std::size_t z) const
    {
        return act[(x * a->size() + y) * c->size() + z];
    }
    /// z fixed: the copresheaf x -> N(x)(z) on A.
    Copresheaf at(std::size_t z) const;
};

LawReport check_family(const CopresheafFamily& n);
/// N(a) = C(Na,-) on A^op for an ordinary N : A -> C.
CopresheafFamily representable_family(const VFunctor& n, const CatRef& a_op);
/// Every member the zero copresheaf.
CopresheafFamily zero_family(const CatRef& a, const CatRef& c);

struct LResult
{
    Presheaf f;
    Copresheaf value;
    /// Per object c: coend over a of f(a) (x) N(a)(c).
    std::vector<CoendResult> coends;
};

LResult l_functor(const CopresheafFamily& n, const Presheaf& f);

struct YResult
{
    Copresheaf e;
    Presheaf value;
    std::vector<HomObject> homs;
};

YResult n_yoneda(const CopresheafFamily& n, const Copresheaf& e);
/// eta_{f,b} : f(b) -> Y(L f)(b), t |-> (s |-> omega_b(t (x) s)).
VMap l_unit(const CopresheafFamily& n, const LResult& lf, const YResult& ylf, std::size_t b);

/// The canonical X (x) E(N b, N a) -> E(N b, X (x) N a) and its classification.
struct DaggerResult
{
    VMap map;
    MapClass classification;
};

DaggerResult dagger_check(const CopresheafFamily& n, VObj x, std::size_t a, std::size_t b);

// --- Cayley -------------------------------------------------------------------

struct Promonoidal
{
    CatRef a;
    TriModule p;
    Copresheaf j;
};

/// FinSet: A discrete on the monoid's elements, P(a,b,c) = point iff a.b = c, J
/// representable at the unit.
Promonoidal monoid_promonoidal(const FiniteMonoid& m);

struct CayleyResult
{
    TriModule p;
    Bimodule value;
    /// Indexed by the tuple index of (b,c).
    std::vector<CoendResult> coends;
};

/// Exists_P(f)(b,c) = coend over a of P(a,b,c) (x) f(a).
CayleyResult cayley(const TriModule& p, const Copresheaf& f);
VNat cayley_map(const CayleyResult& cf, const CayleyResult& cg, const VNat& alpha);

} // namespace kanex
