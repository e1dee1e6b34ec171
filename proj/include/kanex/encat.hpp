#pragma once

// Finite V-categories, V-functors, V-valued modules of mixed variance and
// natural transformations between them.
//
// Composition is comp(a, c, b) : A(c,b) (x) A(a,c) -> A(a,b).  Modules carry a
// single joint action.  For legs l_0 .. l_{k-1} and a move src -> dst the joint
// action has domain H_{k-1} (x) ... (x) H_0 (x) M(src), where H_i = A(src_i, dst_i)
// on a covariant leg and A(dst_i, src_i) on a contravariant one.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kanex/vbase.hpp"

namespace kanex {

class VCat
{
public:
    using HomFn = std::function<VObj(std::size_t a, std::size_t b)>;
    using CompFn = std::function<VMap(std::size_t a, std::size_t c, std::size_t b)>;
    using IdentFn = std::function<VMap(std::size_t a)>;

    /// Builds and shape-checks a category; throws InvalidStructure on malformed data.
    static std::shared_ptr<const VCat> build(const BaseCtx& ctx, std::vector<std::string> objects,
                                             const HomFn& hom, const CompFn& comp, const IdentFn& ident);

    const BaseCtx& ctx() const { return ctx_; }
    std::size_t size() const { return objects_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& name(std::size_t a) const { return objects_.at(a); }
    /// Throws UnknownObject.
    std::size_t index(const std::string& name) const;

    VObj hom(std::size_t a, std::size_t b) const { return homs_[a * size() + b]; }
    const VMap& comp(std::size_t a, std::size_t c, std::size_t b) const
    {
        return comps_[(a * size() + c) * size() + b];
    }
    const VMap& ident(std::size_t a) const { return idents_[a]; }

    friend bool operator==(const VCat&, const VCat&) = default;

private:
    VCat(BaseCtx ctx) : ctx_(ctx) {}

    BaseCtx ctx_;
    std::vector<std::string> objects_;
    std::vector<VObj> homs_;
    std::vector<VMap> comps_;
    std::vector<VMap> idents_;
};

using CatRef = std::shared_ptr<const VCat>;

bool same_category(const CatRef& a, const CatRef& b);

class VFunctor
{
public:
    using MapFn = std::function<VMap(std::size_t a, std::size_t b)>;

    static VFunctor build(CatRef source, CatRef target, std::vector<std::size_t> obj_map, const MapFn& map);

    const CatRef& source() const { return source_; }
    const CatRef& target() const { return target_; }
    std::size_t obj(std::size_t a) const { return obj_map_[a]; }
    const std::vector<std::size_t>& obj_map() const { return obj_map_; }
    /// A(a,b) -> C(Na,Nb).
    const VMap& map(std::size_t a, std::size_t b) const { return maps_[a * source_->size() + b]; }

private:
    VFunctor() = default;

    CatRef source_;
    CatRef target_;
    std::vector<std::size_t> obj_map_;
    std::vector<VMap> maps_;
};

VFunctor identity_functor(const CatRef& a);

// --- modules ----------------------------------------------------------------

enum class Variance { Co, Contra };

class Module
{
public:
    using Tuple = std::vector<std::size_t>;
    using ValueFn = std::function<VObj(const Tuple&)>;
    using JointFn = std::function<VMap(const Tuple& src, const Tuple& dst)>;
    /// One-sided action moving leg `leg` of src to object x: H (x) M(src) -> M(src[leg := x]).
    using OneSidedFn = std::function<VMap(std::size_t leg, const Tuple& src, std::size_t x)>;

    static Module build(CatRef cat, std::vector<Variance> legs, const ValueFn& value, const JointFn& joint);
    /// Assembles the joint action from one-sided ones, leg 0 acting first.
    static Module from_one_sided(CatRef cat, std::vector<Variance> legs, const ValueFn& value,
                                 const OneSidedFn& act);

    const CatRef& cat() const { return d_->cat; }
    const BaseCtx& ctx() const { return d_->cat->ctx(); }
    const std::vector<Variance>& legs() const { return d_->legs; }
    std::size_t arity() const { return d_->legs.size(); }
    /// Number of object tuples, n^arity.
    std::size_t count() const { return d_->values.size(); }

    std::size_t index(const Tuple& t) const;
    Tuple tuple(std::size_t index) const;

    VObj value(const Tuple& t) const { return d_->values[index(t)]; }
    VObj value_at(std::size_t i) const { return d_->values[i]; }
    const VMap& joint(const Tuple& src, const Tuple& dst) const
    {
        return d_->joints[index(src) * count() + index(dst)];
    }
    /// The hom factor on leg `leg` for moving src[leg] to x.
    VObj leg_hom(std::size_t leg, std::size_t from, std::size_t to) const;
    /// H_{k-1} (x) ... (x) H_0, the hom part of the joint action's domain.
    VObj joint_hom(const Tuple& src, const Tuple& dst) const;
    /// Joint action with identities inserted on every other leg.
    VMap one_sided(std::size_t leg, const Tuple& src, std::size_t x) const;

    // Conveniences for arity 1.
    VObj value(std::size_t a) const { return d_->values[a]; }
    /// Covariant: A(a,b) (x) f(a) -> f(b).  Contravariant: A(b,a) (x) f(a) -> f(b).
    const VMap& act(std::size_t a, std::size_t b) const { return d_->joints[a * count() + b]; }

    friend bool operator==(const Module& x, const Module& y);

private:
    struct Data
    {
        CatRef cat;
        std::vector<Variance> legs;
        std::vector<VObj> values;
        std::vector<VMap> joints;
    };

    Module() = default;

    std::shared_ptr<const Data> d_;
};

using Copresheaf = Module;
using Presheaf = Module;
using Bimodule = Module;
using TriModule = Module;

/// Leg layouts of the named module kinds.
inline const std::vector<Variance> kCopresheafLegs{Variance::Co};
inline const std::vector<Variance> kPresheafLegs{Variance::Contra};
inline const std::vector<Variance> kBimoduleLegs{Variance::Contra, Variance::Co};
inline const std::vector<Variance> kTriModuleLegs{Variance::Contra, Variance::Contra, Variance::Co};

/// Throws InvalidStructure unless m has exactly the given legs.
void require_legs(const Module& m, const std::vector<Variance>& legs, const char* what);

// --- natural transformations -------------------------------------------------

class VNat
{
public:
    VNat(Module source, Module target, std::vector<VMap> components);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const VMap& component(std::size_t i) const { return components_[i]; }
    const VMap& component(const Module::Tuple& t) const { return components_[source_.index(t)]; }
    const std::vector<VMap>& components() const { return components_; }

    friend bool operator==(const VNat&, const VNat&);

private:
    Module source_;
    Module target_;
    std::vector<VMap> components_;
};

VNat identity_nat(const Module& m);
/// beta after alpha.
VNat compose(const VNat& beta, const VNat& alpha);
/// Componentwise iso test.
bool is_iso(const VNat& alpha);

// --- law checking ------------------------------------------------------------

struct Violation
{
    std::string law;
    std::vector<std::size_t> at;
    VMap lhs;
    VMap rhs;
};

struct LawReport
{
    std::vector<Violation> violations;

    bool lawful() const { return violations.empty(); }
    void check(const std::string& law, std::vector<std::size_t> at, const VMap& lhs, const VMap& rhs);
    void merge(const LawReport& other);
};

LawReport check_category(const VCat& a);
LawReport check_functor(const VFunctor& n);
LawReport check_action(const Module& m);
LawReport check_natural(const VNat& alpha);

// --- constructions -----------------------------------------------------------

Copresheaf representable(const CatRef& a, std::size_t b);
Presheaf corepresentable(const CatRef& a, std::size_t b);
/// S(a,b) = A(a,b) with composition on both sides.
Bimodule hom_bimodule(const CatRef& a);
/// The module with every value zero / empty.
Module zero_module(const CatRef& a, std::vector<Variance> legs);
/// Precomposes every leg with N.
Module restrict_along(const VFunctor& n, const Module& g);
VNat restrict_along(const VFunctor& n, const VNat& alpha);

CatRef opposite(const CatRef& a);
VFunctor opposite_functor(const VFunctor& n, const CatRef& source_op, const CatRef& target_op);
/// Reads a module as one on A^op with every leg's variance flipped; the action
/// maps are literally the same.
Module flip_variance(const Module& m, const CatRef& a_op);

/// Free copresheaf on generators X_a: f = (+)_a A(a,-) (x) X_a.
Copresheaf free_copresheaf(const CatRef& a, const std::vector<VObj>& generators);
/// Summand offset of A(a,y) (x) X_a inside the free value at y.
std::size_t free_offset(const CatRef& a, const std::vector<VObj>& generators, std::size_t summand, std::size_t y);
/// The natural map free(gens) -> target sending generator i at object a to images[a][i] : I -> target(a).
VNat free_map(const std::vector<VObj>& generators, const Copresheaf& free_source, const Copresheaf& target,
              const std::vector<std::vector<VMap>>& images);

struct Quotient
{
    Module value;
    VNat quotient;
};

/// Valuewise coequalizer of a parallel pair of natural transformations.
Quotient coequalize(const VNat& f, const VNat& g);

struct CopresheafSpec
{
    std::vector<VObj> generators;
    /// Quotient-of-free: generators of the relation module and the two images
    /// of each relation generator, per object.
    std::vector<VObj> relations;
    std::vector<std::vector<VMap>> lhs;
    std::vector<std::vector<VMap>> rhs;
};

Copresheaf generate_copresheaf(const CatRef& a, const CopresheafSpec& spec);
/// Free spec with generator sizes in [0, max_generators] (at least one nonzero).
CopresheafSpec random_free_spec(const CatRef& a, std::mt19937_64& rng, std::size_t max_generators);
/// Quotient of a random free copresheaf by one random relation.
CopresheafSpec random_quotient_spec(const CatRef& a, std::mt19937_64& rng, std::size_t max_generators);

// --- natural transformation spaces -------------------------------------------

struct NatSpace
{
    /// FinVect: dimension of the solution space.  FinSet: number of solutions
    /// (capped; see `complete`).
    std::size_t size = 0;
    bool complete = true;
    /// FinVect: a basis.  FinSet: the solutions found.
    std::vector<VNat> elements;
};

/// Solves the naturality equations exactly: a linear system over the field, or
/// backtracking with propagation over tables.  The FinSet search stops after `cap` solutions.
NatSpace nat_space(const Module& f, const Module& g, std::size_t cap = 4096);

/// Identity first when f == g, then the basis or enumerated solutions, then
/// `samples` seeded random combinations (FinVect).  Throws EmptySolution when
/// no transformation exists.
std::vector<VNat> generate_nat(const Module& f, const Module& g, std::uint64_t seed, std::size_t samples = 4);

} // namespace kanex
