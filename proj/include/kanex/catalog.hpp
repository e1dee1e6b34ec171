#pragma once

// Finite monoids and groups given by tables, and the small categories built
// from them that the examples and batteries run on.

#include <string>
#include <vector>

#include "kanex/encat.hpp"

namespace kanex {

struct FiniteMonoid
{
    std::string name;
    std::vector<std::string> elements;
    /// mul[x * size + y] = x . y
    std::vector<std::size_t> mul;
    std::size_t unit = 0;

    std::size_t size() const { return elements.size(); }
    std::size_t op(std::size_t x, std::size_t y) const { return mul[x * size() + y]; }
};

/// Throws InvalidStructure unless the table is associative with the given unit.
void validate_monoid(const FiniteMonoid& m);
bool is_group(const FiniteMonoid& m);
/// Throws InvalidStructure for non-groups.
std::vector<std::size_t> inverses(const FiniteMonoid& g);

FiniteMonoid trivial_group();
FiniteMonoid cyclic_group(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order (identity first), composed as functions.
FiniteMonoid symmetric_group3();
/// {e, x, y} with x.z = x and y.z = y for every z.
FiniteMonoid left_zero_monoid();

/// One object "*" with hom k[M] and composition e_g (x) e_h -> e_{g.h}.
CatRef monoid_algebra_category(const FiniteMonoid& m, const Field& k);
/// FinSet version: one object "*" with hom the underlying set of M.
CatRef monoid_set_category(const FiniteMonoid& m);
/// The linear functor e_h -> e_{phi(h)} of a monoid homomorphism; checked.
VFunctor monoid_hom_functor(const CatRef& source, const CatRef& target, const FiniteMonoid& h,
                            const FiniteMonoid& g, const std::vector<std::size_t>& phi);

/// One object with hom I.
CatRef terminal_category(const BaseCtx& ctx);
/// n objects, every hom I.
CatRef indiscrete_category(const BaseCtx& ctx, std::size_t n);
/// n objects, A(a,a) = I and the other homs empty / zero.
CatRef discrete_category(const BaseCtx& ctx, std::size_t n);
/// FinSet-discrete category whose objects are the monoid's elements.
CatRef monoid_discrete_category(const FiniteMonoid& m);

/// Functor between indiscrete or discrete categories on an object map; every
/// nonempty component is the identity of I.
VFunctor object_map_functor(const CatRef& source, const CatRef& target, std::vector<std::size_t> obj_map);
/// Into the terminal category, summing coordinates (FinVect) or the unique map
/// (FinSet).  Lawful for monoid algebras, discrete and indiscrete categories.
VFunctor augmentation(const CatRef& source, const CatRef& terminal);

} // namespace kanex
