#pragma once

// The two monoidal closed bases: finite sets and finite-dimensional vector
// spaces over Q or F_p.  Objects are sizes with canonical elements/bases
// 0..n-1.  Tensor products are indexed left-major, (x, y) -> x * |Y| + y, in
// both bases, which makes associators and unitors literal identities; only
// the symmetry (and general factor permutations) move indices.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kanex/errors.hpp"
#include "kanex/field.hpp"
#include "kanex/matrix.hpp"

namespace kanex {

enum class BaseKind { FinSet, FinVect };

class BaseCtx
{
public:
    static BaseCtx finset() { return BaseCtx(BaseKind::FinSet, Field::rationals()); }
    static BaseCtx finvect(Field k) { return BaseCtx(BaseKind::FinVect, k); }

    BaseKind kind() const { return kind_; }
    bool is_set() const { return kind_ == BaseKind::FinSet; }
    bool is_linear() const { return kind_ == BaseKind::FinVect; }
    /// Coefficient field; only meaningful for FinVect.
    const Field& field() const { return field_; }
    std::string name() const;

    friend bool operator==(const BaseCtx&, const BaseCtx&) = default;

private:
    BaseCtx(BaseKind kind, Field k) : kind_(kind), field_(k) {}

    BaseKind kind_;
    Field field_;
};

/// Cardinality (FinSet) or dimension (FinVect).
struct VObj
{
    std::size_t size = 0;

    friend auto operator<=>(const VObj&, const VObj&) = default;
};

class VMap
{
public:
    using Table = std::vector<std::size_t>;

    /// FinSet map given by its table; dom = table.size().
    static VMap from_table(const BaseCtx& ctx, VObj cod, Table table);
    /// FinVect map with one column per domain basis vector.
    static VMap from_matrix(const BaseCtx& ctx, Matrix m);

    const BaseCtx& ctx() const { return ctx_; }
    VObj dom() const { return dom_; }
    VObj cod() const { return cod_; }

    const Table& table() const;
    const Matrix& matrix() const;

    friend bool operator==(const VMap&, const VMap&) = default;

private:
    VMap(BaseCtx ctx, VObj dom, VObj cod, std::variant<Table, Matrix> data)
        : ctx_(ctx), dom_(dom), cod_(cod), data_(std::move(data))
    {
    }

    BaseCtx ctx_;
    VObj dom_;
    VObj cod_;
    std::variant<Table, Matrix> data_;
};

// --- category structure -----------------------------------------------------

VMap identity(const BaseCtx& ctx, VObj x);
/// g after f.
VMap compose(const VMap& g, const VMap& f);
/// compose(fs[0], compose(fs[1], ...)); the last map is applied first.
VMap compose_all(std::initializer_list<VMap> fs);

// --- monoidal structure -----------------------------------------------------

VObj unit_obj();
VObj tensor(VObj x, VObj y);
VObj tensor_all(const std::vector<VObj>& xs);
VMap tensor(const VMap& f, const VMap& g);
VMap tensor_all(const std::vector<VMap>& fs);
/// X (x) Y -> Y (x) X.
VMap symmetry(const BaseCtx& ctx, VObj x, VObj y);
/// Rearranges a tensor of factors: output factor i is input factor perm[i].
VMap permute_factors(const BaseCtx& ctx, const std::vector<VObj>& factors,
                     const std::vector<std::size_t>& perm);
/// (X (x) Y) (x) Z -> X (x) (Y (x) Z); the identity under left-major indexing.
VMap associator(const BaseCtx& ctx, VObj x, VObj y, VObj z);
/// I (x) X -> X; the identity under left-major indexing.
VMap left_unitor(const BaseCtx& ctx, VObj x);
VMap right_unitor(const BaseCtx& ctx, VObj x);

// --- closed structure -------------------------------------------------------

/// FinSet: all tables X -> Y, enumerated lexicographically (table[0] most
/// significant digit).  FinVect: dim |X||Y|, coordinate x * |Y| + y holds
/// matrix entry (y, x).
VObj internal_hom(const BaseCtx& ctx, VObj x, VObj y);
/// Element of [X, Y] naming f : X -> Y.
VMap name(const VMap& f);
/// Inverse of `name`, for an element e : I -> [X, Y].
VMap unname(const VMap& e, VObj x, VObj y);
/// Hom(Z (x) X, Y) -> Hom(Z, [X, Y]).
VMap curry(const VMap& f, VObj z, VObj x);
/// Hom(Z, [X, Y]) -> Hom(Z (x) X, Y).
VMap uncurry(const VMap& h, VObj x, VObj y);
/// [X, Y] (x) X -> Y.
VMap eval(const BaseCtx& ctx, VObj x, VObj y);

// --- elements ---------------------------------------------------------------

/// The i-th element (FinSet) or basis vector (FinVect) of X, as a map I -> X.
VMap element(const BaseCtx& ctx, VObj x, std::size_t i);
/// Builds dom -> cod from its values on elements (FinSet) or basis vectors (FinVect).
VMap tabulate(const BaseCtx& ctx, VObj dom, VObj cod, const std::function<VMap(const VMap&)>& on_element);
/// Applies f to an element x : I -> dom.
inline VMap apply(const VMap& f, const VMap& x) { return compose(f, x); }

// --- linear structure (FinVect only) ----------------------------------------

VMap zero_map(const BaseCtx& ctx, VObj x, VObj y);
VMap add(const VMap& f, const VMap& g);
VMap subtract(const VMap& f, const VMap& g);
VMap scale(const Scalar& c, const VMap& f);

// --- finite (co)limits ------------------------------------------------------

struct ColimitCocone
{
    VObj apex;
    /// Coproduct: injections.  Coequalizer: the quotient.  Pushout: the two legs.
    std::vector<VMap> legs;
    /// Coequalizer/pushout: the parallel pair or span it was built from.
    std::vector<VMap> diagram;
    /// Coequalizer: a section of the quotient (minimal class representatives
    /// in FinSet, the pivot complement in FinVect).
    std::optional<VMap> section;
    std::function<VMap(const std::vector<VMap>&)> factorizer;

    /// The unique mediating map out of the apex.  Throws IncompatibleCandidate.
    VMap factor(const std::vector<VMap>& cocone) const { return factorizer(cocone); }
};

struct LimitCone
{
    VObj apex;
    /// Product: projections.  Equalizer: the inclusion.  Pullback: the two legs.
    std::vector<VMap> legs;
    std::vector<VMap> diagram;
    std::function<VMap(const std::vector<VMap>&)> factorizer;

    /// The unique mediating map into the apex.  Throws IncompatibleCandidate.
    VMap factor(const std::vector<VMap>& cone) const { return factorizer(cone); }
};

ColimitCocone coproduct(const BaseCtx& ctx, const std::vector<VObj>& xs);
ColimitCocone coequalizer(const VMap& f, const VMap& g);
/// Pushout of the span Y <-f- X -g-> Z.
ColimitCocone pushout(const VMap& f, const VMap& g);

LimitCone product(const BaseCtx& ctx, const std::vector<VObj>& xs);
LimitCone equalizer(const VMap& f, const VMap& g);
/// Pullback of the cospan X -f-> Z <-g- Y.
LimitCone pullback(const VMap& f, const VMap& g);

/// The coequalizer of (X (x) f, X (x) g): tensoring preserves coequalizers in
/// both bases, so the quotient and section are X (x) q and X (x) s.
ColimitCocone tensor_left(VObj x, const ColimitCocone& coeq);

VMap factor_universal(const ColimitCocone& cocone, const std::vector<VMap>& candidate);
VMap factor_universal(const LimitCone& cone, const std::vector<VMap>& candidate);

/// Coproduct of maps, (+) f_i : (+) X_i -> (+) Y_i.
VMap direct_sum(const BaseCtx& ctx, const std::vector<VMap>& fs);
/// Copairing [h_0, ..., h_n] : (+) X_i -> Z.
VMap copair(const BaseCtx& ctx, const std::vector<VMap>& hs, VObj z);
/// Pairing <h_0, ..., h_n> : W -> prod Y_i.
VMap pair(const BaseCtx& ctx, const std::vector<VMap>& hs, VObj w);
/// X (x) ((+) Y_i) -> (+) (X (x) Y_i).
VMap distribute_left(const BaseCtx& ctx, VObj x, const std::vector<VObj>& ys);

// --- classification ---------------------------------------------------------

struct MapClass
{
    bool mono = false;
    bool epi = false;
    bool iso = false;
    bool split_epi = false;
    bool split_mono = false;
    bool regular_mono = false;
    std::optional<VMap> inverse;
    std::optional<VMap> section;
    std::optional<VMap> retraction;
    /// Cokernel pair (u, v) of m; m is regular exactly when it is their equalizer.
    std::optional<VMap> witness_u;
    std::optional<VMap> witness_v;
};

MapClass classify_map(const VMap& m);

} // namespace kanex
