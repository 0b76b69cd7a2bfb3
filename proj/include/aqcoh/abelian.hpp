#pragma once

#include "aqcoh/errors.hpp"
#include "aqcoh/matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aqc {

/// Finitely generated abelian group in invariant-factor form
///   Z/t_1 + ... + Z/t_k + Z^rank,   t_1 | t_2 | ... | t_k, t_i >= 2.
///
/// Canonical coordinates list the torsion summands first, then the free
/// ones; torsion coordinates are kept reduced into [0, t_i).
///
/// A group remembers the presentation it was built from: `presentation()`
/// is an m x r relation matrix on m presentation generators,
/// `to_canonical()` (ngens x m) sends presentation coordinates to canonical
/// ones and `from_canonical()` (m x ngens) lifts canonical generators back.
class FGAbelianGroup {
public:
    /// The trivial group.
    FGAbelianGroup();

    static FGAbelianGroup trivial() { return {}; }
    static FGAbelianGroup free(std::size_t rank);
    /// Z/order; order 0 gives Z, order 1 the trivial group.
    static FGAbelianGroup cyclic(const Integer& order);
    /// Direct sum of cyclic groups of the given orders (0 = Z). The orders
    /// become the presentation; they need not form a divisibility chain.
    static FGAbelianGroup from_cyclic_orders(std::span<const Integer> orders);
    static FGAbelianGroup from_invariants(std::vector<Integer> torsion, std::size_t rank);

    friend FGAbelianGroup cokernel(const IntMatrix& relations);

    const std::vector<Integer>& torsion() const noexcept { return torsion_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t ngens() const noexcept { return torsion_.size() + rank_; }
    /// Order of canonical generator i, 0 for free generators.
    Integer generator_order(std::size_t i) const;
    /// Orders of all canonical generators, 0 meaning infinite.
    IntVector generator_orders() const;

    bool is_trivial() const noexcept { return ngens() == 0; }
    bool is_finite() const noexcept { return rank_ == 0; }
    std::optional<Integer> order() const;

    std::size_t presentation_gens() const noexcept { return to_canonical_.cols(); }
    const IntMatrix& presentation() const noexcept { return presentation_; }
    const IntMatrix& to_canonical() const noexcept { return to_canonical_; }
    const IntMatrix& from_canonical() const noexcept { return from_canonical_; }

    IntVector zero() const { return IntVector(ngens()); }
    IntVector basis(std::size_t i) const;
    IntVector reduce(std::span<const Integer> canonical) const;
    IntVector from_presentation(std::span<const Integer> presentation_coords) const;
    IntVector to_presentation(std::span<const Integer> canonical) const;
    bool contains_coordinates(std::span<const Integer> x) const { return x.size() == ngens(); }

    /// All elements in canonical coordinates, lexicographic order.
    /// Throws if the group is infinite or larger than `limit`.
    std::vector<IntVector> elements(std::size_t limit = 1u << 20) const;

    /// Isomorphism type equality (same invariant factors and rank).
    bool isomorphic(const FGAbelianGroup& other) const noexcept {
        return rank_ == other.rank_ && torsion_ == other.torsion_;
    }

    /// "0", "Z/2", "Z/2 + Z/4 + Z".
    std::string to_string() const;
    /// Invariant factors followed by one 0 per free summand.
    IntVector invariant_factors() const;

private:
    std::vector<Integer> torsion_;
    std::size_t rank_ = 0;
    IntMatrix presentation_;
    IntMatrix to_canonical_;
    IntMatrix from_canonical_;
};

/// Z^rows modulo the column span of `relations`.
FGAbelianGroup cokernel(const IntMatrix& relations);

/// Homomorphism between canonical groups; matrix is target.ngens x source.ngens.
class AbHom {
public:
    AbHom() = default;
    /// Entries are reduced into the target; well-definedness is not
    /// enforced here, see `torsion_defect`.
    AbHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix);

    static AbHom zero(FGAbelianGroup source, FGAbelianGroup target);
    static AbHom identity(const FGAbelianGroup& group);
    /// Build from a matrix written in presentation coordinates of both groups.
    static AbHom from_presentation(FGAbelianGroup source, FGAbelianGroup target, const IntMatrix& m);

    const FGAbelianGroup& source() const noexcept { return source_; }
    const FGAbelianGroup& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    IntVector apply(std::span<const Integer> x) const;
    bool is_zero() const;
    /// First source generator of order t whose image is not killed by t.
    std::optional<std::size_t> torsion_defect() const;
    bool well_defined() const { return !torsion_defect(); }

    friend bool operator==(const AbHom& a, const AbHom& b);

private:
    FGAbelianGroup source_;
    FGAbelianGroup target_;
    IntMatrix matrix_;
};

/// g after f.
AbHom compose(const AbHom& g, const AbHom& f);
AbHom operator+(const AbHom& a, const AbHom& b);
AbHom operator-(const AbHom& a, const AbHom& b);
AbHom operator-(const AbHom& a);

struct Subgroup {
    FGAbelianGroup group;
    AbHom inclusion;
};

/// Subgroup of `ambient` generated by the columns (canonical coordinates).
Subgroup subgroup_generated(const FGAbelianGroup& ambient, const IntMatrix& generators);
Subgroup kernel(const AbHom& f);
Subgroup image(const AbHom& f);

struct Quotient {
    FGAbelianGroup group;
    AbHom projection;
};

/// ambient / <generators>.
Quotient quotient(const FGAbelianGroup& ambient, const IntMatrix& generators);

/// Some x with f(x) = y, or nullopt.
std::optional<IntVector> preimage(const AbHom& f, std::span<const Integer> y);
/// Whether y lies in the subgroup generated by the columns of `generators`.
bool in_span(const FGAbelianGroup& ambient, const IntMatrix& generators, std::span<const Integer> y);

/// Direct sum with canonical coordinates computed from the concatenated
/// canonical coordinates of the summands (the "block" coordinates).
struct DirectSum {
    FGAbelianGroup group;
    std::vector<FGAbelianGroup> summands;
    std::vector<std::size_t> offsets;  // block coordinate offset of each summand
    std::size_t block_size = 0;

    /// Canonical element of the sum from one element per summand.
    IntVector inject(std::size_t summand, std::span<const Integer> x) const;
    /// Block coordinates of a canonical element (each block reduced).
    IntVector to_blocks(std::span<const Integer> x) const;
    IntVector component(std::span<const Integer> x, std::size_t summand) const;
};

DirectSum direct_sum(std::vector<FGAbelianGroup> summands);

/// Z / B for subgroups B <= Z of an ambient group, with explicit class
/// and representative maps. Used for homology and for greedy generator
/// selection in resolutions.
class Subquotient {
public:
    Subquotient() = default;
    /// `cycles` and `boundaries` are generator columns in ambient
    /// coordinates; every boundary must lie in the span of the cycles.
    Subquotient(FGAbelianGroup ambient, IntMatrix cycles, IntMatrix boundaries);

    const FGAbelianGroup& group() const noexcept { return group_; }
    const FGAbelianGroup& ambient() const noexcept { return ambient_; }

    /// Class of an ambient element lying in the cycle subgroup; nullopt otherwise.
    std::optional<IntVector> class_of(std::span<const Integer> cycle) const;
    IntVector representative(std::span<const Integer> cls) const;

private:
    FGAbelianGroup ambient_;
    IntMatrix cycles_;
    Quotient by_boundaries_;
    IntMatrix cycle_images_;  // cycles pushed into ambient / boundaries
    FGAbelianGroup group_;    // presented on the cycle generators
};

/// Rendering helpers shared by reports.
std::string format_vector(std::span<const Integer> v);

} // namespace aqc
