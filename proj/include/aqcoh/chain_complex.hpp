#pragma once

#include "aqcoh/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aqc {

/// A bounded complex of finitely generated abelian groups C_0 .. C_{N-1}.
///
/// `maps[i]` joins groups i and i+1. For a homological complex it is
/// d_{i+1}: C_{i+1} -> C_i; for a cohomological one it is the coboundary
/// C^i -> C^{i+1}. Groups outside the stored range are zero.
class ChainComplexAb {
public:
    enum class Direction { homological, cohomological };

    ChainComplexAb() = default;
    /// Throws StructuralError when shapes disagree or a composite is nonzero.
    ChainComplexAb(std::vector<FGAbelianGroup> groups, std::vector<AbHom> maps, Direction direction);

    Direction direction() const noexcept { return direction_; }
    std::size_t length() const noexcept { return groups_.size(); }
    const std::vector<FGAbelianGroup>& groups() const noexcept { return groups_; }
    const std::vector<AbHom>& maps() const noexcept { return maps_; }
    /// Group at index n, trivial outside the range.
    FGAbelianGroup group(long n) const;

    /// Map leaving degree n (d_n or the coboundary of C^n), zero when absent.
    AbHom outgoing(long n) const;
    /// Map arriving at degree n, zero when absent.
    AbHom incoming(long n) const;

    /// ker(outgoing) / im(incoming) with class and representative maps.
    Subquotient homology_subquotient(long n) const;
    FGAbelianGroup homology(long n) const { return homology_subquotient(n).group(); }

private:
    std::vector<FGAbelianGroup> groups_;
    std::vector<AbHom> maps_;
    Direction direction_ = Direction::homological;
};

/// Verdict at the junction between maps i and i+1 of a sequence.
struct Junction {
    std::size_t index = 0;
    bool composite_zero = true;
    bool kernel_in_image = true;
    /// Element of the middle group violating exactness.
    std::optional<IntVector> witness;

    bool exact() const noexcept { return composite_zero && kernel_in_image; }
};

struct ExactnessReport {
    std::vector<Junction> junctions;

    bool exact() const;
    /// First failing junction, if any.
    std::optional<Junction> first_failure() const;
};

/// Checks im(seq[i]) == ker(seq[i+1]) at every interior group.
/// Throws StructuralError when consecutive maps do not compose.
ExactnessReport verify_exact(const std::vector<AbHom>& seq);

} // namespace aqc
