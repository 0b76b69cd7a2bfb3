#pragma once

#include "aqcoh/pialg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aqc {

/// <f, g, h> for stems f, g and an element h of an algebra in degree
/// `h_degree`, read as W -f-> X -g-> Y -h-> Z with g o f = 0 and h o g = 0.
struct BracketTriple {
    StemElement f;
    StemElement g;
    int h_degree = 0;
    IntVector h;

    /// Degree of the ambient group: |h| + |g| + |f| + 1.
    int ambient_degree() const noexcept { return h_degree + g.degree + f.degree + 1; }
};

/// Throws StructuralError unless g o f = 0 and h o g = 0.
void check_triple(const BracketTriple& t, const PiModule& algebra);

/// h o pi_{|f|+|g|+1} + A_{|h|+|g|+1} o f inside the ambient group.
Subgroup indeterminacy(const BracketTriple& t, const PiModule& algebra);

/// Representative plus indeterminacy in a fixed degree of an algebra.
class TodaBracketCoset {
public:
    TodaBracketCoset() = default;
    TodaBracketCoset(std::string algebra, int degree, FGAbelianGroup ambient, IntVector representative,
                     Subgroup indeterminacy);

    const std::string& algebra() const noexcept { return algebra_; }
    int degree() const noexcept { return degree_; }
    const FGAbelianGroup& ambient() const noexcept { return ambient_; }
    const IntVector& representative() const noexcept { return representative_; }
    const Subgroup& indeterminacy() const noexcept { return indeterminacy_; }

    bool contains(std::span<const Integer> x) const;
    /// Sorted elements; the ambient group must be finite.
    std::vector<IntVector> elements() const;
    /// Same ambient and the same subset.
    bool same_set(const TodaBracketCoset& other) const;

private:
    std::string algebra_;
    int degree_ = 0;
    FGAbelianGroup ambient_;
    IntVector representative_;
    Subgroup indeterminacy_;
};

/// Throws StructuralError when the representative is not an ambient element
/// or the triple is not composable.
TodaBracketCoset bracket(const BracketTriple& t, const PiModule& algebra, std::span<const Integer> representative);

/// Elementwise image of a finite coset under a map defined on its degree.
std::vector<IntVector> pushforward(const TodaBracketCoset& c, const PiMap& phi);

enum class Realizability { contradiction, consistent };

struct RealizabilityVerdict {
    Realizability verdict = Realizability::consistent;
    std::vector<IntVector> intersection;
};

/// Realizability forces the pushed-forward set to meet the target bracket.
/// Throws StructuralError when the element shapes differ from the ambient.
RealizabilityVerdict realizability_contradiction(const std::vector<IntVector>& pushed,
                                                 const TodaBracketCoset& target);
RealizabilityVerdict realizability_contradiction(const std::vector<IntVector>& pushed,
                                                 const std::vector<IntVector>& reading, const FGAbelianGroup& ambient);

std::string to_string(Realizability r);

} // namespace aqc
