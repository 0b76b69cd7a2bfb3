#pragma once

#include "aqcoh/chain_complex.hpp"
#include "aqcoh/pialg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aqc {

struct FreeGenerator {
    std::string name;
    int degree = 0;
};

/// Free module over the stems on named generators of given degrees.
class FreeGradedModule {
public:
    FreeGradedModule() = default;
    explicit FreeGradedModule(std::vector<FreeGenerator> generators, const StemTable& stems = StemTable::standard());

    const std::vector<FreeGenerator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }
    const StemTable& stems() const noexcept { return *stems_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    std::vector<FreeGenerator> generators_;
    const StemTable* stems_ = &StemTable::standard();
};

/// Homogeneous element of total degree `degree`: one stem element of degree
/// degree - |g| per generator g (empty coordinates when that stem degree is
/// outside the table).
struct FreeElement {
    int degree = 0;
    std::vector<IntVector> parts;

    bool is_zero() const;
    friend bool operator==(const FreeElement&, const FreeElement&) = default;
};

struct FreeTerm {
    std::string generator;
    std::string stem;  // a stem generator name, e.g. "iota", "eta2"
    Integer coefficient;
};

FreeElement zero_element(const FreeGradedModule& f, int degree);
/// Sum of coefficient * generator o stem; throws StructuralError on a
/// degree mismatch or unknown name.
FreeElement make_element(const FreeGradedModule& f, int degree, const std::vector<FreeTerm>& terms);
FreeElement add(const FreeGradedModule& f, const FreeElement& a, const FreeElement& b);
/// x o theta.
FreeElement compose_right(const FreeGradedModule& f, const FreeElement& x, const StemElement& theta);
/// "0", "2*y + x.eta2".
std::string format(const FreeGradedModule& f, const FreeElement& x);

/// Degree-preserving map of free modules fixed by generator images.
struct FreeModuleMap {
    FreeGradedModule source;
    FreeGradedModule target;
    std::vector<FreeElement> images;  // one per source generator, of that generator's degree

    static FreeModuleMap identity(const FreeGradedModule& f);
    static FreeModuleMap zero(const FreeGradedModule& source, const FreeGradedModule& target);
};

FreeElement apply(const FreeModuleMap& f, const FreeElement& x);
/// g after f.
FreeModuleMap compose(const FreeModuleMap& g, const FreeModuleMap& f);

/// A free module in one degree: the direct sum over generators of the stem
/// group in degree d - |g|. Block coordinates are the concatenated parts.
struct RealizedDegree {
    int degree = 0;
    DirectSum sum;
    std::vector<std::string> labels;  // one per block coordinate

    const FGAbelianGroup& group() const noexcept { return sum.group; }
    IntVector to_canonical(const FreeElement& x) const;
    FreeElement from_canonical(std::span<const Integer> c) const;
    std::string format(std::span<const Integer> c) const;
};

RealizedDegree realize_degree(const FreeGradedModule& f, int d);
AbHom induced_hom(const FreeModuleMap& f, int d);
/// The module map F -> M sending generator i to images[i] in M_{|g_i|}, in degree d.
AbHom evaluate(const FreeGradedModule& f, const std::vector<IntVector>& images, const PiModule& m, int d);

/// Normalized chain form of a free simplicial resolution:
/// levels V_0 .. V_L, differentials[k-1] = d_k: V_k -> V_{k-1}, and the
/// augmentation V_0 -> algebra given on generators.
struct FreeResolution {
    std::string name;
    std::string algebra;
    std::vector<FreeGradedModule> levels;
    std::vector<FreeModuleMap> differentials;
    std::vector<IntVector> augmentation;

    std::size_t length() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
    const FreeGradedModule& level(std::size_t k) const;
    /// d_k in degree d; zero map when either side is absent.
    AbHom boundary(std::size_t k, int d) const;
    AbHom augmentation_hom(const PiModule& algebra, int d) const;
};

struct ResolutionIssue {
    std::string kind;  // "shape", "d2", "augmentation", "homology"
    std::size_t level = 0;
    int degree = 0;
    std::string detail;
};

struct ResolutionReport {
    std::string subject;
    std::vector<ResolutionIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
};

/// d^2 = 0, augmentation o d_1 = 0, H_0 = algebra via the augmentation and
/// H_k = 0 for 1 <= k < L, in every degree of the algebra's window.
ResolutionReport validate_resolution(const FreeResolution& r, const PiModule& algebra);

/// Greedy construction: for each level and each degree (ascending) add one
/// generator per canonical generator of (kernel of the previous map) /
/// (current image).
FreeResolution build_resolution(const PiModule& algebra, std::size_t length, std::string name = {});

/// Chain map V -> W over phi, one FreeModuleMap per level of the source
/// resolution. Solved generator by generator; when the solution set is a
/// finite coset the lexicographically least canonical solution is used.
/// Throws InternalError if a system has no solution or a square fails.
std::vector<FreeModuleMap> lift_map(const PiMap& phi, const FreeResolution& source, const FreeResolution& target);

/// Both commuting conditions of a chain map over phi, in every degree of
/// the source window. Returns a description of the first failure.
std::optional<std::string> check_chain_map(const PiMap& phi, const FreeResolution& source,
                                           const FreeResolution& target, const std::vector<FreeModuleMap>& lift);

} // namespace aqc
