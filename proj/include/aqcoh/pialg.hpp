#pragma once

#include "aqcoh/stems.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aqc {

/// Group and generator labels in one degree of a graded object.
struct DegreePiece {
    FGAbelianGroup group;
    std::vector<std::string> names;  // one per canonical generator
};

/// Graded f.g. abelian group on a window [dmin, dmax] with a right action of
/// the stable stems, stored on named stem generators and extended
/// bilinearly. Serves both as a truncated stable Pi-algebra (base == name)
/// and as a module over one (base names the algebra). Bracket operations on
/// modules are trivial in the stable range and are never computed.
class PiModule {
public:
    PiModule() = default;
    PiModule(std::string name, std::string base, int dmin, std::vector<DegreePiece> pieces,
             const StemTable& stems = StemTable::standard());

    static PiModule zero(std::string name, std::string base, int dmin, int dmax,
                         const StemTable& stems = StemTable::standard());

    const std::string& name() const noexcept { return name_; }
    const std::string& base() const noexcept { return base_; }
    bool is_algebra() const noexcept { return base_ == name_; }
    bool brackets_trivial() const noexcept { return true; }
    const StemTable& stems() const noexcept { return *stems_; }

    int dmin() const noexcept { return dmin_; }
    int dmax() const noexcept { return dmin_ + static_cast<int>(pieces_.size()) - 1; }
    bool in_window(int d) const noexcept { return d >= dmin_ && d <= dmax(); }
    /// Trivial outside the window.
    FGAbelianGroup group(int d) const;
    const std::vector<std::string>& names(int d) const;
    bool is_zero() const;

    /// Records x o theta for canonical x in degree d; matrix is
    /// group(d + |theta|).ngens x group(d).ngens in canonical coordinates.
    void set_action(int d, const std::string& stem_generator, const IntMatrix& matrix);
    /// Right action of a stem element as a homomorphism group(d) -> group(d + |theta|).
    AbHom action(int d, const StemElement& theta) const;
    IntVector act(int d, std::span<const Integer> x, const StemElement& theta) const;
    /// The stored generator matrix, zero when unset.
    IntMatrix action_matrix(int d, const StemGenerator& g) const;

    /// Degree and basis vector of a named generator.
    std::optional<std::pair<int, IntVector>> find(const std::string& name) const;
    /// "0", "alpha", "2*beta", "x.eta + 3*y".
    std::string format(int d, std::span<const Integer> x) const;

    PiModule with_identity(std::string name, std::string base) const;

private:
    std::string name_;
    std::string base_;
    int dmin_ = 0;
    std::vector<DegreePiece> pieces_;
    const StemTable* stems_ = &StemTable::standard();
    std::map<std::pair<int, std::string>, IntMatrix> actions_;
};

using StablePiAlgebra = PiModule;

/// Free Pi-algebra on one generator of degree r, truncated to [dmin, dmax].
/// Basis names are "<gen>" and "<gen>.<stem>".
PiModule free_monogenic(const std::string& name, const std::string& generator, int r, int dmin, int dmax,
                        const StemTable& stems = StemTable::standard());

/// Degreewise homomorphisms commuting with the stem action.
class PiMap {
public:
    PiMap() = default;
    /// Missing degrees are zero; entries are checked for shape.
    PiMap(std::string name, PiModule source, PiModule target, std::map<int, IntMatrix> components);

    static PiMap identity(std::string name, const PiModule& m);

    const std::string& name() const noexcept { return name_; }
    const PiModule& source() const noexcept { return source_; }
    const PiModule& target() const noexcept { return target_; }
    AbHom component(int d) const;
    IntVector apply(int d, std::span<const Integer> x) const;

private:
    std::string name_;
    PiModule source_;
    PiModule target_;
    std::map<int, AbHom> components_;
};

struct Violation {
    std::string kind;  // "torsion", "associativity", "equivariance", "base"
    int degree = 0;
    std::string detail;
};

struct ValidationReport {
    std::string subject;
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Action axioms: each generator action respects torsion on both sides
/// (bilinearity) and (x o a) o b = x o (a o b) wherever both sides are
/// inside the window.
ValidationReport validate_algebra(const PiModule& m);
/// Well-defined components and f(x o a) = f(x) o a on every in-window pair.
ValidationReport validate_map(const PiMap& f);
/// validate_map plus the requirement that the bases match the algebra map.
ValidationReport coefficient_map(const PiMap& tau, const PiMap& over);

/// (Omega M)_d = M_{d+1}; a module over M's base (over M when M is an algebra).
PiModule loop(const PiModule& m, std::string name = {});
PiMap loop(const PiMap& f, std::string name = {});
/// Same groups and action, now regarded over the source of `along`.
PiModule restrict_scalars(const PiModule& m, const PiMap& along, std::string name = {});

} // namespace aqc
