#pragma once

#include "aqcoh/abelian.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aqc {

/// An element of the stem group in a given degree, in canonical coordinates.
/// Degrees past the table's top are legal and carry the zero group.
struct StemElement {
    int degree = 0;
    IntVector coords;

    bool is_zero() const { return aqc::is_zero(coords); }
    friend bool operator==(const StemElement&, const StemElement&) = default;
};

struct StemGenerator {
    std::string name;
    int degree = 0;
    std::size_t index = 0;  // canonical coordinate in its degree
};

/// Truncated ring of stable stems pi_0 .. pi_top with bilinear composition.
///
/// Each degree carries a group in invariant-factor form and one name per
/// canonical generator. Products are given on generators; the unit (the
/// generator of pi_0 = Z) is filled in automatically.
class StemTable {
public:
    struct Product {
        std::string left, right, result;
        Integer multiple;
    };

    /// Throws StructuralError on malformed data (unknown names, degree
    /// mismatches, a non-canonical factor list, or products that do not
    /// respect torsion).
    StemTable(std::vector<std::pair<FGAbelianGroup, std::vector<std::string>>> groups, std::string unit,
              const std::vector<Product>& products);

    /// iota, eta, eta2 = eta o eta, nu, with eta o eta2 = eta2 o eta = 12 nu,
    /// through degree 5. pi_2 is Z/2.
    static const StemTable& standard();

    int top() const noexcept { return static_cast<int>(groups_.size()) - 1; }
    bool in_window(int d) const noexcept { return d >= 0 && d <= top(); }
    /// Throws WindowError outside [0, top].
    const FGAbelianGroup& group(int d) const;
    const std::vector<std::string>& names(int d) const;
    const std::string& unit() const noexcept { return unit_; }

    /// All generators of positive degree, by degree then coordinate.
    std::vector<StemGenerator> positive_generators() const;
    std::optional<StemGenerator> find(const std::string& name) const;
    /// Throws StructuralError for unknown names.
    StemElement element(const std::string& name, const Integer& multiple = 1) const;

    StemElement zero(int degree) const;
    StemElement reduce(int degree, std::span<const Integer> coords) const;
    StemElement add(const StemElement& a, const StemElement& b) const;
    StemElement scale(const StemElement& a, const Integer& m) const;
    /// a o b, landing in degree a + b (the zero group past the top).
    StemElement compose(const StemElement& a, const StemElement& b) const;

    /// "0", "eta", "12*nu", "eta + nu".
    std::string format(const StemElement& a) const;

    /// Generator-level products as declared (excluding the unit).
    const std::vector<Product>& declared_products() const noexcept { return declared_; }

private:
    IntVector generator_product(int i, std::size_t k, int j, std::size_t l) const;

    std::vector<FGAbelianGroup> groups_;
    std::vector<std::vector<std::string>> names_;
    std::string unit_;
    std::vector<Product> declared_;
    // (i, j) -> [k][l] -> coordinates in degree i + j
    std::map<std::pair<int, int>, std::vector<std::vector<IntVector>>> products_;
};

/// Stem group in degree i of the standard table.
const FGAbelianGroup& stem_group(int i);

/// Axiom failures of a table: associativity on generator triples and
/// two-sided unit. Empty when the table is a graded ring.
std::vector<std::string> check_stem_axioms(const StemTable& table);

} // namespace aqc
