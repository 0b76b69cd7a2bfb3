#pragma once

#include "aqcoh/cohomology.hpp"
#include "aqcoh/toda.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqc {

/// Malformed input: bad JSON syntax (with line and column), a missing or
/// mistyped field, or an unresolved name.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoefficientMapEntry {
    PiMap tau;
    std::string over;
};

struct BracketEntry {
    std::string name;
    std::string algebra;
    BracketTriple triple;
    IntVector representative;
    std::string f_text, g_text, h_text;
};

struct Reading {
    std::string label;
    std::vector<IntVector> elements;
};

struct RealizabilityEntry {
    std::string name;
    std::string map;
    std::string source_bracket;
    std::string target_bracket;
    std::vector<Reading> readings;
};

/// Everything a JSON input file declares, resolved and built. Names are the
/// join keys; the `*_order` lists keep the order of appearance.
struct Document {
    std::shared_ptr<const StemTable> stems;
    std::map<std::string, PiModule> algebras;
    std::map<std::string, PiModule> modules;
    std::map<std::string, PiMap> maps;
    std::map<std::string, CoefficientMapEntry> coefficient_maps;
    std::map<std::string, FreeResolution> resolutions;
    std::map<std::string, BracketEntry> brackets;
    std::vector<RealizabilityEntry> checks;

    std::vector<std::string> algebra_order, module_order, map_order, coefficient_order, resolution_order,
        bracket_order;

    /// Algebra or module by name; throws DocumentError.
    const PiModule& object(const std::string& name) const;
    const PiMap& map(const std::string& name) const;
    const FreeResolution& resolution(const std::string& name) const;
    /// First resolution (in document order) of the given algebra.
    const FreeResolution& resolution_of(const std::string& algebra) const;
    /// First coefficient map declared over `map`.
    const CoefficientMapEntry& coefficient_over(const std::string& map) const;
};

Document parse_document(std::string_view text);
Document load_document(const std::string& path);

/// "n", "n+2", "n-1" for a degree relative to the anchor.
std::string relative_degree(int d);

} // namespace aqc
