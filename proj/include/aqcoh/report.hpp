#pragma once

#include "aqcoh/document.hpp"

#include <string>
#include <vector>

namespace aqc {

/// Exit codes shared by every subcommand.
enum ExitCode : int { exit_clean = 0, exit_parse = 1, exit_failure = 2 };

/// Human-readable text and its machine mirror (pretty-printed JSON).
struct Report {
    std::string text;
    std::string json;
    int exit_code = exit_clean;
};

/// Stem axioms, algebras, modules, maps, coefficient maps, resolutions and
/// bracket triples of a document.
Report validate_report(const Document& doc);

/// H^0..H^k of an algebra with coefficients in a module. An empty
/// resolution name picks the first resolution of the algebra.
Report cohomology_report(const Document& doc, const std::string& algebra, const std::string& module,
                         const std::string& resolution, int max_degree);

/// Cohomology of a map with the long exact sequence check. An empty
/// coefficient name uses the first coefficient map declared over the map,
/// or its loop when there is none.
Report arrow_report(const Document& doc, const std::string& map, const std::string& coefficients, int max_degree);

/// Obstruction host groups for `stages` stages plus every realizability
/// check recorded for the map.
Report obstruct_report(const Document& doc, const std::string& map, int stages);

/// Indeterminacy and elements of each declared bracket, and every
/// realizability check.
Report bracket_report(const Document& doc);

/// Result of one realizability check: the pushed-forward coset and the
/// verdict against each reading of the target bracket.
struct CheckOutcome {
    std::string name;
    std::string map;
    std::vector<IntVector> pushed;
    std::vector<std::pair<std::string, RealizabilityVerdict>> readings;

    /// CONTRADICTION when every reading is contradicted.
    Realizability verdict() const;
};

CheckOutcome run_check(const Document& doc, const RealizabilityEntry& check);

} // namespace aqc
