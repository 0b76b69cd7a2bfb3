#include "aqcoh/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace aqc {

using ojson = nlohmann::ordered_json;

namespace {

ojson integer_json(const Integer& x) {
    try {
        return x.as_int64();
    } catch (const std::exception&) {
        return x.to_string();
    }
}

/// Invariant factors, 0 for each free summand.
ojson group_json(const FGAbelianGroup& g) {
    ojson out = ojson::array();
    for (const auto& t : g.invariant_factors())
        out.push_back(integer_json(t));
    return out;
}

ojson vector_json(std::span<const Integer> v) {
    ojson out = ojson::array();
    for (const auto& x : v)
        out.push_back(integer_json(x));
    return out;
}

ojson matrix_json(const IntMatrix& m) {
    ojson out = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(integer_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

/// Left-aligned columns separated by two spaces, with a rule under the header.
std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()), 0);
        for (std::size_t c = 0; c < r.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            line += rows[i][c];
            if (c + 1 < rows[i].size())
                line += std::string(width[c] - rows[i][c].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << "  " << line << '\n';
        if (i == 0) {
            std::size_t total = 0;
            for (std::size_t c = 0; c < width.size(); ++c)
                total += width[c] + (c + 1 < width.size() ? 2 : 0);
            os << "  " << std::string(total, '-') << '\n';
        }
    }
    return os.str();
}

std::string set_text(const PiModule& m, int d, const std::vector<IntVector>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + m.format(d, xs[i]);
    return s + "}";
}

ojson set_json(const PiModule& m, int d, const std::vector<IntVector>& xs) {
    ojson out = ojson::array();
    for (const auto& x : xs)
        out.push_back({{"text", m.format(d, x)}, {"coordinates", vector_json(x)}});
    return out;
}

Report finish(std::ostringstream& text, const ojson& j, int code) {
    return Report{text.str(), j.dump(2) + "\n", code};
}

struct Section {
    std::string kind;
    std::string subject;
    std::vector<std::string> problems;
};

void emit(std::ostringstream& os, ojson& list, const Section& s, bool& clean) {
    os << s.kind << ' ' << s.subject << ": " << (s.problems.empty() ? "ok" : "FAILED") << '\n';
    for (const auto& p : s.problems)
        os << "  " << p << '\n';
    clean = clean && s.problems.empty();
    list.push_back({{"kind", s.kind}, {"subject", s.subject}, {"ok", s.problems.empty()}, {"problems", s.problems}});
}

std::vector<std::string> problems_of(const ValidationReport& r) {
    std::vector<std::string> out;
    for (const auto& v : r.violations)
        out.push_back(v.kind + " at " + relative_degree(v.degree) + ": " + v.detail);
    return out;
}

const FreeResolution& pick_resolution(const Document& doc, const std::string& algebra, const std::string& name) {
    if (name.empty())
        return doc.resolution_of(algebra);
    const FreeResolution& r = doc.resolution(name);
    if (r.algebra != algebra)
        throw DocumentError("resolution '" + name + "' resolves " + r.algebra + ", not " + algebra);
    return r;
}

} // namespace

Realizability CheckOutcome::verdict() const {
    if (readings.empty())
        return Realizability::consistent;
    for (const auto& [label, v] : readings)
        if (v.verdict != Realizability::contradiction)
            return Realizability::consistent;
    return Realizability::contradiction;
}

CheckOutcome run_check(const Document& doc, const RealizabilityEntry& check) {
    const BracketEntry& src = doc.brackets.at(check.source_bracket);
    const BracketEntry& tgt = doc.brackets.at(check.target_bracket);
    const PiMap& phi = doc.map(check.map);
    const TodaBracketCoset coset = bracket(src.triple, doc.object(src.algebra), src.representative);
    CheckOutcome out{check.name, check.map, pushforward(coset, phi), {}};
    const FGAbelianGroup ambient = doc.object(tgt.algebra).group(tgt.triple.ambient_degree());
    for (const auto& r : check.readings)
        out.readings.emplace_back(r.label, realizability_contradiction(out.pushed, r.elements, ambient));
    return out;
}

// ------------------------------------------------------------- validate

Report validate_report(const Document& doc) {
    std::ostringstream os;
    ojson items = ojson::array();
    bool clean = true;
    emit(os, items, {"stems", "table", check_stem_axioms(*doc.stems)}, clean);
    for (const auto& n : doc.algebra_order)
        emit(os, items, {"algebra", n, problems_of(validate_algebra(doc.algebras.at(n)))}, clean);
    for (const auto& n : doc.module_order) {
        const PiModule& m = doc.modules.at(n);
        emit(os, items, {"module", n + " over " + m.base(), problems_of(validate_algebra(m))}, clean);
    }
    for (const auto& n : doc.map_order) {
        const PiMap& f = doc.maps.at(n);
        emit(os, items, {"map", n + ": " + f.source().name() + " -> " + f.target().name(), problems_of(validate_map(f))},
             clean);
    }
    for (const auto& n : doc.coefficient_order) {
        const CoefficientMapEntry& c = doc.coefficient_maps.at(n);
        emit(os, items,
             {"coefficient map", n + " over " + c.over, problems_of(coefficient_map(c.tau, doc.map(c.over)))}, clean);
    }
    for (const auto& n : doc.resolution_order) {
        const FreeResolution& r = doc.resolutions.at(n);
        std::vector<std::string> problems;
        for (const auto& i : validate_resolution(r, doc.object(r.algebra)).issues)
            problems.push_back(i.kind + " at level " + std::to_string(i.level) + ", degree " +
                               relative_degree(i.degree) + ": " + i.detail);
        emit(os, items, {"resolution", n + " of " + r.algebra + " (length " + std::to_string(r.length()) + ")", problems},
             clean);
    }
    for (const auto& n : doc.bracket_order) {
        const BracketEntry& b = doc.brackets.at(n);
        std::vector<std::string> problems;
        try {
            bracket(b.triple, doc.object(b.algebra), b.representative);
        } catch (const StructuralError& e) {
            problems.emplace_back(e.what());
        }
        emit(os, items, {"bracket", n + " in " + b.algebra, problems}, clean);
    }
    os << (clean ? "all checks passed\n" : "validation FAILED\n");
    return finish(os, {{"command", "validate"}, {"ok", clean}, {"checks", items}}, clean ? exit_clean : exit_failure);
}

// ----------------------------------------------------------- cohomology

Report cohomology_report(const Document& doc, const std::string& algebra, const std::string& module,
                         const std::string& resolution, int max_degree) {
    const FreeResolution& r = pick_resolution(doc, algebra, resolution);
    const PiModule& m = doc.object(module);
    const CochainComplex c = cochain_complex(r, m);
    std::ostringstream os;
    os << "cohomology of " << algebra << " with coefficients in " << module << " (resolution " << r.name << ")\n";
    std::vector<std::vector<std::string>> rows{{"n", "C^n", "d^n", "H^n"}};
    ojson degrees = ojson::array();
    for (int n = 0; n <= max_degree; ++n) {
        const FGAbelianGroup cn = c.group(n);
        const AbHom d = c.complex.outgoing(n);
        const FGAbelianGroup h = n < static_cast<int>(c.length()) ? c.complex.homology(n) : FGAbelianGroup();
        rows.push_back({std::to_string(n), cn.to_string(), d.matrix().is_zero() ? "0" : d.matrix().to_string(),
                        h.to_string()});
        degrees.push_back({{"n", n},
                           {"cochains", group_json(cn)},
                           {"coboundary", matrix_json(d.matrix())},
                           {"cohomology", group_json(h)}});
    }
    os << table(rows);
    if (max_degree >= static_cast<int>(c.length()))
        os << "degrees " << c.length() << " and above lie beyond the resolution and read as 0\n";
    return finish(os,
                  {{"command", "cohomology"},
                   {"algebra", algebra},
                   {"module", module},
                   {"resolution", r.name},
                   {"degrees", degrees}},
                  exit_clean);
}

// ---------------------------------------------------------------- arrow

Report arrow_report(const Document& doc, const std::string& map, const std::string& coefficients, int max_degree) {
    const PiMap& phi = doc.map(map);
    PiMap tau;
    std::string tau_name;
    if (!coefficients.empty()) {
        const auto it = doc.coefficient_maps.find(coefficients);
        if (it == doc.coefficient_maps.end())
            throw DocumentError("unknown coefficient map '" + coefficients + "'");
        if (it->second.over != map)
            throw DocumentError("coefficient map '" + coefficients + "' is declared over " + it->second.over);
        tau = it->second.tau;
    } else {
        bool found = false;
        for (const auto& n : doc.coefficient_order)
            if (doc.coefficient_maps.at(n).over == map) {
                tau = doc.coefficient_maps.at(n).tau;
                found = true;
                break;
            }
        if (!found)
            tau = loop(phi);
    }
    tau_name = tau.name();

    std::ostringstream os;
    ojson j{{"command", "arrow"}, {"map", map}, {"coefficients", tau_name}};
    const ValidationReport cv = coefficient_map(tau, phi);
    if (!cv.ok()) {
        os << "coefficient map " << tau_name << " is not compatible with " << map << '\n';
        for (const auto& p : problems_of(cv))
            os << "  " << p << '\n';
        j["ok"] = false;
        j["problems"] = problems_of(cv);
        return finish(os, j, exit_failure);
    }
    const FreeResolution& v = doc.resolution_of(phi.source().name());
    const FreeResolution& w = doc.resolution_of(phi.target().name());
    const std::vector<FreeModuleMap> lift = lift_map(phi, v, w);
    const ArrowCochainComplex a = arrow_complex(v, w, lift, tau);
    const LesData les = les_data(a);
    const LesReport rep = assemble_les(les);

    os << "cohomology of " << map << ": " << phi.source().name() << " -> " << phi.target().name()
       << " with coefficients " << tau_name << ": " << tau.source().name() << " -> " << tau.target().name() << '\n';
    os << "resolutions " << v.name << " -> " << w.name << ", lift:\n";
    for (std::size_t k = 0; k < lift.size(); ++k)
        for (std::size_t g = 0; g < lift[k].source.size(); ++g)
            os << "  " << lift[k].source.generators()[g].name << " -> "
               << format(lift[k].target, lift[k].images[g]) << '\n';

    std::vector<std::vector<std::string>> rows{{"n", "H^n_arrow", "H^n(X;M0)", "H^n(Y;M1)", "H^n(X;M1)"}};
    ojson degrees = ojson::array();
    for (int n = 0; n <= max_degree; ++n) {
        const auto pick = [&](const std::vector<FGAbelianGroup>& gs) {
            return n < static_cast<int>(gs.size()) ? gs[static_cast<std::size_t>(n)] : FGAbelianGroup();
        };
        const FGAbelianGroup h = pick(les.arrow), x0 = pick(les.x0), y1 = pick(les.y1), x1 = pick(les.x1);
        rows.push_back({std::to_string(n), h.to_string(), x0.to_string(), y1.to_string(), x1.to_string()});
        degrees.push_back({{"n", n},
                           {"arrow", group_json(h)},
                           {"source", group_json(x0)},
                           {"target", group_json(y1)},
                           {"mixed", group_json(x1)}});
    }
    os << table(rows);

    ojson junctions = ojson::array();
    for (const auto& jn : rep.exactness.junctions) {
        ojson e{{"at", rep.labels[jn.index]}, {"exact", jn.exact()}};
        if (jn.witness)
            e["witness"] = vector_json(*jn.witness);
        junctions.push_back(std::move(e));
    }
    const bool exact = rep.exactness.exact();
    if (exact) {
        os << "long exact sequence: exact at all " << rep.exactness.junctions.size() << " junctions\n";
    } else {
        const Junction f = *rep.exactness.first_failure();
        os << "long exact sequence: NOT exact at " << rep.labels[f.index]
           << (f.composite_zero ? " (kernel not in image" : " (composite nonzero");
        if (f.witness)
            os << ", witness " << format_vector(*f.witness);
        os << ")\n";
    }
    j["degrees"] = degrees;
    j["les"] = {{"exact", exact}, {"junctions", junctions}};
    return finish(os, j, exact ? exit_clean : exit_failure);
}

// ------------------------------------------------------------- obstruct

Report obstruct_report(const Document& doc, const std::string& map, int stages) {
    const PiMap& phi = doc.map(map);
    const FreeResolution& v = doc.resolution_of(phi.source().name());
    const FreeResolution& w = doc.resolution_of(phi.target().name());
    const ObstructionReport rep = obstruction_report(phi, v, w, stages);

    std::ostringstream os;
    os << "realization obstructions for " << map << ": " << phi.source().name() << " -> " << phi.target().name()
       << '\n';
    ojson js = ojson::array();
    if (rep.stages.empty()) {
        os << "no stages requested\n";
    } else {
        std::vector<std::vector<std::string>> rows{
            {"stage", "obstruction", "in arrow", "in source", "in target", "choices", "choices in arrow", "note"}};
        for (const auto& s : rep.stages) {
            const std::string e = "H^" + std::to_string(s.existence_degree);
            const std::string dd = "H^" + std::to_string(s.difference_degree);
            std::string note;
            if (s.window_exhausted)
                note = "window-exhausted";
            rows.push_back({std::to_string(s.stage), e, s.arrow_existence.to_string(),
                            s.source_existence.to_string(), s.target_existence.to_string(), dd,
                            s.arrow_difference.to_string(), note});
            js.push_back({{"stage", s.stage},
                          {"existence_degree", s.existence_degree},
                          {"difference_degree", s.difference_degree},
                          {"arrow_existence", group_json(s.arrow_existence)},
                          {"source_existence", group_json(s.source_existence)},
                          {"target_existence", group_json(s.target_existence)},
                          {"arrow_difference", group_json(s.arrow_difference)},
                          {"source_difference", group_json(s.source_difference)},
                          {"target_difference", group_json(s.target_difference)},
                          {"window_exhausted", s.window_exhausted}});
        }
        os << "stage k uses coefficients Omega^k of the map\n" << table(rows);
    }

    ojson checks = ojson::array();
    bool contradiction = false;
    for (const auto& c : doc.checks) {
        if (c.map != map)
            continue;
        const CheckOutcome out = run_check(doc, c);
        const BracketEntry& tb = doc.brackets.at(c.target_bracket);
        const PiModule& tgt = doc.object(tb.algebra);
        const int d = tb.triple.ambient_degree();
        os << "toda check " << c.name << ": " << map << "(" << c.source_bracket << ") = " << set_text(tgt, d, out.pushed)
           << '\n';
        ojson readings = ojson::array();
        for (std::size_t i = 0; i < out.readings.size(); ++i) {
            const auto& [label, v] = out.readings[i];
            os << "  against " << c.target_bracket << " read as " << label << " "
               << set_text(tgt, d, c.readings[i].elements) << ": " << to_string(v.verdict) << '\n';
            readings.push_back({{"label", label},
                                {"verdict", to_string(v.verdict)},
                                {"intersection", set_json(tgt, d, v.intersection)}});
        }
        os << "  verdict: " << to_string(out.verdict()) << '\n';
        contradiction = contradiction || out.verdict() == Realizability::contradiction;
        checks.push_back({{"name", c.name},
                          {"pushed", set_json(tgt, d, out.pushed)},
                          {"readings", readings},
                          {"verdict", to_string(out.verdict())}});
    }

    std::string verdict;
    if (contradiction)
        verdict = "NOT REALIZABLE";
    else if (!rep.stages.empty() && rep.all_hosts_vanish())
        verdict = "REALIZABLE (no obstruction)";
    else
        verdict = "UNDECIDED";
    os << "verdict: " << verdict << '\n';
    if (verdict == "UNDECIDED" && !rep.stages.empty())
        os << "a nonzero host group does not decide whether the class itself vanishes\n";
    return finish(os,
                  {{"command", "obstruct"}, {"map", map}, {"stages", js}, {"toda", checks}, {"verdict", verdict}},
                  exit_clean);
}

// -------------------------------------------------------------- bracket

Report bracket_report(const Document& doc) {
    std::ostringstream os;
    ojson bs = ojson::array();
    bool clean = true;
    for (const auto& n : doc.bracket_order) {
        const BracketEntry& b = doc.brackets.at(n);
        const PiModule& alg = doc.object(b.algebra);
        const int d = b.triple.ambient_degree();
        os << "bracket " << n << " = <" << b.f_text << ", " << b.g_text << ", " << b.h_text << "> in " << b.algebra
           << " degree " << relative_degree(d) << '\n';
        try {
            const TodaBracketCoset c = bracket(b.triple, alg, b.representative);
            const std::vector<IntVector> ind = c.indeterminacy().group.elements();
            std::vector<IntVector> indet;
            for (const auto& k : ind)
                indet.push_back(c.ambient().reduce(c.indeterminacy().inclusion.apply(k)));
            std::sort(indet.begin(), indet.end());
            indet.erase(std::unique(indet.begin(), indet.end()), indet.end());
            const std::vector<IntVector> els = c.elements();
            os << "  ambient " << c.ambient().to_string() << ", representative " << alg.format(d, c.representative())
               << '\n';
            os << "  indeterminacy " << set_text(alg, d, indet) << '\n';
            os << "  coset " << set_text(alg, d, els) << '\n';
            bs.push_back({{"name", n},
                          {"algebra", b.algebra},
                          {"degree", d},
                          {"ambient", group_json(c.ambient())},
                          {"representative", alg.format(d, c.representative())},
                          {"indeterminacy", set_json(alg, d, indet)},
                          {"coset", set_json(alg, d, els)}});
        } catch (const StructuralError& e) {
            os << "  FAILED: " << e.what() << '\n';
            clean = false;
            bs.push_back({{"name", n}, {"error", e.what()}});
        }
    }
    ojson checks = ojson::array();
    for (const auto& c : doc.checks) {
        const CheckOutcome out = run_check(doc, c);
        const BracketEntry& tb = doc.brackets.at(c.target_bracket);
        const PiModule& tgt = doc.object(tb.algebra);
        const int d = tb.triple.ambient_degree();
        os << "check " << c.name << ": " << c.map << "(" << c.source_bracket << ") = " << set_text(tgt, d, out.pushed)
           << '\n';
        ojson readings = ojson::array();
        for (std::size_t i = 0; i < out.readings.size(); ++i) {
            const auto& [label, v] = out.readings[i];
            os << "  " << c.target_bracket << " read as " << label << " " << set_text(tgt, d, c.readings[i].elements)
               << ": " << to_string(v.verdict) << '\n';
            readings.push_back({{"label", label},
                                {"verdict", to_string(v.verdict)},
                                {"intersection", set_json(tgt, d, v.intersection)}});
        }
        os << "  verdict: " << to_string(out.verdict()) << '\n';
        checks.push_back({{"name", c.name},
                          {"pushed", set_json(tgt, d, out.pushed)},
                          {"readings", readings},
                          {"verdict", to_string(out.verdict())}});
    }
    return finish(os, {{"command", "bracket"}, {"brackets", bs}, {"checks", checks}},
                  clean ? exit_clean : exit_failure);
}

} // namespace aqc
