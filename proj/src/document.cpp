#include "aqcoh/document.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace aqc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw DocumentError(where + ": " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    return j.get<long>();
}

const json& array(const json& j, const std::string& where) {
    if (!j.is_array())
        fail(where, "expected an array");
    return j;
}

std::pair<int, int> window(const json& j, const std::string& where) {
    const json& w = array(field(j, "window", where), where + ".window");
    if (w.size() != 2)
        fail(where + ".window", "expected [min, max]");
    const int lo = static_cast<int>(integer(w[0], where + ".window[0]"));
    const int hi = static_cast<int>(integer(w[1], where + ".window[1]"));
    if (hi < lo)
        fail(where + ".window", "max is below min");
    return {lo, hi};
}

FGAbelianGroup group_from_factors(const json& j, const std::string& where) {
    std::vector<Integer> torsion;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        const long t = integer(j[i], where + "[" + std::to_string(i) + "]");
        if (t == 0) {
            ++rank;
            continue;
        }
        if (rank > 0)
            fail(where, "free summands (0) must come after the torsion factors");
        torsion.emplace_back(t);
    }
    try {
        return FGAbelianGroup::from_invariants(std::move(torsion), rank);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

std::vector<std::string> names_of(const json& j, const std::string& where) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(j, where).size(); ++i)
        out.push_back(text(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

/// [[name, coeff], ...] as an element of m in degree d.
IntVector parse_element(const json& j, const PiModule& m, int d, const std::string& where) {
    const FGAbelianGroup g = m.group(d);
    IntVector v = g.zero();
    for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const json& t = array(j[i], at);
        if (t.size() != 2)
            fail(at, "expected [generator, coefficient]");
        const std::string name = text(t[0], at + "[0]");
        const long c = integer(t[1], at + "[1]");
        const auto& ns = m.names(d);
        const auto it = std::find(ns.begin(), ns.end(), name);
        if (it == ns.end()) {
            const auto found = m.find(name);
            if (found)
                fail(at, "'" + name + "' lives in degree " + relative_degree(found->first) + ", expected " +
                             relative_degree(d));
            fail(at, "'" + name + "' is not a generator of " + m.name());
        }
        v[static_cast<std::size_t>(it - ns.begin())] += c;
    }
    return g.reduce(v);
}

StemElement parse_stem(const json& j, const StemTable& st, const std::string& where) {
    const json& a = array(j, where);
    if (a.size() != 2)
        fail(where, "expected [stem generator, multiple]");
    const std::string name = text(a[0], where + "[0]");
    if (!st.find(name))
        fail(where, "unknown stem generator '" + name + "'");
    return st.element(name, integer(a[1], where + "[1]"));
}

std::shared_ptr<const StemTable> parse_stems(const json& j) {
    const std::string where = "stems";
    const std::string unit = text(field(j, "unit", where), where + ".unit");
    const json& groups = array(field(j, "groups", where), where + ".groups");
    std::vector<std::pair<FGAbelianGroup, std::vector<std::string>>> table(groups.size());
    std::vector<bool> seen(groups.size(), false);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const std::string at = where + ".groups[" + std::to_string(i) + "]";
        const long d = integer(field(groups[i], "degree", at), at + ".degree");
        if (d < 0 || static_cast<std::size_t>(d) >= groups.size() || seen[static_cast<std::size_t>(d)])
            fail(at, "degrees must be 0, 1, ... without gaps or repeats");
        seen[static_cast<std::size_t>(d)] = true;
        table[static_cast<std::size_t>(d)] = {group_from_factors(field(groups[i], "invariant_factors", at),
                                                                 at + ".invariant_factors"),
                                              names_of(field(groups[i], "generators", at), at + ".generators")};
    }
    std::vector<StemTable::Product> products;
    if (j.contains("products")) {
        const json& ps = array(j["products"], where + ".products");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::string at = where + ".products[" + std::to_string(i) + "]";
            products.push_back({text(field(ps[i], "left", at), at + ".left"),
                                text(field(ps[i], "right", at), at + ".right"),
                                text(field(ps[i], "result", at), at + ".result"),
                                Integer(integer(field(ps[i], "multiple", at), at + ".multiple"))});
        }
    }
    try {
        return std::make_shared<const StemTable>(std::move(table), unit, products);
    } catch (const StructuralError& e) {
        fail(where, e.what());
    }
}

PiModule parse_explicit(const json& j, const std::string& name, const std::string& base, const StemTable& st,
                        const std::string& where) {
    const auto [lo, hi] = window(j, where);
    std::vector<DegreePiece> pieces(static_cast<std::size_t>(hi - lo + 1));
    std::set<std::string> used;
    const json& degrees = array(field(j, "degrees", where), where + ".degrees");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string at = where + ".degrees[" + std::to_string(i) + "]";
        const int d = static_cast<int>(integer(field(degrees[i], "degree", at), at + ".degree"));
        if (d < lo || d > hi)
            fail(at, "degree " + relative_degree(d) + " is outside the window");
        DegreePiece p{group_from_factors(field(degrees[i], "invariant_factors", at), at + ".invariant_factors"),
                      names_of(field(degrees[i], "generators", at), at + ".generators")};
        if (p.names.size() != p.group.ngens())
            fail(at, "needs one generator name per invariant factor");
        for (const auto& n : p.names)
            if (!used.insert(n).second)
                fail(at, "generator name '" + n + "' is used twice");
        pieces[static_cast<std::size_t>(d - lo)] = std::move(p);
    }
    PiModule m(name, base, lo, std::move(pieces), st);
    if (!j.contains("action"))
        return m;
    std::map<std::pair<int, std::string>, IntMatrix> actions;
    const json& acts = array(j["action"], where + ".action");
    for (std::size_t i = 0; i < acts.size(); ++i) {
        const std::string at = where + ".action[" + std::to_string(i) + "]";
        const std::string src = text(field(acts[i], "source", at), at + ".source");
        const std::string stem = text(field(acts[i], "stem", at), at + ".stem");
        const auto x = m.find(src);
        if (!x)
            fail(at, "'" + src + "' is not a generator of " + name);
        const auto g = st.find(stem);
        if (!g || g->degree == 0)
            fail(at, "'" + stem + "' is not a stem generator of positive degree");
        const int d = x->first;
        const int e = d + g->degree;
        if (e > hi)
            fail(at, src + " o " + stem + " lands in degree " + relative_degree(e) + ", outside the window");
        auto [it, fresh] = actions.try_emplace({d, stem}, IntMatrix(m.group(e).ngens(), m.group(d).ngens()));
        const IntVector img = parse_element(field(acts[i], "image", at), m, e, at + ".image");
        const auto& ns = m.names(d);
        const std::size_t col = static_cast<std::size_t>(std::find(ns.begin(), ns.end(), src) - ns.begin());
        it->second.set_column(col, img);
    }
    for (const auto& [key, mat] : actions)
        m.set_action(key.first, key.second, mat);
    return m;
}

PiMap parse_map_images(const json& j, const std::string& name, const PiModule& source, const PiModule& target,
                       const std::string& where) {
    std::map<int, IntMatrix> comps;
    for (int d = source.dmin(); d <= source.dmax(); ++d)
        comps[d] = IntMatrix(target.group(d).ngens(), source.group(d).ngens());
    const json& images = field(j, "images", where);
    if (!images.is_object())
        fail(where + ".images", "expected an object keyed by source generator");
    for (const auto& [gen, terms] : images.items()) {
        const auto x = source.find(gen);
        if (!x)
            fail(where + ".images." + gen, "'" + gen + "' is not a generator of " + source.name());
        const int d = x->first;
        const auto& ns = source.names(d);
        const std::size_t col = static_cast<std::size_t>(std::find(ns.begin(), ns.end(), gen) - ns.begin());
        comps[d].set_column(col, parse_element(terms, target, d, where + ".images." + gen));
    }
    return PiMap(name, source, target, std::move(comps));
}

FreeResolution parse_resolution(const json& j, const Document& doc, const std::string& where) {
    FreeResolution r;
    r.name = text(field(j, "name", where), where + ".name");
    r.algebra = text(field(j, "algebra", where), where + ".algebra");
    const auto it = doc.algebras.find(r.algebra);
    if (it == doc.algebras.end())
        fail(where + ".algebra", "unknown algebra '" + r.algebra + "'");
    const PiModule& alg = it->second;
    if (j.contains("build")) {
        const long len = integer(j["build"], where + ".build");
        if (len < 0)
            fail(where + ".build", "length must be nonnegative");
        return build_resolution(alg, static_cast<std::size_t>(len), r.name);
    }
    const json& levels = array(field(j, "levels", where), where + ".levels");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const std::string at = where + ".levels[" + std::to_string(k) + "]";
        std::vector<FreeGenerator> gens;
        std::set<std::string> used;
        for (std::size_t i = 0; i < array(levels[k], at).size(); ++i) {
            const std::string gat = at + "[" + std::to_string(i) + "]";
            FreeGenerator g{text(field(levels[k][i], "name", gat), gat + ".name"),
                            static_cast<int>(integer(field(levels[k][i], "degree", gat), gat + ".degree"))};
            if (!used.insert(g.name).second)
                fail(gat, "generator name '" + g.name + "' is used twice in this level");
            gens.push_back(std::move(g));
        }
        r.levels.emplace_back(std::move(gens), alg.stems());
    }
    if (r.levels.empty())
        fail(where + ".levels", "needs at least one level");
    const json& diffs = array(field(j, "differentials", where), where + ".differentials");
    if (diffs.size() + 1 != r.levels.size())
        fail(where + ".differentials", "needs one entry per level above 0");
    for (std::size_t k = 1; k < r.levels.size(); ++k) {
        const std::string at = where + ".differentials[" + std::to_string(k - 1) + "]";
        const json& dk = diffs[k - 1];
        if (!dk.is_object())
            fail(at, "expected an object keyed by generator");
        FreeModuleMap m = FreeModuleMap::zero(r.levels[k], r.levels[k - 1]);
        for (const auto& [gen, terms] : dk.items()) {
            const auto i = r.levels[k].index_of(gen);
            if (!i)
                fail(at + "." + gen, "'" + gen + "' is not a generator of level " + std::to_string(k));
            std::vector<FreeTerm> ts;
            for (std::size_t t = 0; t < array(terms, at + "." + gen).size(); ++t) {
                const std::string tat = at + "." + gen + "[" + std::to_string(t) + "]";
                const json& e = array(terms[t], tat);
                if (e.size() != 3)
                    fail(tat, "expected [generator, stem, coefficient]");
                ts.push_back({text(e[0], tat + "[0]"), text(e[1], tat + "[1]"), Integer(integer(e[2], tat + "[2]"))});
            }
            try {
                m.images[*i] = make_element(r.levels[k - 1], r.levels[k].generators()[*i].degree, ts);
            } catch (const StructuralError& e) {
                fail(at + "." + gen, e.what());
            }
        }
        r.differentials.push_back(std::move(m));
    }
    const json& aug = field(j, "augmentation", where);
    if (!aug.is_object())
        fail(where + ".augmentation", "expected an object keyed by generator");
    for (const auto& g : r.levels[0].generators())
        r.augmentation.push_back(alg.group(g.degree).zero());
    for (const auto& [gen, terms] : aug.items()) {
        const auto i = r.levels[0].index_of(gen);
        if (!i)
            fail(where + ".augmentation." + gen, "'" + gen + "' is not a generator of level 0");
        r.augmentation[*i] =
            parse_element(terms, alg, r.levels[0].generators()[*i].degree, where + ".augmentation." + gen);
    }
    return r;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

template <class F>
void each(const json& root, const char* key, F&& f) {
    if (!root.contains(key))
        return;
    const json& list = array(root[key], key);
    for (std::size_t i = 0; i < list.size(); ++i)
        f(list[i], std::string(key) + "[" + std::to_string(i) + "]");
}

template <class M>
void claim(const M& table, const std::string& name, const std::string& where) {
    if (table.count(name))
        fail(where, "name '" + name + "' is declared twice");
}

Document build(const json& root) {
    if (!root.is_object())
        fail("document", "expected a JSON object at top level");
    Document doc;
    doc.stems = root.contains("stems") ? parse_stems(root["stems"])
                                       : std::shared_ptr<const StemTable>(&StemTable::standard(), [](auto*) {});
    const StemTable& st = *doc.stems;

    each(root, "algebras", [&](const json& j, const std::string& at) {
        const std::string name = text(field(j, "name", at), at + ".name");
        claim(doc.algebras, name, at);
        if (j.contains("free")) {
            const json& f = j["free"];
            const auto [lo, hi] = window(j, at);
            doc.algebras.emplace(name, free_monogenic(name, text(field(f, "generator", at + ".free"), at + ".free"),
                                                      static_cast<int>(integer(field(f, "degree", at + ".free"),
                                                                               at + ".free.degree")),
                                                      lo, hi, st));
        } else {
            doc.algebras.emplace(name, parse_explicit(j, name, name, st, at));
        }
        doc.algebra_order.push_back(name);
    });

    each(root, "maps", [&](const json& j, const std::string& at) {
        const std::string name = text(field(j, "name", at), at + ".name");
        claim(doc.maps, name, at);
        const PiModule& src = doc.object(text(field(j, "source", at), at + ".source"));
        if (j.value("identity", false)) {
            doc.maps.emplace(name, PiMap::identity(name, src));
        } else {
            const PiModule& tgt = doc.object(text(field(j, "target", at), at + ".target"));
            doc.maps.emplace(name, parse_map_images(j, name, src, tgt, at));
        }
        doc.map_order.push_back(name);
    });

    each(root, "modules", [&](const json& j, const std::string& at) {
        const std::string name = text(field(j, "name", at), at + ".name");
        claim(doc.modules, name, at);
        if (doc.algebras.count(name))
            fail(at, "name '" + name + "' is already an algebra");
        if (j.contains("loop_of")) {
            doc.modules.emplace(name, loop(doc.object(text(j["loop_of"], at + ".loop_of")), name));
        } else if (j.contains("restrict")) {
            const PiModule& m = doc.object(text(j["restrict"], at + ".restrict"));
            const PiMap& along = doc.map(text(field(j, "along", at), at + ".along"));
            try {
                doc.modules.emplace(name, restrict_scalars(m, along, name));
            } catch (const StructuralError& e) {
                fail(at, e.what());
            }
        } else if (j.value("zero", false)) {
            const std::string over = text(field(j, "over", at), at + ".over");
            doc.object(over);
            const auto [lo, hi] = window(j, at);
            doc.modules.emplace(name, PiModule::zero(name, over, lo, hi, st));
        } else {
            const std::string over = text(field(j, "over", at), at + ".over");
            doc.object(over);
            doc.modules.emplace(name, parse_explicit(j, name, over, st, at));
        }
        doc.module_order.push_back(name);
    });

    each(root, "coefficient_maps", [&](const json& j, const std::string& at) {
        const std::string name = text(field(j, "name", at), at + ".name");
        claim(doc.coefficient_maps, name, at);
        const std::string over = text(field(j, "over", at), at + ".over");
        doc.map(over);
        if (j.contains("loop_of")) {
            doc.coefficient_maps.emplace(name, CoefficientMapEntry{loop(doc.map(text(j["loop_of"], at)), name), over});
        } else {
            const PiModule& src = doc.object(text(field(j, "source", at), at + ".source"));
            const PiModule& tgt = doc.object(text(field(j, "target", at), at + ".target"));
            doc.coefficient_maps.emplace(name, CoefficientMapEntry{parse_map_images(j, name, src, tgt, at), over});
        }
        doc.coefficient_order.push_back(name);
    });

    each(root, "resolutions", [&](const json& j, const std::string& at) {
        FreeResolution r = parse_resolution(j, doc, at);
        claim(doc.resolutions, r.name, at);
        doc.resolution_order.push_back(r.name);
        doc.resolutions.emplace(r.name, std::move(r));
    });

    each(root, "brackets", [&](const json& j, const std::string& at) {
        BracketEntry b;
        b.name = text(field(j, "name", at), at + ".name");
        claim(doc.brackets, b.name, at);
        b.algebra = text(field(j, "algebra", at), at + ".algebra");
        const PiModule& alg = doc.object(b.algebra);
        b.triple.f = parse_stem(field(j, "f", at), st, at + ".f");
        b.triple.g = parse_stem(field(j, "g", at), st, at + ".g");
        const json& h = field(j, "h", at);
        b.triple.h_degree = static_cast<int>(integer(field(h, "degree", at + ".h"), at + ".h.degree"));
        b.triple.h = parse_element(field(h, "element", at + ".h"), alg, b.triple.h_degree, at + ".h.element");
        b.representative = parse_element(field(j, "representative", at), alg, b.triple.ambient_degree(),
                                         at + ".representative");
        b.f_text = st.format(b.triple.f);
        b.g_text = st.format(b.triple.g);
        b.h_text = alg.format(b.triple.h_degree, b.triple.h);
        doc.bracket_order.push_back(b.name);
        doc.brackets.emplace(b.name, std::move(b));
    });

    each(root, "realizability_checks", [&](const json& j, const std::string& at) {
        RealizabilityEntry c;
        c.name = text(field(j, "name", at), at + ".name");
        c.map = text(field(j, "map", at), at + ".map");
        c.source_bracket = text(field(j, "source_bracket", at), at + ".source_bracket");
        c.target_bracket = text(field(j, "target_bracket", at), at + ".target_bracket");
        const PiMap& f = doc.map(c.map);
        const auto sb = doc.brackets.find(c.source_bracket);
        const auto tb = doc.brackets.find(c.target_bracket);
        if (sb == doc.brackets.end() || tb == doc.brackets.end())
            fail(at, "unknown bracket");
        if (sb->second.algebra != f.source().name() || tb->second.algebra != f.target().name())
            fail(at, "brackets must live in the source and target of " + c.map);
        if (sb->second.triple.ambient_degree() != tb->second.triple.ambient_degree())
            fail(at, "the two brackets live in different degrees");
        const PiModule& tgt = doc.object(tb->second.algebra);
        const int d = tb->second.triple.ambient_degree();
        each(j, "readings", [&](const json& r, const std::string& rat) {
            Reading rd{text(field(r, "label", at + "." + rat), at + "." + rat + ".label"), {}};
            const json& els = array(field(r, "elements", at + "." + rat), at + "." + rat + ".elements");
            for (std::size_t i = 0; i < els.size(); ++i)
                rd.elements.push_back(parse_element(els[i], tgt, d, at + "." + rat + ".elements"));
            c.readings.push_back(std::move(rd));
        });
        doc.checks.push_back(std::move(c));
    });
    return doc;
}

} // namespace

const PiModule& Document::object(const std::string& name) const {
    if (const auto a = algebras.find(name); a != algebras.end())
        return a->second;
    if (const auto m = modules.find(name); m != modules.end())
        return m->second;
    throw DocumentError("unknown algebra or module '" + name + "'");
}

const PiMap& Document::map(const std::string& name) const {
    const auto it = maps.find(name);
    if (it == maps.end())
        throw DocumentError("unknown map '" + name + "'");
    return it->second;
}

const FreeResolution& Document::resolution(const std::string& name) const {
    const auto it = resolutions.find(name);
    if (it == resolutions.end())
        throw DocumentError("unknown resolution '" + name + "'");
    return it->second;
}

const FreeResolution& Document::resolution_of(const std::string& algebra) const {
    for (const auto& n : resolution_order)
        if (resolutions.at(n).algebra == algebra)
            return resolutions.at(n);
    throw DocumentError("no resolution of '" + algebra + "' is declared");
}

const CoefficientMapEntry& Document::coefficient_over(const std::string& m) const {
    for (const auto& n : coefficient_order)
        if (coefficient_maps.at(n).over == m)
            return coefficient_maps.at(n);
    throw DocumentError("no coefficient map is declared over '" + m + "'");
}

Document parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        std::string what = e.what();
        if (const auto pos = what.rfind(": "); pos != std::string::npos)
            what = what.substr(pos + 2);
        throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }
    try {
        return build(root);
    } catch (const WindowError& e) {
        throw DocumentError(e.what());
    } catch (const StructuralError& e) {
        throw DocumentError(e.what());
    }
}

Document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DocumentError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string relative_degree(int d) {
    if (d == 0)
        return "n";
    return d > 0 ? "n+" + std::to_string(d) : "n-" + std::to_string(-d);
}

} // namespace aqc
