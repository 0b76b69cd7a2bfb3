#include "aqcoh/pialg.hpp"

#include <sstream>

namespace aqc {

namespace {

const std::vector<std::string> kNoNames;

std::string join_terms(std::span<const Integer> x, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (x[i].is_one())
            os << names[i];
        else
            os << x[i] << '*' << names[i];
    }
    return first ? "0" : os.str();
}

} // namespace

PiModule::PiModule(std::string name, std::string base, int dmin, std::vector<DegreePiece> pieces,
                   const StemTable& stems)
    : name_(std::move(name)), base_(std::move(base)), dmin_(dmin), pieces_(std::move(pieces)), stems_(&stems) {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (pieces_[i].names.size() != pieces_[i].group.ngens())
            throw StructuralError(name_ + ": degree " + std::to_string(dmin_ + static_cast<int>(i)) + " has " +
                                  std::to_string(pieces_[i].group.ngens()) + " generators but " +
                                  std::to_string(pieces_[i].names.size()) + " names");
}

PiModule PiModule::zero(std::string name, std::string base, int dmin, int dmax, const StemTable& stems) {
    std::vector<DegreePiece> pieces(static_cast<std::size_t>(std::max(0, dmax - dmin + 1)));
    return PiModule(std::move(name), std::move(base), dmin, std::move(pieces), stems);
}

FGAbelianGroup PiModule::group(int d) const {
    if (!in_window(d))
        return FGAbelianGroup::trivial();
    return pieces_[static_cast<std::size_t>(d - dmin_)].group;
}

const std::vector<std::string>& PiModule::names(int d) const {
    if (!in_window(d))
        return kNoNames;
    return pieces_[static_cast<std::size_t>(d - dmin_)].names;
}

bool PiModule::is_zero() const {
    for (const auto& p : pieces_)
        if (!p.group.is_trivial())
            return false;
    return true;
}

void PiModule::set_action(int d, const std::string& stem_generator, const IntMatrix& matrix) {
    const auto g = stems_->find(stem_generator);
    if (!g || g->degree == 0)
        throw StructuralError(name_ + ": '" + stem_generator + "' is not a stem generator of positive degree");
    if (!in_window(d))
        throw WindowError(name_ + ": action declared in degree " + std::to_string(d) + " outside the window");
    const FGAbelianGroup src = group(d);
    const FGAbelianGroup tgt = group(d + g->degree);
    if (matrix.rows() != tgt.ngens() || matrix.cols() != src.ngens())
        throw StructuralError(name_ + ": action of " + stem_generator + " on degree " + std::to_string(d) +
                              " must be " + std::to_string(tgt.ngens()) + "x" + std::to_string(src.ngens()));
    actions_[{d, stem_generator}] = AbHom(src, tgt, matrix).matrix();
}

IntMatrix PiModule::action_matrix(int d, const StemGenerator& g) const {
    const auto it = actions_.find({d, g.name});
    if (it != actions_.end())
        return it->second;
    return IntMatrix(group(d + g.degree).ngens(), group(d).ngens());
}

AbHom PiModule::action(int d, const StemElement& theta) const {
    const FGAbelianGroup src = group(d);
    const FGAbelianGroup tgt = group(d + theta.degree);
    if (!stems_->in_window(theta.degree) || src.is_trivial() || tgt.is_trivial())
        return AbHom::zero(src, tgt);
    if (theta.degree == 0) {
        IntMatrix m = IntMatrix::identity(src.ngens());
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, r) = theta.coords.at(0);
        return AbHom(src, tgt, std::move(m));
    }
    IntMatrix acc(tgt.ngens(), src.ngens());
    const auto& names = stems_->names(theta.degree);
    for (std::size_t k = 0; k < theta.coords.size(); ++k) {
        if (theta.coords[k].is_zero())
            continue;
        IntMatrix a = action_matrix(d, StemGenerator{names[k], theta.degree, k});
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                acc(r, c) += theta.coords[k] * a(r, c);
    }
    return AbHom(src, tgt, std::move(acc));
}

IntVector PiModule::act(int d, std::span<const Integer> x, const StemElement& theta) const {
    return action(d, theta).apply(x);
}

std::optional<std::pair<int, IntVector>> PiModule::find(const std::string& name) const {
    for (int d = dmin_; d <= dmax(); ++d) {
        const auto& ns = names(d);
        for (std::size_t i = 0; i < ns.size(); ++i)
            if (ns[i] == name)
                return std::make_pair(d, group(d).basis(i));
    }
    return std::nullopt;
}

std::string PiModule::format(int d, std::span<const Integer> x) const { return join_terms(x, names(d)); }

PiModule PiModule::with_identity(std::string name, std::string base) const {
    PiModule out = *this;
    out.name_ = std::move(name);
    out.base_ = std::move(base);
    return out;
}

PiModule free_monogenic(const std::string& name, const std::string& generator, int r, int dmin, int dmax,
                        const StemTable& stems) {
    std::vector<DegreePiece> pieces;
    for (int d = dmin; d <= dmax; ++d) {
        DegreePiece p;
        const int s = d - r;
        if (stems.in_window(s)) {
            p.group = stems.group(s);
            for (const auto& nm : stems.names(s))
                p.names.push_back(nm == stems.unit() ? generator : generator + "." + nm);
        }
        pieces.push_back(std::move(p));
    }
    PiModule m(name, name, dmin, std::move(pieces), stems);
    for (int d = dmin; d <= dmax; ++d) {
        const int s = d - r;
        if (!stems.in_window(s))
            continue;
        for (const auto& g : stems.positive_generators()) {
            if (d + g.degree > dmax)
                continue;
            const FGAbelianGroup src = m.group(d);
            IntMatrix a(m.group(d + g.degree).ngens(), src.ngens());
            const StemElement theta = stems.element(g.name);
            for (std::size_t k = 0; k < src.ngens(); ++k) {
                const StemElement prod = stems.compose(StemElement{s, src.basis(k)}, theta);
                for (std::size_t row = 0; row < prod.coords.size() && row < a.rows(); ++row)
                    a(row, k) = prod.coords[row];
            }
            m.set_action(d, g.name, a);
        }
    }
    return m;
}

// -------------------------------------------------------------- PiMap

PiMap::PiMap(std::string name, PiModule source, PiModule target, std::map<int, IntMatrix> components)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
    for (auto& [d, m] : components) {
        if (!source_.in_window(d))
            throw WindowError(name_ + ": component in degree " + std::to_string(d) + " outside the source window");
        const FGAbelianGroup src = source_.group(d);
        const FGAbelianGroup tgt = target_.group(d);
        if (m.rows() != tgt.ngens() || m.cols() != src.ngens())
            throw StructuralError(name_ + ": component in degree " + std::to_string(d) + " must be " +
                                  std::to_string(tgt.ngens()) + "x" + std::to_string(src.ngens()));
        components_.emplace(d, AbHom(src, tgt, m));
    }
}

PiMap PiMap::identity(std::string name, const PiModule& m) {
    std::map<int, IntMatrix> comps;
    for (int d = m.dmin(); d <= m.dmax(); ++d)
        comps[d] = IntMatrix::identity(m.group(d).ngens());
    return PiMap(std::move(name), m, m, std::move(comps));
}

AbHom PiMap::component(int d) const {
    const auto it = components_.find(d);
    if (it != components_.end())
        return it->second;
    return AbHom::zero(source_.group(d), target_.group(d));
}

IntVector PiMap::apply(int d, std::span<const Integer> x) const { return component(d).apply(x); }

// --------------------------------------------------------- validation

ValidationReport validate_algebra(const PiModule& m) {
    ValidationReport rep{m.name(), {}};
    const StemTable& st = m.stems();
    const auto gens = st.positive_generators();
    for (int d = m.dmin(); d <= m.dmax(); ++d) {
        const FGAbelianGroup src = m.group(d);
        for (const auto& g : gens) {
            const AbHom a = m.action(d, st.element(g.name));
            if (auto bad = a.torsion_defect()) {
                rep.violations.push_back(
                    {"torsion", d,
                     m.names(d)[*bad] + " has order " + src.generator_order(*bad).to_string() + " but " +
                         m.names(d)[*bad] + " o " + g.name + " = " +
                         m.format(d + g.degree, a.apply(src.basis(*bad))) + " is not killed by it"});
            }
            const Integer t = st.group(g.degree).generator_order(g.index);
            if (!t.is_zero()) {
                for (std::size_t k = 0; k < src.ngens(); ++k) {
                    IntVector v = a.apply(src.basis(k));
                    for (auto& x : v)
                        x *= t;
                    if (!is_zero(a.target().reduce(v)))
                        rep.violations.push_back({"torsion", d,
                                                  g.name + " has order " + t.to_string() + " but " + m.names(d)[k] +
                                                      " o " + g.name + " is not killed by it"});
                }
            }
        }
        for (const auto& g : gens)
            for (const auto& h : gens) {
                if (d + g.degree + h.degree > m.dmax())
                    continue;
                const StemElement a = st.element(g.name), b = st.element(h.name);
                for (std::size_t k = 0; k < src.ngens(); ++k) {
                    const IntVector x = src.basis(k);
                    const IntVector lhs = m.act(d + g.degree, m.act(d, x, a), b);
                    const IntVector rhs = m.act(d, x, st.compose(a, b));
                    if (lhs != rhs) {
                        const int e = d + g.degree + h.degree;
                        rep.violations.push_back({"associativity", d,
                                                  "(" + m.names(d)[k] + " o " + g.name + ") o " + h.name + " = " +
                                                      m.format(e, lhs) + " but " + m.names(d)[k] + " o (" + g.name +
                                                      " o " + h.name + ") = " + m.format(e, rhs)});
                    }
                }
            }
    }
    return rep;
}

ValidationReport validate_map(const PiMap& f) {
    ValidationReport rep{f.name(), {}};
    const PiModule& s = f.source();
    const PiModule& t = f.target();
    const StemTable& st = s.stems();
    for (int d = s.dmin(); d <= s.dmax(); ++d) {
        const AbHom c = f.component(d);
        if (auto bad = c.torsion_defect())
            rep.violations.push_back({"torsion", d,
                                      "image of " + s.names(d)[*bad] + " is not killed by its order " +
                                          c.source().generator_order(*bad).to_string()});
        for (const auto& g : st.positive_generators()) {
            if (d + g.degree > s.dmax())
                continue;
            const StemElement theta = st.element(g.name);
            for (std::size_t k = 0; k < c.source().ngens(); ++k) {
                const IntVector x = c.source().basis(k);
                const IntVector lhs = f.apply(d + g.degree, s.act(d, x, theta));
                const IntVector rhs = t.act(d, f.apply(d, x), theta);
                if (lhs != rhs) {
                    const int e = d + g.degree;
                    rep.violations.push_back({"equivariance", d,
                                              f.name() + "(" + s.names(d)[k] + " o " + g.name +
                                                  ") = " + t.format(e, lhs) + " but " + f.name() + "(" +
                                                  s.names(d)[k] + ") o " + g.name + " = " + t.format(e, rhs)});
                }
            }
        }
    }
    return rep;
}

ValidationReport coefficient_map(const PiMap& tau, const PiMap& over) {
    ValidationReport rep = validate_map(tau);
    if (tau.source().base() != over.source().name())
        rep.violations.push_back({"base", 0,
                                  tau.source().name() + " is a module over " + tau.source().base() + ", not " +
                                      over.source().name()});
    if (tau.target().base() != over.target().name())
        rep.violations.push_back({"base", 0,
                                  tau.target().name() + " is a module over " + tau.target().base() + ", not " +
                                      over.target().name()});
    return rep;
}

// --------------------------------------------------------------- loops

PiModule loop(const PiModule& m, std::string name) {
    if (name.empty())
        name = "Omega" + m.name();
    std::vector<DegreePiece> pieces;
    for (int d = m.dmin(); d <= m.dmax(); ++d)
        pieces.push_back({m.group(d), m.names(d)});
    const std::string base = m.is_algebra() ? m.name() : m.base();
    PiModule out(std::move(name), base, m.dmin() - 1, std::move(pieces), m.stems());
    for (int d = m.dmin(); d <= m.dmax(); ++d)
        for (const auto& g : m.stems().positive_generators())
            out.set_action(d - 1, g.name, m.action_matrix(d, g));
    return out;
}

PiMap loop(const PiMap& f, std::string name) {
    if (name.empty())
        name = "Omega" + f.name();
    std::map<int, IntMatrix> comps;
    for (int d = f.source().dmin(); d <= f.source().dmax(); ++d)
        comps[d - 1] = f.component(d).matrix();
    return PiMap(std::move(name), loop(f.source()), loop(f.target()), std::move(comps));
}

PiModule restrict_scalars(const PiModule& m, const PiMap& along, std::string name) {
    if (m.base() != along.target().name())
        throw StructuralError("cannot restrict " + m.name() + " (over " + m.base() + ") along " + along.name() +
                              ", which lands in " + along.target().name());
    if (name.empty())
        name = m.name();
    return m.with_identity(std::move(name), along.source().name());
}

} // namespace aqc
