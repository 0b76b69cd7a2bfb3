#include "aqcoh/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace aqc {

FreeGradedModule::FreeGradedModule(std::vector<FreeGenerator> generators, const StemTable& stems)
    : generators_(std::move(generators)), stems_(&stems) {}

std::optional<std::size_t> FreeGradedModule::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

bool FreeElement::is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const IntVector& p) { return aqc::is_zero(p); });
}

FreeElement zero_element(const FreeGradedModule& f, int degree) {
    FreeElement x{degree, {}};
    for (const auto& g : f.generators())
        x.parts.push_back(degree - g.degree >= 0 ? f.stems().zero(degree - g.degree).coords : IntVector{});
    return x;
}

FreeElement make_element(const FreeGradedModule& f, int degree, const std::vector<FreeTerm>& terms) {
    FreeElement x = zero_element(f, degree);
    for (const auto& t : terms) {
        const auto i = f.index_of(t.generator);
        if (!i)
            throw StructuralError("unknown generator '" + t.generator + "'");
        const StemElement theta = f.stems().element(t.stem, t.coefficient);
        const int expected = degree - f.generators()[*i].degree;
        if (theta.degree != expected)
            throw StructuralError(t.generator + " o " + t.stem + " has degree " +
                                  std::to_string(f.generators()[*i].degree + theta.degree) + ", expected " +
                                  std::to_string(degree));
        x.parts[*i] = f.stems().add(StemElement{expected, x.parts[*i]}, theta).coords;
    }
    return x;
}

FreeElement add(const FreeGradedModule& f, const FreeElement& a, const FreeElement& b) {
    if (a.degree != b.degree || a.parts.size() != f.size() || b.parts.size() != f.size())
        throw StructuralError("adding free elements of different shapes");
    FreeElement out = a;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int s = a.degree - f.generators()[i].degree;
        if (s >= 0)
            out.parts[i] = f.stems().add(StemElement{s, a.parts[i]}, StemElement{s, b.parts[i]}).coords;
    }
    return out;
}

FreeElement compose_right(const FreeGradedModule& f, const FreeElement& x, const StemElement& theta) {
    FreeElement out{x.degree + theta.degree, {}};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int s = x.degree - f.generators()[i].degree;
        if (s < 0) {
            out.parts.push_back(zero_element(f, out.degree).parts[i]);
            continue;
        }
        out.parts.push_back(f.stems().compose(StemElement{s, x.parts[i]}, theta).coords);
    }
    return out;
}

std::string format(const FreeGradedModule& f, const FreeElement& x) {
    return realize_degree(f, x.degree).format(realize_degree(f, x.degree).to_canonical(x));
}

FreeModuleMap FreeModuleMap::identity(const FreeGradedModule& f) {
    FreeModuleMap m{f, f, {}};
    for (const auto& g : f.generators())
        m.images.push_back(make_element(f, g.degree, {{g.name, f.stems().unit(), 1}}));
    return m;
}

FreeModuleMap FreeModuleMap::zero(const FreeGradedModule& source, const FreeGradedModule& target) {
    FreeModuleMap m{source, target, {}};
    for (const auto& g : source.generators())
        m.images.push_back(zero_element(target, g.degree));
    return m;
}

FreeElement apply(const FreeModuleMap& f, const FreeElement& x) {
    if (x.parts.size() != f.source.size())
        throw StructuralError("apply: element does not belong to the source module");
    FreeElement out = zero_element(f.target, x.degree);
    for (std::size_t i = 0; i < f.source.size(); ++i) {
        const int s = x.degree - f.source.generators()[i].degree;
        if (s < 0 || is_zero(x.parts[i]))
            continue;
        out = add(f.target, out, compose_right(f.target, f.images[i], StemElement{s, x.parts[i]}));
    }
    return out;
}

FreeModuleMap compose(const FreeModuleMap& g, const FreeModuleMap& f) {
    FreeModuleMap out{f.source, g.target, {}};
    for (const auto& img : f.images)
        out.images.push_back(apply(g, img));
    return out;
}

// ------------------------------------------------------------ realized

IntVector RealizedDegree::to_canonical(const FreeElement& x) const {
    if (x.degree != degree || x.parts.size() != sum.summands.size())
        throw StructuralError("element of degree " + std::to_string(x.degree) + " realized in degree " +
                              std::to_string(degree));
    IntVector blocks;
    blocks.reserve(sum.block_size);
    for (const auto& p : x.parts)
        blocks.insert(blocks.end(), p.begin(), p.end());
    return sum.group.from_presentation(blocks);
}

FreeElement RealizedDegree::from_canonical(std::span<const Integer> c) const {
    const IntVector blocks = sum.to_blocks(c);
    FreeElement x{degree, {}};
    for (std::size_t i = 0; i < sum.summands.size(); ++i) {
        const auto first = blocks.begin() + static_cast<std::ptrdiff_t>(sum.offsets[i]);
        x.parts.emplace_back(first, first + static_cast<std::ptrdiff_t>(sum.summands[i].ngens()));
    }
    return x;
}

std::string RealizedDegree::format(std::span<const Integer> c) const {
    const IntVector blocks = sum.to_blocks(c);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].is_zero())
            continue;
        os << (first ? "" : " + ");
        first = false;
        if (!blocks[i].is_one())
            os << blocks[i] << '*';
        os << labels[i];
    }
    return first ? "0" : os.str();
}

RealizedDegree realize_degree(const FreeGradedModule& f, int d) {
    std::vector<FGAbelianGroup> summands;
    std::vector<std::string> labels;
    const StemTable& st = f.stems();
    for (const auto& g : f.generators()) {
        const int s = d - g.degree;
        if (!st.in_window(s)) {
            summands.push_back(FGAbelianGroup::trivial());
            continue;
        }
        summands.push_back(st.group(s));
        for (const auto& nm : st.names(s))
            labels.push_back(nm == st.unit() ? g.name : g.name + "." + nm);
    }
    return RealizedDegree{d, direct_sum(std::move(summands)), std::move(labels)};
}

namespace {

// Hom out of a realized degree given images of the block basis, written in
// canonical coordinates of the target.
AbHom from_block_images(const RealizedDegree& src, const FGAbelianGroup& target, const IntMatrix& columns) {
    return AbHom(src.group(), target, columns * src.group().from_canonical());
}

} // namespace

AbHom induced_hom(const FreeModuleMap& f, int d) {
    const RealizedDegree src = realize_degree(f.source, d);
    const RealizedDegree tgt = realize_degree(f.target, d);
    IntMatrix cols(tgt.group().ngens(), src.sum.block_size);
    const StemTable& st = f.source.stems();
    for (std::size_t i = 0; i < f.source.size(); ++i) {
        const int s = d - f.source.generators()[i].degree;
        if (!st.in_window(s))
            continue;
        for (std::size_t k = 0; k < st.group(s).ngens(); ++k) {
            const FreeElement y = compose_right(f.target, f.images.at(i), StemElement{s, st.group(s).basis(k)});
            cols.set_column(src.sum.offsets[i] + k, tgt.to_canonical(y));
        }
    }
    return from_block_images(src, tgt.group(), cols);
}

AbHom evaluate(const FreeGradedModule& f, const std::vector<IntVector>& images, const PiModule& m, int d) {
    const RealizedDegree src = realize_degree(f, d);
    const FGAbelianGroup target = m.group(d);
    IntMatrix cols(target.ngens(), src.sum.block_size);
    const StemTable& st = f.stems();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int gd = f.generators()[i].degree;
        const int s = d - gd;
        if (!st.in_window(s))
            continue;
        for (std::size_t k = 0; k < st.group(s).ngens(); ++k)
            cols.set_column(src.sum.offsets[i] + k, m.act(gd, images.at(i), StemElement{s, st.group(s).basis(k)}));
    }
    return from_block_images(src, target, cols);
}

// ---------------------------------------------------------- resolutions

const FreeGradedModule& FreeResolution::level(std::size_t k) const {
    static const FreeGradedModule empty;
    return k < levels.size() ? levels[k] : empty;
}

AbHom FreeResolution::boundary(std::size_t k, int d) const {
    if (k >= 1 && k <= differentials.size())
        return induced_hom(differentials[k - 1], d);
    const FGAbelianGroup src = realize_degree(level(k), d).group();
    const FGAbelianGroup tgt = k == 0 ? FGAbelianGroup::trivial() : realize_degree(level(k - 1), d).group();
    return AbHom::zero(src, tgt);
}

AbHom FreeResolution::augmentation_hom(const PiModule& alg, int d) const {
    return evaluate(level(0), augmentation, alg, d);
}

namespace {

bool same_generators(const FreeGradedModule& a, const FreeGradedModule& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.generators()[i].name != b.generators()[i].name || a.generators()[i].degree != b.generators()[i].degree)
            return false;
    return true;
}

std::vector<ResolutionIssue> shape_issues(const FreeResolution& r, const PiModule& alg) {
    std::vector<ResolutionIssue> out;
    if (r.levels.empty()) {
        out.push_back({"shape", 0, 0, "no levels"});
        return out;
    }
    if (r.differentials.size() != r.length())
        out.push_back({"shape", 0, 0,
                       std::to_string(r.levels.size()) + " levels need " + std::to_string(r.length()) +
                           " differentials, got " + std::to_string(r.differentials.size())});
    for (std::size_t k = 1; k <= std::min(r.length(), r.differentials.size()); ++k) {
        const FreeModuleMap& dk = r.differentials[k - 1];
        if (!same_generators(dk.source, r.levels[k]) || !same_generators(dk.target, r.levels[k - 1]))
            out.push_back({"shape", k, 0, "differential does not join levels " + std::to_string(k) + " and " +
                                              std::to_string(k - 1)});
        for (std::size_t i = 0; i < dk.images.size() && i < r.levels[k].size(); ++i)
            if (dk.images[i].degree != r.levels[k].generators()[i].degree)
                out.push_back({"shape", k, dk.images[i].degree,
                               "image of " + r.levels[k].generators()[i].name + " has the wrong degree"});
        if (dk.images.size() != r.levels[k].size())
            out.push_back({"shape", k, 0, "differential needs one image per generator"});
    }
    if (r.augmentation.size() != r.levels[0].size()) {
        out.push_back({"shape", 0, 0, "augmentation needs one image per generator of level 0"});
    } else {
        for (std::size_t i = 0; i < r.augmentation.size(); ++i) {
            const auto& g = r.levels[0].generators()[i];
            if (r.augmentation[i].size() != alg.group(g.degree).ngens())
                out.push_back({"shape", 0, g.degree, "augmentation of " + g.name + " is not an element of degree " +
                                                         std::to_string(g.degree)});
        }
    }
    return out;
}

} // namespace

ResolutionReport validate_resolution(const FreeResolution& r, const PiModule& alg) {
    ResolutionReport rep{r.name, shape_issues(r, alg)};
    if (!rep.ok())
        return rep;
    const std::size_t top = std::max<std::size_t>(r.length(), 1);
    for (int d = alg.dmin(); d <= alg.dmax(); ++d) {
        std::vector<AbHom> seq;
        for (std::size_t k = top; k >= 1; --k)
            seq.push_back(r.boundary(k, d));
        const AbHom eps = r.augmentation_hom(alg, d);
        seq.push_back(eps);
        seq.push_back(AbHom::zero(eps.target(), FGAbelianGroup::trivial()));
        const ExactnessReport ex = verify_exact(seq);
        for (const auto& j : ex.junctions) {
            if (j.exact())
                continue;
            if (j.index + 1 == seq.size() - 1) {
                rep.issues.push_back({"augmentation", 0, d,
                                      "augmentation misses " + alg.format(d, *j.witness) + " in degree " +
                                          std::to_string(d)});
                continue;
            }
            const std::size_t level = top - 1 - j.index;
            const std::string w = realize_degree(r.level(level), d).format(*j.witness);
            if (!j.composite_zero) {
                rep.issues.push_back({level == 0 ? "augmentation" : "d2", level, d,
                                      "composite through level " + std::to_string(level) + " is nonzero on " + w});
            } else {
                rep.issues.push_back({"homology", level, d,
                                      (level == 0 ? std::string("kernel of the augmentation")
                                                  : "H_" + std::to_string(level)) +
                                          " is not spanned by boundaries: " + w + " survives"});
            }
        }
    }
    return rep;
}

FreeResolution build_resolution(const PiModule& alg, std::size_t length, std::string name) {
    FreeResolution r;
    r.name = name.empty() ? "R(" + alg.name() + ")" : std::move(name);
    r.algebra = alg.name();
    const StemTable& st = alg.stems();

    // level 0: cover the algebra degree by degree
    std::vector<FreeGenerator> gens;
    for (int d = alg.dmin(); d <= alg.dmax(); ++d) {
        const AbHom eps = evaluate(FreeGradedModule(gens, st), r.augmentation, alg, d);
        const FGAbelianGroup lam = alg.group(d);
        const Subquotient q(lam, IntMatrix::identity(lam.ngens()), image(eps).inclusion.matrix());
        for (std::size_t c = 0; c < q.group().ngens(); ++c) {
            gens.push_back({"g0_" + std::to_string(gens.size()), d});
            r.augmentation.push_back(q.representative(q.group().basis(c)));
        }
    }
    r.levels.emplace_back(gens, st);

    for (std::size_t k = 1; k <= length; ++k) {
        const FreeGradedModule& below = r.levels[k - 1];
        FreeModuleMap dk{FreeGradedModule({}, st), below, {}};
        std::vector<FreeGenerator> level;
        for (int d = alg.dmin(); d <= alg.dmax(); ++d) {
            const AbHom prev = k == 1 ? r.augmentation_hom(alg, d) : induced_hom(r.differentials[k - 2], d);
            dk.source = FreeGradedModule(level, st);
            const AbHom cur = induced_hom(dk, d);
            const Subquotient q(prev.source(), kernel(prev).inclusion.matrix(), image(cur).inclusion.matrix());
            const RealizedDegree real = realize_degree(below, d);
            for (std::size_t c = 0; c < q.group().ngens(); ++c) {
                level.push_back({"g" + std::to_string(k) + "_" + std::to_string(level.size()), d});
                dk.images.push_back(real.from_canonical(q.representative(q.group().basis(c))));
            }
        }
        if (level.empty())
            break;
        dk.source = FreeGradedModule(level, st);
        r.levels.push_back(dk.source);
        r.differentials.push_back(std::move(dk));
    }
    return r;
}

// -------------------------------------------------------------- lifting

namespace {

IntVector lex_least_solution(const AbHom& a, const IntVector& rhs) {
    auto x0 = preimage(a, rhs);
    if (!x0)
        throw InternalError("lift_map: no solution");
    const Subgroup ker = kernel(a);
    const auto order = ker.group.order();
    if (!order || Integer(4096) < *order)
        return *x0;
    IntVector best = *x0;
    for (const auto& k : ker.group.elements()) {
        IntVector cand = ker.inclusion.apply(k);
        for (std::size_t i = 0; i < cand.size(); ++i)
            cand[i] += (*x0)[i];
        cand = a.source().reduce(cand);
        if (cand < best)
            best = std::move(cand);
    }
    return best;
}

} // namespace

std::vector<FreeModuleMap> lift_map(const PiMap& phi, const FreeResolution& source, const FreeResolution& target) {
    const PiModule& gam = phi.target();
    std::vector<FreeModuleMap> lift;
    for (std::size_t k = 0; k <= source.length(); ++k) {
        FreeModuleMap fk{source.level(k), target.level(k), {}};
        for (const auto& g : source.level(k).generators()) {
            const int d = g.degree;
            const RealizedDegree real = realize_degree(target.level(k), d);
            AbHom a;
            IntVector rhs;
            if (k == 0) {
                a = target.augmentation_hom(gam, d);
                const std::size_t i = *source.level(0).index_of(g.name);
                rhs = phi.apply(d, source.augmentation[i]);
            } else {
                a = target.boundary(k, d);
                const std::size_t i = *source.level(k).index_of(g.name);
                const FreeElement img = apply(lift[k - 1], source.differentials[k - 1].images[i]);
                rhs = realize_degree(target.level(k - 1), d).to_canonical(img);
            }
            fk.images.push_back(real.from_canonical(lex_least_solution(a, rhs)));
        }
        lift.push_back(std::move(fk));
    }
    if (auto bad = check_chain_map(phi, source, target, lift))
        throw InternalError("lift_map: " + *bad);
    return lift;
}

std::optional<std::string> check_chain_map(const PiMap& phi, const FreeResolution& source,
                                           const FreeResolution& target, const std::vector<FreeModuleMap>& lift) {
    if (lift.size() != source.length() + 1)
        return "expected one map per source level";
    for (int d = phi.source().dmin(); d <= phi.source().dmax(); ++d) {
        const AbHom left = compose(target.augmentation_hom(phi.target(), d), induced_hom(lift[0], d));
        const AbHom right = compose(phi.component(d), source.augmentation_hom(phi.source(), d));
        if (left.matrix() != right.matrix())
            return "augmentation square fails in degree " + std::to_string(d);
        for (std::size_t k = 1; k < lift.size(); ++k) {
            const AbHom l = compose(target.boundary(k, d), induced_hom(lift[k], d));
            const AbHom r = compose(induced_hom(lift[k - 1], d), source.boundary(k, d));
            if (l.matrix() != r.matrix())
                return "square at level " + std::to_string(k) + " fails in degree " + std::to_string(d);
        }
    }
    return std::nullopt;
}

} // namespace aqc
