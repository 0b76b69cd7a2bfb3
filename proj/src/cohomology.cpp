#include "aqcoh/cohomology.hpp"

#include <algorithm>

namespace aqc {

namespace {

DirectSum hom_sum(const FreeGradedModule& f, const PiModule& m) {
    std::vector<FGAbelianGroup> parts;
    for (const auto& g : f.generators())
        parts.push_back(m.group(g.degree));
    return direct_sum(std::move(parts));
}

const DirectSum& sum_at(const std::vector<DirectSum>& sums, std::size_t n) {
    static const DirectSum empty = direct_sum({});
    return n < sums.size() ? sums[n] : empty;
}

void place(IntMatrix& big, std::size_t r0, std::size_t c0, const IntMatrix& block, const Integer& sign = 1) {
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            big(r0 + r, c0 + c) = sign * block(r, c);
}

AbHom coefficient_cochain(const FreeGradedModule& f, const PiMap& tau, const DirectSum& from, const DirectSum& to) {
    IntMatrix block(to.block_size, from.block_size);
    for (std::size_t i = 0; i < f.size(); ++i)
        place(block, to.offsets[i], from.offsets[i], tau.component(f.generators()[i].degree).matrix());
    return AbHom::from_presentation(from.group, to.group, block);
}

} // namespace

AbHom cochain_pullback(const FreeModuleMap& f, const PiModule& m, const DirectSum& hom_b, const DirectSum& hom_a) {
    IntMatrix block(hom_a.block_size, hom_b.block_size);
    const StemTable& st = f.source.stems();
    for (std::size_t i = 0; i < f.source.size(); ++i) {
        const int da = f.source.generators()[i].degree;
        for (std::size_t j = 0; j < f.target.size(); ++j) {
            const int db = f.target.generators()[j].degree;
            const int s = da - db;
            if (!st.in_window(s))
                continue;
            const AbHom act = m.action(db, StemElement{s, f.images.at(i).parts.at(j)});
            place(block, hom_a.offsets[i], hom_b.offsets[j], act.matrix());
        }
    }
    return AbHom::from_presentation(hom_b.group, hom_a.group, block);
}

CochainComplex cochain_complex(const FreeResolution& r, const PiModule& m) {
    const std::string base = m.is_algebra() ? m.name() : m.base();
    if (base != r.algebra)
        throw StructuralError("cochain complex: " + m.name() + " is a module over " + base + " but " + r.name +
                              " resolves " + r.algebra);
    CochainComplex c{r.name, m.name(), {}, {}, {}};
    std::vector<FGAbelianGroup> groups;
    for (std::size_t n = 0; n < r.levels.size(); ++n) {
        c.sums.push_back(hom_sum(r.levels[n], m));
        std::vector<std::string> labels;
        for (const auto& g : r.levels[n].generators())
            for (const auto& nm : m.names(g.degree))
                labels.push_back(g.name + ":" + nm);
        c.labels.push_back(std::move(labels));
        groups.push_back(c.sums.back().group);
    }
    std::vector<AbHom> maps;
    for (std::size_t n = 0; n + 1 < r.levels.size(); ++n)
        maps.push_back(cochain_pullback(r.differentials[n], m, c.sums[n], c.sums[n + 1]));
    c.complex = ChainComplexAb(std::move(groups), std::move(maps), ChainComplexAb::Direction::cohomological);
    return c;
}

std::vector<FGAbelianGroup> cohomology_groups(const CochainComplex& c) {
    std::vector<FGAbelianGroup> out;
    for (std::size_t n = 0; n < c.length(); ++n)
        out.push_back(c.complex.homology(static_cast<long>(n)));
    return out;
}

std::vector<AbHom> induced_on_cohomology(const ChainComplexAb& from, const ChainComplexAb& to,
                                         const std::vector<AbHom>& maps) {
    std::vector<AbHom> out;
    for (std::size_t n = 0; n < maps.size(); ++n) {
        const Subquotient hf = from.homology_subquotient(static_cast<long>(n));
        const Subquotient ht = to.homology_subquotient(static_cast<long>(n));
        IntMatrix cols(ht.group().ngens(), hf.group().ngens());
        for (std::size_t c = 0; c < hf.group().ngens(); ++c) {
            const IntVector z = hf.representative(hf.group().basis(c));
            const auto cls = ht.class_of(maps[n].apply(z));
            if (!cls)
                throw InternalError("induced map does not send cocycles to cocycles in degree " + std::to_string(n));
            cols.set_column(c, *cls);
        }
        out.emplace_back(hf.group(), ht.group(), std::move(cols));
    }
    return out;
}

InducedMap induced_coefficient_map(const CochainComplex& c0, const CochainComplex& c1, const FreeResolution& r,
                                   const PiMap& tau) {
    InducedMap out;
    for (std::size_t n = 0; n < c0.length(); ++n)
        out.cochain.push_back(coefficient_cochain(r.levels.at(n), tau, c0.sums[n], c1.sums.at(n)));
    out.cohomology = induced_on_cohomology(c0.complex, c1.complex, out.cochain);
    return out;
}

// ---------------------------------------------------------------- cone

bool ArrowCochainComplex::window_exhausted() const {
    for (const auto& g : cone.groups())
        if (!g.is_trivial())
            return false;
    return true;
}

ArrowCochainComplex arrow_complex(const FreeResolution& v, const FreeResolution& w,
                                  const std::vector<FreeModuleMap>& lift, const PiMap& tau) {
    if (lift.size() != v.levels.size())
        throw StructuralError("arrow complex: the chain map needs one component per level of " + v.name);
    ArrowCochainComplex a;
    a.x0 = cochain_complex(v, tau.source());
    a.y1 = cochain_complex(w, tau.target());
    const PiModule m1 = tau.target().with_identity(tau.target().name(), v.algebra);
    a.x1 = cochain_complex(v, m1);

    for (std::size_t n = 0; n < v.levels.size(); ++n) {
        a.tau.push_back(coefficient_cochain(v.levels[n], tau, a.x0.sums[n], a.x1.sums[n]));
        a.pull.push_back(cochain_pullback(lift[n], m1, sum_at(a.y1.sums, n), a.x1.sums[n]));
    }

    const std::size_t count = std::max({a.x0.length(), a.y1.length(), a.x1.length() + 1});
    for (std::size_t n = 0; n < count; ++n) {
        const long k = static_cast<long>(n);
        a.sums.push_back(direct_sum({a.x0.group(k), a.y1.group(k), a.x1.group(k - 1)}));
    }
    std::vector<FGAbelianGroup> groups;
    for (const auto& s : a.sums)
        groups.push_back(s.group);
    std::vector<AbHom> maps;
    for (std::size_t n = 0; n + 1 < count; ++n) {
        const long k = static_cast<long>(n);
        const DirectSum& from = a.sums[n];
        const DirectSum& to = a.sums[n + 1];
        IntMatrix d(to.block_size, from.block_size);
        place(d, to.offsets[0], from.offsets[0], a.x0.complex.outgoing(k).matrix());
        place(d, to.offsets[1], from.offsets[1], a.y1.complex.outgoing(k).matrix());
        if (n < a.tau.size()) {
            place(d, to.offsets[2], from.offsets[0], a.tau[n].matrix());
            place(d, to.offsets[2], from.offsets[1], a.pull[n].matrix(), -1);
        }
        place(d, to.offsets[2], from.offsets[2], a.x1.complex.outgoing(k - 1).matrix(), -1);
        maps.push_back(AbHom::from_presentation(from.group, to.group, d));
    }
    a.cone = ChainComplexAb(std::move(groups), std::move(maps), ChainComplexAb::Direction::cohomological);
    return a;
}

std::vector<FGAbelianGroup> arrow_cohomology(const ArrowCochainComplex& a) {
    std::vector<FGAbelianGroup> out;
    for (std::size_t n = 0; n < a.cone.length(); ++n)
        out.push_back(a.cone.homology(static_cast<long>(n)));
    return out;
}

// ----------------------------------------------------------------- LES

LesData les_data(const ArrowCochainComplex& a) {
    LesData out;
    const std::size_t count = a.cone.length();
    for (std::size_t n = 0; n < count; ++n) {
        const long k = static_cast<long>(n);
        const Subquotient hp = a.cone.homology_subquotient(k);
        const Subquotient h0 = a.x0.complex.homology_subquotient(k);
        const Subquotient hy = a.y1.complex.homology_subquotient(k);
        const Subquotient h1 = a.x1.complex.homology_subquotient(k);
        const Subquotient hnext = a.cone.homology_subquotient(k + 1);
        const DirectSum mid = direct_sum({h0.group(), hy.group()});
        const DirectSum& cone_n = a.sums[n];

        IntMatrix theta(mid.group.ngens(), hp.group().ngens());
        for (std::size_t c = 0; c < hp.group().ngens(); ++c) {
            const IntVector z = hp.representative(hp.group().basis(c));
            const auto ca = h0.class_of(cone_n.component(z, 0));
            const auto cb = hy.class_of(cone_n.component(z, 1));
            if (!ca || !cb)
                throw InternalError("les: cone cocycle does not project to cocycles in degree " + std::to_string(n));
            IntVector col = mid.inject(0, *ca);
            const IntVector second = mid.inject(1, *cb);
            for (std::size_t i = 0; i < col.size(); ++i)
                col[i] += second[i];
            theta.set_column(c, mid.group.reduce(col));
        }

        const AbHom tau_n = n < a.tau.size() ? a.tau[n] : AbHom::zero(a.x0.group(k), a.x1.group(k));
        const AbHom pull_n = n < a.pull.size() ? a.pull[n] : AbHom::zero(a.y1.group(k), a.x1.group(k));
        IntMatrix xi(h1.group().ngens(), mid.group.ngens());
        for (std::size_t c = 0; c < mid.group.ngens(); ++c) {
            const IntVector e = mid.group.basis(c);
            const IntVector ra = h0.representative(mid.component(e, 0));
            const IntVector rb = hy.representative(mid.component(e, 1));
            IntVector y = tau_n.apply(ra);
            const IntVector p = pull_n.apply(rb);
            for (std::size_t i = 0; i < y.size(); ++i)
                y[i] -= p[i];
            const auto cls = h1.class_of(a.x1.group(k).reduce(y));
            if (!cls)
                throw InternalError("les: xi does not preserve cocycles in degree " + std::to_string(n));
            xi.set_column(c, *cls);
        }

        IntMatrix conn(hnext.group().ngens(), h1.group().ngens());
        for (std::size_t c = 0; c < h1.group().ngens(); ++c) {
            const IntVector z = h1.representative(h1.group().basis(c));
            const IntVector lifted = sum_at(a.sums, n + 1).inject(2, z);
            const auto cls = hnext.class_of(lifted);
            if (!cls)
                throw InternalError("les: connecting map leaves the cocycles in degree " + std::to_string(n));
            conn.set_column(c, *cls);
        }

        out.arrow.push_back(hp.group());
        out.x0.push_back(h0.group());
        out.y1.push_back(hy.group());
        out.x1.push_back(h1.group());
        out.middle.push_back(mid.group);
        out.theta.emplace_back(hp.group(), mid.group, std::move(theta));
        out.xi.emplace_back(mid.group, h1.group(), std::move(xi));
        out.connecting.emplace_back(h1.group(), hnext.group(), std::move(conn));
    }
    return out;
}

LesReport assemble_les(const LesData& data) {
    LesReport rep;
    if (data.arrow.empty())
        return rep;
    rep.sequence.push_back(AbHom::zero(FGAbelianGroup::trivial(), data.arrow[0]));
    rep.labels.push_back("H^0_arrow");
    for (std::size_t n = 0; n < data.arrow.size(); ++n) {
        const std::string i = std::to_string(n);
        rep.sequence.push_back(data.theta[n]);
        rep.labels.push_back("H^" + i + "(X;M0)+H^" + i + "(Y;M1)");
        rep.sequence.push_back(data.xi[n]);
        rep.labels.push_back("H^" + i + "(X;M1)");
        rep.sequence.push_back(data.connecting[n]);
        rep.labels.push_back("H^" + std::to_string(n + 1) + "_arrow");
    }
    rep.labels.pop_back();
    rep.exactness = verify_exact(rep.sequence);
    return rep;
}

// ------------------------------------------------------------- profile

std::vector<ProfileEntry> em_homotopy_profile(const PiModule& algebra, const PiModule& m, int n) {
    if (n < 1)
        throw StructuralError("Eilenberg-Mac Lane profile needs n >= 1");
    std::vector<ProfileEntry> out;
    const PiModule lalg = loop(algebra);
    const PiModule lm = loop(m);
    for (int k = 0; k <= n + 2; ++k) {
        ProfileEntry e{k, {}, {}};
        if (k == 0)
            e.factors.push_back(algebra);
        if (k == 2)
            e.factors.push_back(lalg);
        if (k == n && !m.is_zero())
            e.factors.push_back(m);
        if (k == n + 2 && !m.is_zero())
            e.factors.push_back(lm);
        for (const auto& f : e.factors)
            e.label += (e.label.empty() ? "" : " x ") + f.name();
        if (e.label.empty())
            e.label = "0";
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------- obstruction

bool ObstructionReport::all_hosts_vanish() const {
    return std::all_of(stages.begin(), stages.end(), [](const ObstructionStage& s) {
        return s.arrow_existence.is_trivial() && s.arrow_difference.is_trivial();
    });
}

ObstructionReport obstruction_report(const PiMap& phi, const FreeResolution& v, const FreeResolution& w,
                                     int stages) {
    ObstructionReport rep{phi.name(), {}};
    if (stages <= 0)
        return rep;
    const std::vector<FreeModuleMap> lift = lift_map(phi, v, w);
    PiMap tau = phi;
    for (int k = 1; k <= stages; ++k) {
        tau = loop(tau);
        const ArrowCochainComplex a = arrow_complex(v, w, lift, tau);
        const long e = k + 2, d = k + 1;
        ObstructionStage s;
        s.stage = k;
        s.existence_degree = static_cast<int>(e);
        s.difference_degree = static_cast<int>(d);
        s.arrow_existence = a.cone.homology(e);
        s.arrow_difference = a.cone.homology(d);
        s.source_existence = a.x0.complex.homology(e);
        s.source_difference = a.x0.complex.homology(d);
        s.target_existence = a.y1.complex.homology(e);
        s.target_difference = a.y1.complex.homology(d);
        s.window_exhausted = a.window_exhausted();
        rep.stages.push_back(std::move(s));
    }
    return rep;
}

} // namespace aqc
