#include "fixtures.hpp"

#include "aqcoh/errors.hpp"

#include <doctest.h>

#include <functional>

using namespace fixtures;

namespace {

std::vector<std::string> rows(const std::vector<FGAbelianGroup>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs)
        out.push_back(g.to_string());
    return out;
}

std::vector<std::string> coboundaries(const CochainComplex& c) {
    std::vector<std::string> out;
    for (std::size_t n = 0; n < c.length(); ++n) {
        const IntMatrix m = c.complex.outgoing(static_cast<long>(n)).matrix();
        out.push_back(m.is_zero() ? "0" : m.to_string());
    }
    return out;
}

/// Right action of a stem generator on a free module, degree d -> d + |theta|.
AbHom free_action(const FreeGradedModule& f, int d, const StemElement& theta) {
    const RealizedDegree src = realize_degree(f, d);
    const RealizedDegree dst = realize_degree(f, d + theta.degree);
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < src.group().ngens(); ++i)
        cols.push_back(dst.to_canonical(compose_right(f, src.from_canonical(src.group().basis(i)), theta)));
    return AbHom(src.group(), dst.group(), IntMatrix::from_columns(dst.group().ngens(), cols));
}

/// All group homomorphisms between two finite-target groups (the source may
/// have free summands).
std::vector<AbHom> all_homs(const FGAbelianGroup& s, const FGAbelianGroup& t) {
    IntMatrix m(t.ngens(), s.ngens());
    if (s.ngens() == 0 || t.ngens() == 0)
        return {AbHom(s, t, m)};
    const std::vector<IntVector> targets = t.elements();
    std::vector<AbHom> out;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == s.ngens()) {
            out.emplace_back(s, t, m);
            return;
        }
        for (const auto& y : targets) {
            m.set_column(c, y);
            bool killed = true;
            const Integer ord = s.generator_order(c);
            if (!ord.is_zero()) {
                IntVector k = y;
                for (auto& e : k)
                    e *= ord;
                killed = is_zero(t.reduce(k));
            }
            if (killed)
                rec(c + 1);
        }
    };
    rec(0);
    return out;
}

/// |Hom_{pi}(F, M)| by enumerating degreewise homomorphisms and keeping the
/// stem-equivariant families.
std::size_t count_module_homs(const FreeGradedModule& f, const PiModule& m) {
    const int lo = m.dmin(), hi = m.dmax();
    std::vector<std::vector<AbHom>> per_degree;
    for (int d = lo; d <= hi; ++d)
        per_degree.push_back(all_homs(realize_degree(f, d).group(), m.group(d)));
    const std::vector<StemGenerator> gens = m.stems().positive_generators();
    std::size_t count = 0;
    std::vector<const AbHom*> chosen(per_degree.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == per_degree.size()) {
            for (int d = lo; d <= hi; ++d)
                for (const auto& g : gens) {
                    const int e = d + g.degree;
                    if (e > hi)
                        continue;
                    const StemElement theta = m.stems().element(g.name);
                    const AbHom left = compose(*chosen[static_cast<std::size_t>(e - lo)], free_action(f, d, theta));
                    const AbHom right = compose(m.action(d, theta), *chosen[static_cast<std::size_t>(d - lo)]);
                    if (left.matrix() != right.matrix())
                        return;
                }
            ++count;
            return;
        }
        for (const auto& h : per_degree[i]) {
            chosen[i] = &h;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

std::vector<FreeModuleMap> homotopic_identity_lift(const FreeResolution& v) {
    // Phi = id + d h + h d with h_0(x) = z and h = 0 elsewhere.
    std::vector<FreeModuleMap> lift;
    for (const auto& level : v.levels)
        lift.push_back(FreeModuleMap::identity(level));
    lift[0].images[0] = make_element(v.levels[0], 0, {term("x", "iota", 3)});
    lift[1].images[0] = make_element(v.levels[1], 0, {term("z", "iota", 3)});
    lift[1].images[1] = make_element(v.levels[1], 2, {term("w", "iota"), term("z", "eta2", -1)});
    return lift;
}

} // namespace

TEST_CASE("cochains with loop coefficients") {
    const CochainComplex c = cochain_complex(minimal_resolution(), loop(lambda()));
    CHECK(rows(c.complex.groups()) == std::vector<std::string>{"Z/2", "Z/2", "Z/4", "Z/4", "0", "0"});
    CHECK(coboundaries(c) == std::vector<std::string>{"0", "[[2]]", "[[2]]", "0", "0", "0"});
    CHECK(rows(cohomology_groups(c)) == std::vector<std::string>{"Z/2", "0", "0", "Z/2", "0", "0"});
    CHECK(c.labels[0] == std::vector<std::string>{"x:alpha.eta"});
}

TEST_CASE("cochains with coefficients in the looped sphere") {
    const PiModule m = restrict_scalars(loop(sphere()), phi(), "OmegaSphere");
    const CochainComplex c = cochain_complex(minimal_resolution(), m);
    CHECK(rows(c.complex.groups()) == std::vector<std::string>{"Z/2", "Z/2", "Z/24", "Z/24", "0", "0"});
    CHECK(coboundaries(c) == std::vector<std::string>{"0", "[[12]]", "[[2]]", "0", "0", "0"});
    CHECK(rows(cohomology_groups(c)) == std::vector<std::string>{"Z/2", "0", "0", "Z/2", "0", "0"});
}

TEST_CASE("zero coefficients and free algebras") {
    const CochainComplex z = cochain_complex(minimal_resolution(), PiModule::zero("Z", "Lambda", 0, 2));
    for (const auto& g : cohomology_groups(z))
        CHECK(g.is_trivial());
    // A free algebra has no higher cohomology: its own resolution has one level.
    const CochainComplex s = cochain_complex(constant_sphere(), loop(sphere()));
    CHECK(s.length() == 1);
    CHECK(rows(cohomology_groups(s)) == std::vector<std::string>{"Z/2"});
}

TEST_CASE("modules over the wrong algebra are rejected") {
    CHECK_THROWS_AS(cochain_complex(minimal_resolution(), loop(sphere())), StructuralError);
}

TEST_CASE("cochain groups agree with brute-force module homomorphisms") {
    const FreeResolution v = minimal_resolution();
    const std::vector<PiModule> modules{loop(lambda()), lambda(), restrict_scalars(loop(sphere()), phi(), "R")};
    for (const auto& m : modules) {
        const CochainComplex c = cochain_complex(v, m);
        for (std::size_t n = 0; n < v.levels.size(); ++n) {
            const auto order = c.group(static_cast<long>(n)).order();
            REQUIRE(order);
            CHECK(Integer(static_cast<long>(count_module_homs(v.levels[n], m))) == *order);
        }
    }
    CHECK(count_module_homs(constant_sphere().levels[0], loop(sphere())) == 2);
}

TEST_CASE("coefficient maps induce maps on cohomology") {
    const FreeResolution v = minimal_resolution();
    const PiModule m = loop(lambda());
    const CochainComplex c = cochain_complex(v, m);
    const InducedMap id = induced_coefficient_map(c, c, v, PiMap::identity("id", m));
    for (std::size_t n = 0; n < id.cohomology.size(); ++n)
        CHECK(id.cohomology[n] == AbHom::identity(id.cohomology[n].source()));
}

TEST_CASE("cohomology of phi and psi") {
    const FreeResolution v = minimal_resolution(), w = constant_sphere();
    const ArrowCochainComplex a = arrow_complex(v, w, lift_map(phi(), v, w), loop(phi()));
    CHECK(rows(arrow_cohomology(a)) == std::vector<std::string>{"Z/2", "0", "0", "Z/2", "Z/2", "0", "0"});
    CHECK(assemble_les(les_data(a)).exactness.exact());

    const ArrowCochainComplex b = arrow_complex(v, w, lift_map(psi(), v, w), loop(psi()));
    const std::vector<std::string> hb = rows(arrow_cohomology(b));
    CHECK(hb[3] == "Z/2");
    CHECK(hb[4] == "Z/2");
    CHECK(hb[2] == "0");
    CHECK(hb[5] == "0");
    // H^1 of psi is Z/2: psi vanishes on alpha, so the coefficient map in
    // degree 0 cannot hit the class from the source.
    CHECK(hb[1] == "Z/2");
    CHECK(assemble_les(les_data(b)).exactness.exact());
}

TEST_CASE("cohomology of a map does not depend on the lift") {
    const FreeResolution v = minimal_resolution();
    const PiMap id = PiMap::identity("id", lambda());
    const auto alt = homotopic_identity_lift(v);
    REQUIRE_FALSE(check_chain_map(id, v, v, alt));
    for (const auto& m : {loop(lambda()), lambda()}) {
        const PiMap tau = PiMap::identity("t", m);
        const auto h1 = arrow_cohomology(arrow_complex(v, v, lift_map(id, v, v), tau));
        const auto h2 = arrow_cohomology(arrow_complex(v, v, alt, tau));
        REQUIRE(h1.size() == h2.size());
        for (std::size_t n = 0; n < h1.size(); ++n)
            CHECK(h1[n].isomorphic(h2[n]));
        // The identity cone recovers single-object cohomology.
        const auto single = cohomology_groups(cochain_complex(v, m));
        for (std::size_t n = 0; n < single.size(); ++n)
            CHECK(h1[n].isomorphic(single[n]));
    }

    // phi' = phi with beta -> 18 nu is a different valid map with the same answer.
    const FreeResolution w = constant_sphere();
    const PiMap phi2 = map_to_sphere("phi2", 1, 18);
    const auto h = arrow_cohomology(arrow_complex(v, w, lift_map(phi(), v, w), loop(phi())));
    const auto h2 = arrow_cohomology(arrow_complex(v, w, lift_map(phi2, v, w), loop(phi2)));
    REQUIRE(h.size() == h2.size());
    for (std::size_t n = 0; n < h.size(); ++n)
        CHECK(h[n].isomorphic(h2[n]));
}

TEST_CASE("the exactness check notices a wrong H^3") {
    const FreeResolution v = minimal_resolution(), w = constant_sphere();
    LesData d = les_data(arrow_complex(v, w, lift_map(phi(), v, w), loop(phi())));
    const FGAbelianGroup zero;
    d.arrow[3] = zero;
    d.theta[3] = AbHom::zero(zero, d.middle[3]);
    d.connecting[2] = AbHom::zero(d.x1[2], zero);
    const LesReport rep = assemble_les(d);
    REQUIRE_FALSE(rep.exactness.exact());
    const Junction bad = *rep.exactness.first_failure();
    CHECK(rep.labels[bad.index] == "H^3(X;M0)+H^3(Y;M1)");
    CHECK_FALSE(bad.kernel_in_image);
}

TEST_CASE("homotopy profile of Eilenberg-Mac Lane objects") {
    const PiModule l = lambda();
    const PiModule m = loop(l);
    const auto p = em_homotopy_profile(l, m, 3);
    REQUIRE(p.size() == 6);
    CHECK(p[0].label == "Lambda");
    CHECK(p[1].label == "0");
    CHECK(p[2].label == "OmegaLambda");
    CHECK(p[3].label == "OmegaLambda");
    CHECK(p[4].label == "0");
    CHECK(p[5].label == "OmegaOmegaLambda");

    const auto q = em_homotopy_profile(l, m, 2);
    CHECK(q[2].factors.size() == 2);
    CHECK(q[2].label == "OmegaLambda x OmegaLambda");

    const auto z = em_homotopy_profile(l, PiModule::zero("M", "Lambda", 0, 2), 3);
    for (const auto& e : z)
        CHECK((e.k == 0 || e.k == 2 || e.factors.empty()));
    CHECK_THROWS_AS(em_homotopy_profile(l, m, 0), StructuralError);
}

TEST_CASE("obstruction host groups") {
    const FreeResolution v = minimal_resolution(), w = constant_sphere();
    const ObstructionReport r = obstruction_report(phi(), v, w, 2);
    REQUIRE(r.stages.size() == 2);
    CHECK(r.stages[0].existence_degree == 3);
    CHECK(r.stages[0].difference_degree == 2);
    CHECK(r.stages[0].arrow_existence.to_string() == "Z/2");
    CHECK(r.stages[0].arrow_difference.is_trivial());
    CHECK(r.stages[1].arrow_existence.is_trivial());
    CHECK_FALSE(r.all_hosts_vanish());
    CHECK(obstruction_report(phi(), v, w, 0).stages.empty());

    // A map of free algebras: every host group vanishes.
    const PiModule t = free_monogenic("T", "xt", 0, 0, 2);
    const PiMap f("f", t, sphere(), {{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}, {2, IntMatrix{{12}}}});
    REQUIRE(validate_map(f).ok());
    FreeResolution rt;
    rt.name = "WT";
    rt.algebra = "T";
    rt.levels = {FreeGradedModule({{"xr", 0}})};
    rt.augmentation = {IntVector{1}};
    const ObstructionReport fr = obstruction_report(f, rt, w, 3);
    CHECK(fr.all_hosts_vanish());
}
