#include "fixtures.hpp"

#include "aqcoh/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fixtures;

namespace {

bool has_kind(const ValidationReport& r, const std::string& kind) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

} // namespace

TEST_CASE("the worked-example algebras are valid") {
    CHECK(validate_algebra(lambda()).ok());
    CHECK(validate_algebra(sphere()).ok());
    CHECK(lambda().is_algebra());
    CHECK(lambda().group(3).is_trivial());
    CHECK(lambda().group(-1).is_trivial());
    CHECK(factors(sphere().group(2)) == std::vector<long>{24});
    CHECK(sphere().names(0) == std::vector<std::string>{"xp.eta"});
}

TEST_CASE("action on elements") {
    const PiModule l = lambda();
    const StemTable& st = l.stems();
    CHECK(l.act(0, IntVector{1}, st.element("eta")) == IntVector{1});
    CHECK(l.act(0, IntVector{1}, st.element("eta2")) == IntVector{2});
    CHECK(l.act(1, IntVector{1}, st.element("eta")) == IntVector{2});
    CHECK(l.act(0, IntVector{1}, st.element("nu")).empty());
    CHECK(l.format(2, IntVector{2}) == "2*beta");
    CHECK(l.find("beta")->first == 2);
    CHECK_FALSE(l.find("gamma"));
}

TEST_CASE("mutating the action is caught") {
    // (alpha eta) o eta = beta breaks bilinearity and associativity.
    const ValidationReport a = validate_algebra(lambda(1, 2, 1));
    CHECK(has_kind(a, "torsion"));
    CHECK(has_kind(a, "associativity"));
    // alpha o eta^2 = 0 while (alpha o eta) o eta = 2 beta.
    const ValidationReport b = validate_algebra(lambda(1, 0, 2));
    CHECK(has_kind(b, "associativity"));
    CHECK_FALSE(has_kind(b, "torsion"));
}

TEST_CASE("phi(beta) is forced into {6 nu, 18 nu}") {
    std::vector<long> valid;
    for (long b = 0; b < 24; ++b)
        if (validate_map(map_to_sphere("f", 1, b)).ok())
            valid.push_back(b);
    CHECK(valid == std::vector<long>{6, 18});

    std::vector<long> trivial_on_alpha;
    for (long b = 0; b < 24; ++b)
        if (validate_map(map_to_sphere("f", 0, b)).ok())
            trivial_on_alpha.push_back(b);
    CHECK(trivial_on_alpha == std::vector<long>{0, 12});

    CHECK(validate_map(phi()).ok());
    CHECK(validate_map(psi()).ok());
    CHECK(validate_map(PiMap::identity("id", lambda())).ok());
}

TEST_CASE("loops shift the window and keep the base") {
    const PiModule l = lambda();
    const PiModule o = loop(l);
    CHECK(o.name() == "OmegaLambda");
    CHECK(o.base() == "Lambda");
    CHECK_FALSE(o.is_algebra());
    CHECK(o.dmin() == -1);
    CHECK(o.dmax() == 1);
    for (int d = -1; d <= 1; ++d)
        CHECK(o.group(d).isomorphic(l.group(d + 1)));
    CHECK(validate_algebra(o).ok());

    const PiModule oo = loop(o);
    CHECK(oo.base() == "Lambda");
    CHECK(oo.dmin() == -2);
    CHECK(oo.group(0).to_string() == "Z/4");
    CHECK(validate_algebra(oo).ok());

    const PiMap lp = loop(phi());
    CHECK(lp.source().name() == "OmegaLambda");
    CHECK(lp.target().name() == "OmegaS");
    CHECK(lp.apply(1, IntVector{1}) == IntVector{6});
    CHECK(coefficient_map(lp, phi()).ok());
}

TEST_CASE("restriction of scalars") {
    const PiModule r = restrict_scalars(loop(sphere()), phi(), "Restricted");
    CHECK(r.base() == "Lambda");
    CHECK(r.name() == "Restricted");
    CHECK(factors(r.group(1)) == std::vector<long>{24});
    CHECK(validate_algebra(r).ok());
    CHECK_THROWS_AS(restrict_scalars(loop(lambda()), phi()), StructuralError);
}

TEST_CASE("coefficient maps must sit over the algebra map") {
    const PiMap id = PiMap::identity("id", lambda());
    CHECK(has_kind(coefficient_map(loop(phi()), id), "base"));
    CHECK(coefficient_map(loop(id), id).ok());
}

TEST_CASE("free monogenic algebras") {
    const PiModule t = free_monogenic("T", "xt", 0, 0, 2);
    CHECK(t.names(0) == std::vector<std::string>{"xt"});
    CHECK(t.names(1) == std::vector<std::string>{"xt.eta"});
    CHECK(t.names(2) == std::vector<std::string>{"xt.eta2"});
    CHECK(validate_algebra(t).ok());
    const PiModule s = sphere();
    CHECK(s.act(0, IntVector{1}, s.stems().element("eta2")) == IntVector{12});
}
