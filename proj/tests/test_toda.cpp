#include "fixtures.hpp"

#include "aqcoh/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fixtures;

namespace {

const StemTable& st() { return StemTable::standard(); }

BracketTriple eta_2(const IntVector& h, int h_degree = 0) {
    return BracketTriple{st().element("eta"), st().element("iota", 2), h_degree, h};
}

std::vector<IntVector> nus(std::initializer_list<long> ks) {
    std::vector<IntVector> out;
    for (long k : ks)
        out.push_back(IntVector{k});
    return out;
}

} // namespace

TEST_CASE("the bracket in Lambda") {
    const TodaBracketCoset c = bracket(eta_2(IntVector{1}), lambda(), IntVector{1});
    CHECK(c.degree() == 2);
    CHECK(c.elements() == nus({1, 3}));
    CHECK(c.contains(IntVector{3}));
    CHECK_FALSE(c.contains(IntVector{2}));
    CHECK(factors(c.indeterminacy().group) == std::vector<long>{2});
}

TEST_CASE("the bracket in the sphere") {
    const TodaBracketCoset c = bracket(eta_2(IntVector{1}), sphere(), IntVector{1});
    CHECK(c.degree() == 2);
    CHECK(c.elements() == nus({1, 13}));
}

TEST_CASE("cosets do not depend on the representative") {
    for (const PiModule& a : {lambda(), sphere()}) {
        const BracketTriple t = eta_2(IntVector{1});
        const TodaBracketCoset c = bracket(t, a, IntVector{1});
        for (const auto& x : c.elements()) {
            const TodaBracketCoset other = bracket(t, a, x);
            CHECK(other.same_set(c));
            CHECK(other.elements() == c.elements());
        }
        const TodaBracketCoset shifted = bracket(t, a, IntVector{2});
        CHECK_FALSE(shifted.same_set(c));
    }
}

TEST_CASE("pushforward is elementwise and respects the coset structure") {
    const TodaBracketCoset c = bracket(eta_2(IntVector{1}), lambda(), IntVector{1});
    const std::vector<IntVector> pushed = pushforward(c, phi());
    CHECK(pushed == nus({6, 18}));
    // phi(rep) + phi(indeterminacy) reproduces the same set.
    std::vector<IntVector> rebuilt;
    const FGAbelianGroup amb = sphere().group(2);
    for (const auto& k : c.indeterminacy().group.elements()) {
        IntVector x = phi().apply(2, c.representative());
        const IntVector y = phi().apply(2, c.indeterminacy().inclusion.apply(k));
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += y[i];
        rebuilt.push_back(amb.reduce(x));
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    CHECK(rebuilt == pushed);

    CHECK(pushforward(c, psi()) == nus({12}));
    CHECK_THROWS_AS(pushforward(bracket(eta_2(IntVector{1}), sphere(), IntVector{1}), phi()), StructuralError);
}

TEST_CASE("realizability verdicts under every reading") {
    const TodaBracketCoset source = bracket(eta_2(IntVector{1}), lambda(), IntVector{1});
    const TodaBracketCoset target = bracket(eta_2(IntVector{1}), sphere(), IntVector{1});
    const std::vector<IntVector> pushed = pushforward(source, phi());
    const FGAbelianGroup amb = sphere().group(2);

    CHECK(realizability_contradiction(pushed, target).verdict == Realizability::contradiction);
    for (const auto& reading : {nus({1, 13}), nus({1, 23}), nus({1, 12})})
        CHECK(realizability_contradiction(pushed, reading, amb).verdict == Realizability::contradiction);

    const RealizabilityVerdict self = realizability_contradiction(target.elements(), target);
    CHECK(self.verdict == Realizability::consistent);
    CHECK(self.intersection == target.elements());

    const TodaBracketCoset with_zero = bracket(eta_2(IntVector{1}), sphere(), IntVector{12});
    CHECK(realizability_contradiction(nus({0}), with_zero).verdict == Realizability::consistent);

    CHECK_THROWS_AS(realizability_contradiction({IntVector{1, 0}}, target), StructuralError);
    CHECK(to_string(Realizability::contradiction) == "CONTRADICTION");
}

TEST_CASE("non-composable triples are rejected") {
    const BracketTriple gf{st().element("eta"), st().element("eta"), 0, IntVector{1}};
    CHECK_THROWS_AS(indeterminacy(gf, lambda()), StructuralError);
    const BracketTriple hg{st().zero(1), st().element("iota"), 0, IntVector{1}};
    CHECK_THROWS_AS(indeterminacy(hg, lambda()), StructuralError);
    CHECK_THROWS_AS(bracket(eta_2(IntVector{1}), lambda(), IntVector{1, 1}), StructuralError);
}
