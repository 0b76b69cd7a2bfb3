#pragma once

// The worked example, written out by hand with n anchored at 0.

#include "aqcoh/cohomology.hpp"
#include "aqcoh/toda.hpp"

namespace fixtures {

using namespace aqc;

inline FGAbelianGroup Zmod(long n) { return FGAbelianGroup::cyclic(n); }

/// Lambda: alpha (Z/2, n), alpha.eta (Z/2, n+1), beta (Z/4, n+2) with
/// alpha o eta^2 = 2 beta.
inline PiModule lambda(long eta_on_alpha = 1, long eta2_on_alpha = 2, long eta_on_alphaeta = 2) {
    PiModule m("Lambda", "Lambda", 0,
               {{Zmod(2), {"alpha"}}, {Zmod(2), {"alpha.eta"}}, {Zmod(4), {"beta"}}});
    m.set_action(0, "eta", IntMatrix{{eta_on_alpha}});
    m.set_action(0, "eta2", IntMatrix{{eta2_on_alpha}});
    m.set_action(1, "eta", IntMatrix{{eta_on_alphaeta}});
    return m;
}

/// The free algebra on one generator in degree n-1.
inline PiModule sphere() { return free_monogenic("S", "xp", -1, -1, 2); }

inline FreeTerm term(const std::string& g, const std::string& stem, long c = 1) { return {g, stem, c}; }

/// The minimal resolution of Lambda with six levels.
inline FreeResolution minimal_resolution() {
    FreeResolution r;
    r.name = "V";
    r.algebra = "Lambda";
    const FreeGradedModule v0({{"x", 0}, {"y", 2}});
    const FreeGradedModule v1({{"z", 0}, {"w", 2}});
    const FreeGradedModule v2({{"u", 1}});
    const FreeGradedModule v3({{"v", 1}});
    const FreeGradedModule v4({{"t", 2}});
    const FreeGradedModule v5({{"s", 2}});
    r.levels = {v0, v1, v2, v3, v4, v5};
    r.differentials = {
        {v1, v0, {make_element(v0, 0, {term("x", "iota", 2)}),
                  make_element(v0, 2, {term("y", "iota", 2), term("x", "eta2", -1)})}},
        {v2, v1, {make_element(v1, 1, {term("z", "eta")})}},
        {v3, v2, {make_element(v2, 1, {term("u", "iota", 2)})}},
        {v4, v3, {make_element(v3, 2, {term("v", "eta")})}},
        {v5, v4, {make_element(v4, 2, {term("t", "iota", 2)})}},
    };
    r.augmentation = {IntVector{1}, IntVector{1}};
    return r;
}

/// The free algebra is its own resolution.
inline FreeResolution constant_sphere() {
    FreeResolution r;
    r.name = "W";
    r.algebra = "S";
    r.levels = {FreeGradedModule({{"xq", -1}})};
    r.augmentation = {IntVector{1}};
    return r;
}

/// alpha -> xp.eta, alpha.eta -> xp.eta2, beta -> beta_image * xp.nu.
inline PiMap map_to_sphere(const std::string& name, long on_alpha, long beta_image) {
    return PiMap(name, lambda(), sphere(),
                 {{0, IntMatrix{{on_alpha}}}, {1, IntMatrix{{on_alpha}}}, {2, IntMatrix{{beta_image}}}});
}

inline PiMap phi() { return map_to_sphere("phi", 1, 6); }
inline PiMap psi() { return map_to_sphere("psi", 0, 12); }

inline std::vector<long> factors(const FGAbelianGroup& g) {
    std::vector<long> out;
    for (const auto& t : g.invariant_factors())
        out.push_back(t.as_int64());
    return out;
}

} // namespace fixtures
