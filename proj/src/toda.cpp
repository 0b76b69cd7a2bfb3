#include "aqcoh/toda.hpp"

#include <algorithm>

namespace aqc {

void check_triple(const BracketTriple& t, const PiModule& algebra) {
    const StemTable& st = algebra.stems();
    if (!st.compose(t.g, t.f).is_zero())
        throw StructuralError("bracket: g o f = " + st.format(st.compose(t.g, t.f)) + " is not zero");
    if (t.h.size() != algebra.group(t.h_degree).ngens())
        throw StructuralError("bracket: h is not an element of " + algebra.name() + " in degree " +
                              std::to_string(t.h_degree));
    const IntVector hg = algebra.act(t.h_degree, t.h, t.g);
    if (!is_zero(hg))
        throw StructuralError("bracket: h o g = " + algebra.format(t.h_degree + t.g.degree, hg) + " is not zero");
}

Subgroup indeterminacy(const BracketTriple& t, const PiModule& algebra) {
    check_triple(t, algebra);
    const StemTable& st = algebra.stems();
    const int amb = t.ambient_degree();
    const FGAbelianGroup ambient = algebra.group(amb);
    std::vector<IntVector> gens;
    // h o theta for theta in pi_{|f|+|g|+1}
    const int s = t.f.degree + t.g.degree + 1;
    if (st.in_window(s))
        for (std::size_t k = 0; k < st.group(s).ngens(); ++k)
            gens.push_back(algebra.act(t.h_degree, t.h, StemElement{s, st.group(s).basis(k)}));
    // a o f for a in A_{|h|+|g|+1}
    const int m = t.h_degree + t.g.degree + 1;
    const FGAbelianGroup am = algebra.group(m);
    for (std::size_t k = 0; k < am.ngens(); ++k)
        gens.push_back(algebra.act(m, am.basis(k), t.f));
    return subgroup_generated(ambient, IntMatrix::from_columns(ambient.ngens(), gens));
}

TodaBracketCoset::TodaBracketCoset(std::string algebra, int degree, FGAbelianGroup ambient, IntVector representative,
                                   Subgroup indeterminacy)
    : algebra_(std::move(algebra)), degree_(degree), ambient_(std::move(ambient)),
      representative_(ambient_.reduce(representative)), indeterminacy_(std::move(indeterminacy)) {}

bool TodaBracketCoset::contains(std::span<const Integer> x) const {
    if (x.size() != ambient_.ngens())
        return false;
    IntVector diff(x.begin(), x.end());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] -= representative_[i];
    return in_span(ambient_, indeterminacy_.inclusion.matrix(), diff);
}

std::vector<IntVector> TodaBracketCoset::elements() const {
    std::vector<IntVector> out;
    for (const auto& k : indeterminacy_.group.elements()) {
        IntVector x = indeterminacy_.inclusion.apply(k);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += representative_[i];
        out.push_back(ambient_.reduce(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool TodaBracketCoset::same_set(const TodaBracketCoset& other) const {
    if (!ambient_.isomorphic(other.ambient_) || degree_ != other.degree_)
        return false;
    if (!other.contains(representative_))
        return false;
    const IntMatrix& a = indeterminacy_.inclusion.matrix();
    const IntMatrix& b = other.indeterminacy_.inclusion.matrix();
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!in_span(ambient_, b, a.column(c)))
            return false;
    for (std::size_t c = 0; c < b.cols(); ++c)
        if (!in_span(ambient_, a, b.column(c)))
            return false;
    return true;
}

TodaBracketCoset bracket(const BracketTriple& t, const PiModule& algebra, std::span<const Integer> representative) {
    Subgroup ind = indeterminacy(t, algebra);
    const int amb = t.ambient_degree();
    const FGAbelianGroup ambient = algebra.group(amb);
    if (representative.size() != ambient.ngens())
        throw StructuralError("bracket: representative is not an element of " + algebra.name() + " in degree " +
                              std::to_string(amb) + " (" + ambient.to_string() + ")");
    return TodaBracketCoset(algebra.name(), amb, ambient, IntVector(representative.begin(), representative.end()),
                            std::move(ind));
}

std::vector<IntVector> pushforward(const TodaBracketCoset& c, const PiMap& phi) {
    if (phi.source().name() != c.algebra())
        throw StructuralError("pushforward: " + phi.name() + " starts at " + phi.source().name() +
                              ", the bracket lives in " + c.algebra());
    std::vector<IntVector> out;
    for (const auto& x : c.elements())
        out.push_back(phi.apply(c.degree(), x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

RealizabilityVerdict intersect(const std::vector<IntVector>& pushed, const std::vector<IntVector>& target,
                               const FGAbelianGroup& ambient) {
    for (const auto* side : {&pushed, &target})
        for (const auto& x : *side)
            if (x.size() != ambient.ngens())
                throw StructuralError("realizability: element outside the ambient group " + ambient.to_string());
    RealizabilityVerdict v;
    for (const auto& x : pushed) {
        const IntVector rx = ambient.reduce(x);
        for (const auto& y : target)
            if (rx == ambient.reduce(y)) {
                v.intersection.push_back(rx);
                break;
            }
    }
    std::sort(v.intersection.begin(), v.intersection.end());
    v.intersection.erase(std::unique(v.intersection.begin(), v.intersection.end()), v.intersection.end());
    v.verdict = v.intersection.empty() ? Realizability::contradiction : Realizability::consistent;
    return v;
}

} // namespace

RealizabilityVerdict realizability_contradiction(const std::vector<IntVector>& pushed,
                                                 const TodaBracketCoset& target) {
    return intersect(pushed, target.elements(), target.ambient());
}

RealizabilityVerdict realizability_contradiction(const std::vector<IntVector>& pushed,
                                                 const std::vector<IntVector>& reading, const FGAbelianGroup& ambient) {
    return intersect(pushed, reading, ambient);
}

std::string to_string(Realizability r) { return r == Realizability::contradiction ? "CONTRADICTION" : "CONSISTENT"; }

} // namespace aqc
