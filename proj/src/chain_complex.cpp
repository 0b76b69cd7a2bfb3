#include "aqcoh/chain_complex.hpp"

namespace aqc {

ChainComplexAb::ChainComplexAb(std::vector<FGAbelianGroup> groups, std::vector<AbHom> maps, Direction direction)
    : groups_(std::move(groups)), maps_(std::move(maps)), direction_(direction) {
    if (groups_.empty() ? !maps_.empty() : maps_.size() + 1 != groups_.size())
        throw StructuralError("chain complex: " + std::to_string(groups_.size()) + " groups need " +
                              std::to_string(groups_.empty() ? 0 : groups_.size() - 1) + " maps, got " +
                              std::to_string(maps_.size()));
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const auto& lo = groups_[i];
        const auto& hi = groups_[i + 1];
        const auto& src = direction_ == Direction::homological ? hi : lo;
        const auto& tgt = direction_ == Direction::homological ? lo : hi;
        if (!maps_[i].source().isomorphic(src) || !maps_[i].target().isomorphic(tgt))
            throw StructuralError("chain complex: map " + std::to_string(i) + " has the wrong shape");
    }
    for (std::size_t i = 0; i + 1 < maps_.size(); ++i) {
        const AbHom twice = direction_ == Direction::homological ? compose(maps_[i], maps_[i + 1])
                                                                 : compose(maps_[i + 1], maps_[i]);
        if (!twice.is_zero())
            throw StructuralError("chain complex: composite of maps " + std::to_string(i) + " and " +
                                  std::to_string(i + 1) + " is nonzero");
    }
}

FGAbelianGroup ChainComplexAb::group(long n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= groups_.size())
        return FGAbelianGroup::trivial();
    return groups_[static_cast<std::size_t>(n)];
}

AbHom ChainComplexAb::outgoing(long n) const {
    // homological: d_n = maps[n-1]; cohomological: maps[n]
    const long idx = direction_ == Direction::homological ? n - 1 : n;
    if (idx >= 0 && static_cast<std::size_t>(idx) < maps_.size())
        return maps_[static_cast<std::size_t>(idx)];
    const long to = direction_ == Direction::homological ? n - 1 : n + 1;
    return AbHom::zero(group(n), group(to));
}

AbHom ChainComplexAb::incoming(long n) const {
    const long idx = direction_ == Direction::homological ? n : n - 1;
    if (idx >= 0 && static_cast<std::size_t>(idx) < maps_.size())
        return maps_[static_cast<std::size_t>(idx)];
    const long from = direction_ == Direction::homological ? n + 1 : n - 1;
    return AbHom::zero(group(from), group(n));
}

Subquotient ChainComplexAb::homology_subquotient(long n) const {
    const Subgroup cycles = kernel(outgoing(n));
    const Subgroup boundaries = image(incoming(n));
    return Subquotient(group(n), cycles.inclusion.matrix(), boundaries.inclusion.matrix());
}

bool ExactnessReport::exact() const {
    for (const auto& j : junctions)
        if (!j.exact())
            return false;
    return true;
}

std::optional<Junction> ExactnessReport::first_failure() const {
    for (const auto& j : junctions)
        if (!j.exact())
            return j;
    return std::nullopt;
}

ExactnessReport verify_exact(const std::vector<AbHom>& seq) {
    ExactnessReport report;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const AbHom& f = seq[i];
        const AbHom& g = seq[i + 1];
        if (!f.target().isomorphic(g.source()))
            throw StructuralError("verify_exact: map " + std::to_string(i) + " lands in " + f.target().to_string() +
                                  " but map " + std::to_string(i + 1) + " starts at " + g.source().to_string());
        Junction j;
        j.index = i;
        for (std::size_t c = 0; c < f.source().ngens() && j.composite_zero; ++c) {
            const IntVector fx = f.apply(f.source().basis(c));
            if (!is_zero(g.apply(fx))) {
                j.composite_zero = false;
                j.witness = fx;
            }
        }
        if (j.composite_zero) {
            const Subgroup ker = kernel(g);
            for (std::size_t c = 0; c < ker.group.ngens(); ++c) {
                const IntVector k = ker.inclusion.apply(ker.group.basis(c));
                if (!in_span(f.target(), f.matrix(), k)) {
                    j.kernel_in_image = false;
                    j.witness = k;
                    break;
                }
            }
        }
        report.junctions.push_back(std::move(j));
    }
    return report;
}

} // namespace aqc
