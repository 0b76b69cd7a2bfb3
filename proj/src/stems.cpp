#include "aqcoh/stems.hpp"

#include <sstream>

namespace aqc {

StemTable::StemTable(std::vector<std::pair<FGAbelianGroup, std::vector<std::string>>> groups, std::string unit,
                     const std::vector<Product>& products)
    : unit_(std::move(unit)), declared_(products) {
    if (groups.empty())
        throw StructuralError("stem table: no groups");
    for (auto& [g, names] : groups) {
        if (names.size() != g.ngens())
            throw StructuralError("stem table: degree " + std::to_string(groups_.size()) + " has " +
                                  std::to_string(g.ngens()) + " generators but " + std::to_string(names.size()) +
                                  " names");
        groups_.push_back(std::move(g));
        names_.push_back(std::move(names));
    }
    if (!groups_[0].torsion().empty() || groups_[0].rank() != 1)
        throw StructuralError("stem table: degree 0 must be Z, got " + groups_[0].to_string());
    if (names_[0][0] != unit_)
        throw StructuralError("stem table: unit '" + unit_ + "' is not the generator of degree 0");

    auto blank = [&](int i, int j) {
        std::vector<std::vector<IntVector>> t(groups_[i].ngens(),
                                              std::vector<IntVector>(groups_[j].ngens(), zero_vector(
                                                  i + j <= top() ? groups_[i + j].ngens() : 0)));
        return t;
    };
    for (int i = 0; i <= top(); ++i)
        for (int j = 0; j <= top(); ++j)
            if (i + j <= top())
                products_[{i, j}] = blank(i, j);
    for (int j = 0; j <= top(); ++j)
        for (std::size_t l = 0; l < groups_[j].ngens(); ++l) {
            products_[{0, j}][0][l] = groups_[j].basis(l);
            products_[{j, 0}][l][0] = groups_[j].basis(l);
        }

    for (const auto& p : products) {
        const auto a = find(p.left);
        const auto b = find(p.right);
        if (!a || !b)
            throw StructuralError("stem table: product " + p.left + " o " + p.right + " names an unknown generator");
        const int d = a->degree + b->degree;
        IntVector value;
        if (p.result.empty() || p.result == "0" || p.multiple.is_zero()) {
            value = d <= top() ? groups_[d].zero() : IntVector{};
        } else {
            const auto r = find(p.result);
            if (!r)
                throw StructuralError("stem table: unknown product result " + p.result);
            if (r->degree != d)
                throw StructuralError("stem table: " + p.left + " o " + p.right + " has degree " + std::to_string(d) +
                                      ", but " + p.result + " has degree " + std::to_string(r->degree));
            IntVector v = groups_[d].zero();
            v[r->index] = p.multiple;
            value = groups_[d].reduce(v);
        }
        if (d > top())
            continue;
        if (a->degree == 0 || b->degree == 0) {
            if (products_[{a->degree, b->degree}][a->index][b->index] != value)
                throw StructuralError("stem table: product with the unit contradicts " + p.left + " o " + p.right);
            continue;
        }
        for (const Integer& order : {groups_[a->degree].generator_order(a->index),
                                     groups_[b->degree].generator_order(b->index)}) {
            if (order.is_zero())
                continue;
            IntVector scaled = value;
            for (auto& x : scaled)
                x *= order;
            if (!is_zero(groups_[d].reduce(scaled)))
                throw StructuralError("stem table: " + p.left + " o " + p.right + " is not killed by " +
                                      order.to_string());
        }
        products_[{a->degree, b->degree}][a->index][b->index] = value;
    }
}

const StemTable& StemTable::standard() {
    static const StemTable table = [] {
        std::vector<std::pair<FGAbelianGroup, std::vector<std::string>>> g;
        g.emplace_back(FGAbelianGroup::free(1), std::vector<std::string>{"iota"});
        g.emplace_back(FGAbelianGroup::cyclic(2), std::vector<std::string>{"eta"});
        g.emplace_back(FGAbelianGroup::cyclic(2), std::vector<std::string>{"eta2"});
        g.emplace_back(FGAbelianGroup::cyclic(24), std::vector<std::string>{"nu"});
        g.emplace_back(FGAbelianGroup::trivial(), std::vector<std::string>{});
        g.emplace_back(FGAbelianGroup::trivial(), std::vector<std::string>{});
        return StemTable(std::move(g), "iota",
                         {{"eta", "eta", "eta2", 1}, {"eta", "eta2", "nu", 12}, {"eta2", "eta", "nu", 12}});
    }();
    return table;
}

const FGAbelianGroup& StemTable::group(int d) const {
    if (!in_window(d))
        throw WindowError("stem degree " + std::to_string(d) + " outside [0, " + std::to_string(top()) + "]");
    return groups_[static_cast<std::size_t>(d)];
}

const std::vector<std::string>& StemTable::names(int d) const {
    group(d);
    return names_[static_cast<std::size_t>(d)];
}

std::vector<StemGenerator> StemTable::positive_generators() const {
    std::vector<StemGenerator> out;
    for (int d = 1; d <= top(); ++d)
        for (std::size_t i = 0; i < names_[d].size(); ++i)
            out.push_back({names_[d][i], d, i});
    return out;
}

std::optional<StemGenerator> StemTable::find(const std::string& name) const {
    for (int d = 0; d <= top(); ++d)
        for (std::size_t i = 0; i < names_[d].size(); ++i)
            if (names_[d][i] == name)
                return StemGenerator{name, d, i};
    return std::nullopt;
}

StemElement StemTable::element(const std::string& name, const Integer& multiple) const {
    const auto g = find(name);
    if (!g)
        throw StructuralError("unknown stem generator '" + name + "'");
    IntVector v = groups_[g->degree].zero();
    v[g->index] = multiple;
    return reduce(g->degree, v);
}

StemElement StemTable::zero(int degree) const {
    return {degree, in_window(degree) ? groups_[degree].zero() : IntVector{}};
}

StemElement StemTable::reduce(int degree, std::span<const Integer> coords) const {
    if (!in_window(degree)) {
        if (degree < 0)
            throw WindowError("negative stem degree " + std::to_string(degree));
        return zero(degree);
    }
    return {degree, groups_[degree].reduce(coords)};
}

StemElement StemTable::add(const StemElement& a, const StemElement& b) const {
    if (a.degree != b.degree)
        throw StructuralError("adding stems of degrees " + std::to_string(a.degree) + " and " +
                              std::to_string(b.degree));
    if (!in_window(a.degree))
        return zero(a.degree);
    IntVector v = a.coords;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += b.coords[i];
    return reduce(a.degree, v);
}

StemElement StemTable::scale(const StemElement& a, const Integer& m) const {
    IntVector v = a.coords;
    for (auto& x : v)
        x *= m;
    return reduce(a.degree, v);
}

IntVector StemTable::generator_product(int i, std::size_t k, int j, std::size_t l) const {
    return products_.at({i, j})[k][l];
}

StemElement StemTable::compose(const StemElement& a, const StemElement& b) const {
    const int d = a.degree + b.degree;
    if (!in_window(d) || !in_window(a.degree) || !in_window(b.degree))
        return zero(d);
    IntVector acc = groups_[d].zero();
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        if (a.coords[k].is_zero())
            continue;
        for (std::size_t l = 0; l < b.coords.size(); ++l) {
            if (b.coords[l].is_zero())
                continue;
            const IntVector p = generator_product(a.degree, k, b.degree, l);
            const Integer c = a.coords[k] * b.coords[l];
            for (std::size_t r = 0; r < acc.size(); ++r)
                acc[r] += c * p[r];
        }
    }
    return reduce(d, acc);
}

std::string StemTable::format(const StemElement& a) const {
    if (!in_window(a.degree) || a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        const Integer& c = a.coords[i];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (c.is_one())
            os << names_[a.degree][i];
        else
            os << c << '*' << names_[a.degree][i];
    }
    return os.str();
}

const FGAbelianGroup& stem_group(int i) { return StemTable::standard().group(i); }

std::vector<std::string> check_stem_axioms(const StemTable& table) {
    std::vector<std::string> issues;
    std::vector<StemGenerator> all;
    for (int d = 0; d <= table.top(); ++d)
        for (std::size_t i = 0; i < table.names(d).size(); ++i)
            all.push_back({table.names(d)[i], d, i});
    auto basis = [&](const StemGenerator& g) { return table.element(g.name); };
    const StemElement unit = table.element(table.unit());
    for (const auto& a : all) {
        const StemElement x = basis(a);
        if (table.compose(unit, x) != x || table.compose(x, unit) != x)
            issues.push_back("unit fails on " + a.name);
        for (const auto& b : all)
            for (const auto& c : all) {
                const StemElement y = basis(b), z = basis(c);
                const StemElement lhs = table.compose(table.compose(x, y), z);
                const StemElement rhs = table.compose(x, table.compose(y, z));
                if (lhs != rhs)
                    issues.push_back("associativity fails on (" + a.name + ", " + b.name + ", " + c.name + "): " +
                                     table.format(lhs) + " vs " + table.format(rhs));
            }
    }
    return issues;
}

} // namespace aqc
