#include "aqcoh/abelian.hpp"

#include "aqcoh/smith.hpp"

#include <sstream>

namespace aqc {

FGAbelianGroup::FGAbelianGroup() : presentation_(0, 0), to_canonical_(0, 0), from_canonical_(0, 0) {}

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) {
    FGAbelianGroup g;
    g.rank_ = rank;
    g.presentation_ = IntMatrix(rank, 0);
    g.to_canonical_ = IntMatrix::identity(rank);
    g.from_canonical_ = IntMatrix::identity(rank);
    return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& order) {
    const Integer o = abs(order);
    return from_cyclic_orders(std::span<const Integer>(&o, 1));
}

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(std::span<const Integer> orders) {
    IntMatrix rel(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        rel(i, i) = abs(orders[i]);
    return cokernel(rel);
}

FGAbelianGroup FGAbelianGroup::from_invariants(std::vector<Integer> torsion, std::size_t rank) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < Integer(2))
            throw std::invalid_argument("invariant factors must be at least 2");
        if (i > 0 && !(torsion[i] % torsion[i - 1]).is_zero())
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    FGAbelianGroup g;
    const std::size_t n = torsion.size() + rank;
    g.presentation_ = IntMatrix(n, torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        g.presentation_(i, i) = torsion[i];
    g.torsion_ = std::move(torsion);
    g.rank_ = rank;
    g.to_canonical_ = IntMatrix::identity(n);
    g.from_canonical_ = IntMatrix::identity(n);
    return g;
}

FGAbelianGroup cokernel(const IntMatrix& relations) {
    const std::size_t m = relations.rows();
    const SmithDecomposition s = smith_normal_form(relations, true);
    FGAbelianGroup g;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i) {
        if (i < s.rank) {
            const Integer& d = s.D(i, i);
            if (d.is_one())
                continue;
            g.torsion_.push_back(d);
        } else {
            ++g.rank_;
        }
        kept.push_back(i);
    }
    g.presentation_ = relations;
    g.to_canonical_ = s.U.select_rows(kept);
    g.from_canonical_ = s.U_inverse->select_cols(kept);
    return g;
}

Integer FGAbelianGroup::generator_order(std::size_t i) const {
    return i < torsion_.size() ? torsion_[i] : Integer(0);
}

IntVector FGAbelianGroup::generator_orders() const {
    IntVector out(ngens());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        out[i] = torsion_[i];
    return out;
}

std::optional<Integer> FGAbelianGroup::order() const {
    if (rank_ > 0)
        return std::nullopt;
    Integer o = 1;
    for (const auto& t : torsion_)
        o *= t;
    return o;
}

IntVector FGAbelianGroup::basis(std::size_t i) const {
    IntVector v(ngens());
    v.at(i) = 1;
    return reduce(v);
}

IntVector FGAbelianGroup::reduce(std::span<const Integer> canonical) const {
    if (canonical.size() != ngens())
        throw StructuralError("element has " + std::to_string(canonical.size()) + " coordinates, group " +
                              to_string() + " has " + std::to_string(ngens()) + " generators");
    IntVector out(canonical.begin(), canonical.end());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        out[i] = floor_mod(out[i], torsion_[i]);
    return out;
}

IntVector FGAbelianGroup::from_presentation(std::span<const Integer> presentation_coords) const {
    return reduce(to_canonical_.apply(presentation_coords));
}

IntVector FGAbelianGroup::to_presentation(std::span<const Integer> canonical) const {
    return from_canonical_.apply(canonical);
}

std::vector<IntVector> FGAbelianGroup::elements(std::size_t limit) const {
    if (!is_finite())
        throw std::domain_error("cannot enumerate an infinite group");
    const Integer ord = *order();
    if (Integer(limit) < ord)
        throw std::domain_error("group too large to enumerate: order " + ord.to_string());
    std::vector<IntVector> out;
    IntVector cur(ngens());
    for (;;) {
        out.push_back(cur);
        std::size_t i = ngens();
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < torsion_[i])
                break;
            cur[i] = 0;
            if (i == 0)
                return out;
        }
        if (ngens() == 0)
            return out;
    }
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion_) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    return os.str();
}

IntVector FGAbelianGroup::invariant_factors() const { return generator_orders(); }

// ---------------------------------------------------------------- AbHom

AbHom::AbHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
        throw StructuralError("AbHom: matrix is " + std::to_string(matrix_.rows()) + "x" +
                              std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.ngens()) +
                              "x" + std::to_string(source_.ngens()));
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
        matrix_.set_column(c, target_.reduce(matrix_.column(c)));
}

AbHom AbHom::zero(FGAbelianGroup source, FGAbelianGroup target) {
    IntMatrix m(target.ngens(), source.ngens());
    return AbHom(std::move(source), std::move(target), std::move(m));
}

AbHom AbHom::identity(const FGAbelianGroup& group) {
    return AbHom(group, group, IntMatrix::identity(group.ngens()));
}

AbHom AbHom::from_presentation(FGAbelianGroup source, FGAbelianGroup target, const IntMatrix& m) {
    IntMatrix canonical = target.to_canonical() * m * source.from_canonical();
    return AbHom(std::move(source), std::move(target), std::move(canonical));
}

IntVector AbHom::apply(std::span<const Integer> x) const {
    if (x.size() != source_.ngens())
        throw StructuralError("AbHom::apply: argument has wrong length");
    return target_.reduce(matrix_.apply(x));
}

bool AbHom::is_zero() const { return matrix_.is_zero(); }

std::optional<std::size_t> AbHom::torsion_defect() const {
    for (std::size_t c = 0; c < source_.torsion().size(); ++c) {
        IntVector col = matrix_.column(c);
        for (auto& x : col)
            x *= source_.torsion()[c];
        if (!aqc::is_zero(target_.reduce(col)))
            return c;
    }
    return std::nullopt;
}

bool operator==(const AbHom& a, const AbHom& b) {
    return a.source_.isomorphic(b.source_) && a.target_.isomorphic(b.target_) && a.matrix_ == b.matrix_;
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (!f.target().isomorphic(g.source()))
        throw StructuralError("compose: " + f.target().to_string() + " is not the source " + g.source().to_string());
    return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

AbHom operator+(const AbHom& a, const AbHom& b) {
    if (!a.source().isomorphic(b.source()) || !a.target().isomorphic(b.target()))
        throw StructuralError("AbHom sum: mismatched groups");
    return AbHom(a.source(), a.target(), a.matrix() + b.matrix());
}

AbHom operator-(const AbHom& a) { return AbHom(a.source(), a.target(), -a.matrix()); }

AbHom operator-(const AbHom& a, const AbHom& b) { return a + (-b); }

// ------------------------------------------------------------ subgroups

namespace {

// Append one column t_i * e_i per torsion coordinate of `target`.
IntMatrix with_torsion_columns(const IntMatrix& m, const FGAbelianGroup& target) {
    const auto& tors = target.torsion();
    IntMatrix t(target.ngens(), tors.size());
    for (std::size_t i = 0; i < tors.size(); ++i)
        t(i, i) = tors[i];
    return m.hconcat(t);
}

// Generators of {x in Z^k : m x = 0 in target}.
IntMatrix relation_lattice(const IntMatrix& m, const FGAbelianGroup& target) {
    const IntMatrix ker = integer_kernel(with_torsion_columns(m, target));
    return ker.row_range(0, m.cols());
}

} // namespace

Subgroup image(const AbHom& f) {
    FGAbelianGroup img = cokernel(relation_lattice(f.matrix(), f.target()));
    IntMatrix incl = f.matrix() * img.from_canonical();
    AbHom inclusion(img, f.target(), std::move(incl));
    return {std::move(img), std::move(inclusion)};
}

Subgroup subgroup_generated(const FGAbelianGroup& ambient, const IntMatrix& generators) {
    return image(AbHom(FGAbelianGroup::free(generators.cols()), ambient, generators));
}

Subgroup kernel(const AbHom& f) {
    return subgroup_generated(f.source(), relation_lattice(f.matrix(), f.target()));
}

Quotient quotient(const FGAbelianGroup& ambient, const IntMatrix& generators) {
    FGAbelianGroup q = cokernel(with_torsion_columns(generators, ambient));
    AbHom proj(ambient, q, q.to_canonical());
    return {std::move(q), std::move(proj)};
}

std::optional<IntVector> preimage(const AbHom& f, std::span<const Integer> y) {
    auto sol = solve(with_torsion_columns(f.matrix(), f.target()), y);
    if (!sol)
        return std::nullopt;
    sol->resize(f.source().ngens());
    return f.source().reduce(*sol);
}

bool in_span(const FGAbelianGroup& ambient, const IntMatrix& generators, std::span<const Integer> y) {
    return solve(with_torsion_columns(generators, ambient), y).has_value();
}

// ----------------------------------------------------------- direct sum

IntVector DirectSum::inject(std::size_t summand, std::span<const Integer> x) const {
    if (x.size() != summands.at(summand).ngens())
        throw StructuralError("DirectSum::inject: wrong summand length");
    IntVector block(block_size);
    for (std::size_t i = 0; i < x.size(); ++i)
        block[offsets[summand] + i] = x[i];
    return group.from_presentation(block);
}

IntVector DirectSum::to_blocks(std::span<const Integer> x) const {
    IntVector block = group.to_presentation(x);
    IntVector out;
    out.reserve(block_size);
    for (std::size_t s = 0; s < summands.size(); ++s) {
        IntVector part(block.begin() + static_cast<std::ptrdiff_t>(offsets[s]),
                       block.begin() + static_cast<std::ptrdiff_t>(offsets[s] + summands[s].ngens()));
        part = summands[s].reduce(part);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

IntVector DirectSum::component(std::span<const Integer> x, std::size_t summand) const {
    const IntVector blocks = to_blocks(x);
    return IntVector(blocks.begin() + static_cast<std::ptrdiff_t>(offsets.at(summand)),
                     blocks.begin() + static_cast<std::ptrdiff_t>(offsets[summand] + summands[summand].ngens()));
}

DirectSum direct_sum(std::vector<FGAbelianGroup> summands) {
    DirectSum out;
    IntVector orders;
    for (const auto& s : summands) {
        out.offsets.push_back(orders.size());
        const IntVector o = s.generator_orders();
        orders.insert(orders.end(), o.begin(), o.end());
    }
    out.block_size = orders.size();
    out.group = FGAbelianGroup::from_cyclic_orders(orders);
    out.summands = std::move(summands);
    return out;
}

// ---------------------------------------------------------- subquotient

Subquotient::Subquotient(FGAbelianGroup ambient, IntMatrix cycles, IntMatrix boundaries)
    : ambient_(std::move(ambient)), cycles_(std::move(cycles)) {
    by_boundaries_ = quotient(ambient_, boundaries);
    cycle_images_ = by_boundaries_.projection.matrix() * cycles_;
    AbHom into(FGAbelianGroup::free(cycles_.cols()), by_boundaries_.group, cycle_images_);
    cycle_images_ = into.matrix();
    group_ = image(into).group;
}

std::optional<IntVector> Subquotient::class_of(std::span<const Integer> cycle) const {
    const IntVector y = by_boundaries_.projection.apply(cycle);
    AbHom into(FGAbelianGroup::free(cycles_.cols()), by_boundaries_.group, cycle_images_);
    auto x = preimage(into, y);
    if (!x)
        return std::nullopt;
    return group_.from_presentation(*x);
}

IntVector Subquotient::representative(std::span<const Integer> cls) const {
    return ambient_.reduce(cycles_.apply(group_.to_presentation(cls)));
}

std::string format_vector(std::span<const Integer> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace aqc
