#include "aqcoh/chain_complex.hpp"
#include "aqcoh/errors.hpp"
#include "aqcoh/smith.hpp"

#include <doctest.h>

#include <random>

using namespace aqc;

namespace {

FGAbelianGroup Z(long n) { return FGAbelianGroup::cyclic(n); }
const auto cohom = ChainComplexAb::Direction::cohomological;
const auto hom = ChainComplexAb::Direction::homological;

} // namespace

TEST_CASE("homology of small complexes") {
    // Z --2--> Z : H^0 = 0, H^1 = Z/2.
    const ChainComplexAb c({Z(0), Z(0)}, {AbHom(Z(0), Z(0), IntMatrix{{2}})}, cohom);
    CHECK(c.homology(0).is_trivial());
    CHECK(c.homology(1).to_string() == "Z/2");
    CHECK(c.homology(2).is_trivial());
    CHECK(c.homology(-1).is_trivial());

    // Z/4 --2--> Z/4 --2--> Z/4 : middle homology 0.
    const AbHom two(Z(4), Z(4), IntMatrix{{2}});
    const ChainComplexAb d({Z(4), Z(4), Z(4)}, {two, two}, cohom);
    CHECK(d.homology(0).to_string() == "Z/2");
    CHECK(d.homology(1).is_trivial());
    CHECK(d.homology(2).to_string() == "Z/2");
}

TEST_CASE("d^2 != 0 is rejected") {
    const AbHom one(Z(0), Z(0), IntMatrix{{1}});
    CHECK_THROWS_AS(ChainComplexAb({Z(0), Z(0), Z(0)}, {one, one}, hom), StructuralError);
}

TEST_CASE("homology is invariant under a change of basis") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        // Z^3 -A-> Z^3 -B-> Z^3 with A supported on row 0 and B on columns 1, 2.
        IntMatrix a(3, 3), b(3, 3);
        for (std::size_t c = 0; c < 3; ++c)
            a(0, c) = static_cast<long>(rng() % 7) - 3;
        for (std::size_t r = 0; r < 3; ++r)
            b(r, 1) = static_cast<long>(rng() % 7) - 3, b(r, 2) = static_cast<long>(rng() % 7) - 3;
        IntMatrix p = IntMatrix::identity(3);
        p.add_row_multiple(1, 0, static_cast<long>(rng() % 5) - 2);
        p.add_row_multiple(2, 1, static_cast<long>(rng() % 5) - 2);
        p.swap_rows(0, static_cast<std::size_t>(rng() % 3));
        IntMatrix pinv(3, 3);
        const FGAbelianGroup f3 = FGAbelianGroup::free(3);
        const ChainComplexAb c1({f3, f3, f3}, {AbHom(f3, f3, a), AbHom(f3, f3, b)}, cohom);
        // Conjugate the middle group by p: A' = p A, B' = B p^{-1}. With p
        // unimodular, B' A' = B A = 0 and the homology is unchanged.
        IntMatrix pa = p * a;
        // p^{-1} through the adjugate of a unimodular matrix.
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                std::vector<std::size_t> rows, cols;
                for (std::size_t i = 0; i < 3; ++i) {
                    if (i != c)
                        rows.push_back(i);
                    if (i != r)
                        cols.push_back(i);
                }
                const Integer minor = determinant(p.select_rows(rows).select_cols(cols));
                pinv(r, c) = ((r + c) % 2 ? -minor : minor) * determinant(p);
            }
        REQUIRE(p * pinv == IntMatrix::identity(3));
        const ChainComplexAb c2({f3, f3, f3}, {AbHom(f3, f3, pa), AbHom(f3, f3, b * pinv)}, cohom);
        for (long n = 0; n < 3; ++n)
            CHECK(c1.homology(n).isomorphic(c2.homology(n)));
    }
}

TEST_CASE("verify_exact") {
    const AbHom inc(Z(2), Z(4), IntMatrix{{2}});
    const AbHom proj(Z(4), Z(2), IntMatrix{{1}});
    const AbHom in0 = AbHom::zero(FGAbelianGroup(), Z(2));
    const AbHom out0 = AbHom::zero(Z(2), FGAbelianGroup());
    CHECK(verify_exact({in0, inc, proj, out0}).exact());

    const AbHom zero = AbHom::zero(Z(4), Z(2));
    const ExactnessReport bad = verify_exact({in0, inc, zero, out0});
    CHECK_FALSE(bad.exact());
    REQUIRE(bad.first_failure());
    CHECK(bad.first_failure()->index == 1);
    CHECK_FALSE(bad.first_failure()->kernel_in_image);
    REQUIRE(bad.first_failure()->witness);

    const AbHom id = AbHom::identity(Z(4));
    const ExactnessReport nonzero = verify_exact({id, id});
    CHECK_FALSE(nonzero.junctions[0].composite_zero);

    CHECK_THROWS_AS(verify_exact({inc, inc}), StructuralError);
}
