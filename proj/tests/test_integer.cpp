#include "aqcoh/integer.hpp"

#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

using aqc::BigInt;
using aqc::Integer;

TEST_CASE("small arithmetic stays inline") {
    const Integer a = 17, b = -5;
    CHECK(a + b == 12);
    CHECK(a - b == 22);
    CHECK(a * b == -85);
    CHECK(a / b == -3);
    CHECK(a % b == 2);
    CHECK((a * b).is_small());
}

TEST_CASE("overflow widens and results demote back") {
    const Integer big = std::numeric_limits<std::int64_t>::max();
    const Integer sum = big + 1;
    CHECK_FALSE(sum.is_small());
    CHECK(sum.to_string() == "9223372036854775808");
    const Integer back = sum - 1;
    CHECK(back.is_small());
    CHECK(back == big);

    const Integer sq = big * big;
    CHECK(sq.to_big() == BigInt(std::numeric_limits<std::int64_t>::max()) * std::numeric_limits<std::int64_t>::max());
    CHECK(sq / big == big);

    const Integer min = std::numeric_limits<std::int64_t>::min();
    CHECK((-min).to_string() == "9223372036854775808");
    CHECK(aqc::abs(min).to_big() == -BigInt(std::numeric_limits<std::int64_t>::min()));
    CHECK_THROWS_AS(sum.as_int64(), std::overflow_error);
}

TEST_CASE("floor division, modulus and gcd") {
    CHECK(aqc::floor_div(-7, 2) == -4);
    CHECK(aqc::floor_mod(-7, 2) == 1);
    CHECK(aqc::floor_mod(-7, -4) == 1);
    CHECK(aqc::floor_mod(5, 0) == 5);
    CHECK(aqc::gcd(12, -18) == 6);
    CHECK(aqc::gcd(0, 0) == 0);
    CHECK_THROWS(aqc::floor_div(1, 0));
}

TEST_CASE("parse and compare") {
    CHECK(Integer::parse("-123456789012345678901234567890").to_string() == "-123456789012345678901234567890");
    CHECK(Integer::parse("+42") == 42);
    CHECK_THROWS_AS(Integer::parse("4x"), std::invalid_argument);
    CHECK(Integer(-3) < Integer(2));
    CHECK(Integer::parse("100000000000000000000") > Integer(std::numeric_limits<std::int64_t>::max()));
    CHECK(abs_less(Integer(-2), Integer(3)));
    CHECK_FALSE(abs_less(Integer(-3), Integer(2)));
}

TEST_CASE("random agreement with cpp_int") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(std::numeric_limits<std::int64_t>::min() / 2,
                                                     std::numeric_limits<std::int64_t>::max() / 2);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t x = dist(rng), y = dist(rng) | 1;
        const BigInt bx = x, by = y;
        const Integer a = x, b = y;
        CHECK((a * b).to_big() == bx * by);
        CHECK((a * b * b - a).to_big() == bx * by * by - bx);
        CHECK((a / b).to_big() == bx / by);
        CHECK((a % b).to_big() == bx % by);
        CHECK(((a * b) / b) == a);
    }
}
