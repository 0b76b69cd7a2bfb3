#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aqc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer. Values that fit in 64 bits are stored inline; any
/// operation that would overflow is redone in arbitrary precision and the
/// result is demoted again when it fits.
class Integer {
public:
    Integer() noexcept = default;

    template <std::signed_integral T>
    Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}

    template <std::unsigned_integral T>
    Integer(T v) {
        if (v <= static_cast<std::uint64_t>(INT64_MAX))
            small_ = static_cast<std::int64_t>(v);
        else
            big_ = std::make_unique<BigInt>(v);
    }

    explicit Integer(const BigInt& v);

    Integer(const Integer& other) : small_(other.small_) {
        if (other.big_)
            big_ = std::make_unique<BigInt>(*other.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& other) {
        if (this != &other) {
            small_ = other.small_;
            big_ = other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
    static Integer parse(std::string_view text);

    bool is_small() const noexcept { return !big_; }
    std::optional<std::int64_t> to_int64() const noexcept {
        if (big_)
            return std::nullopt;
        return small_;
    }
    /// Checked narrowing; throws std::overflow_error when out of range.
    std::int64_t as_int64() const;
    BigInt to_big() const;
    std::string to_string() const;

    int sign() const noexcept;
    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }

    Integer operator-() const {
        if (!big_ && small_ != INT64_MIN)
            return Integer(-small_);
        return negate_slow(*this);
    }
    Integer& operator+=(const Integer& rhs) {
        std::int64_t r;
        if (!big_ && !rhs.big_ && !__builtin_add_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
        return *this = add_slow(*this, rhs);
    }
    Integer& operator-=(const Integer& rhs) {
        std::int64_t r;
        if (!big_ && !rhs.big_ && !__builtin_sub_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
        return *this = sub_slow(*this, rhs);
    }
    Integer& operator*=(const Integer& rhs) {
        std::int64_t r;
        if (!big_ && !rhs.big_ && !__builtin_mul_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
        return *this = mul_slow(*this, rhs);
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r))
            return Integer(r);
        return add_slow(a, b);
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r))
            return Integer(r);
        return sub_slow(a, b);
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r))
            return Integer(r);
        return mul_slow(a, b);
    }
    // Truncating division and remainder, matching built-in integers.
    friend Integer operator/(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_ && b.small_ != 0 && b.small_ != -1)
            return Integer(a.small_ / b.small_);
        return div_slow(a, b);
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_ && b.small_ != 0 && b.small_ != -1)
            return Integer(a.small_ % b.small_);
        return mod_slow(a, b);
    }

    friend bool operator==(const Integer& a, const Integer& b) noexcept {
        if (!a.big_ && !b.big_)
            return a.small_ == b.small_;
        return equal_slow(a, b);
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
        if (!a.big_ && !b.big_)
            return a.small_ <=> b.small_;
        return compare_slow(a, b);
    }

    /// |a| < |b|, without materialising either absolute value.
    friend bool abs_less(const Integer& a, const Integer& b) noexcept {
        if (!a.big_ && !b.big_)
            return magnitude(a.small_) < magnitude(b.small_);
        return abs_less_slow(a, b);
    }

    std::size_t hash() const noexcept;

private:
    static Integer normalize(BigInt v);

    // Arbitrary-precision fallbacks for the inline operators.
    static Integer negate_slow(const Integer& a);
    static Integer add_slow(const Integer& a, const Integer& b);
    static Integer sub_slow(const Integer& a, const Integer& b);
    static Integer mul_slow(const Integer& a, const Integer& b);
    static Integer div_slow(const Integer& a, const Integer& b);
    static Integer mod_slow(const Integer& a, const Integer& b);
    static bool equal_slow(const Integer& a, const Integer& b) noexcept;
    static std::strong_ordering compare_slow(const Integer& a, const Integer& b) noexcept;
    static bool abs_less_slow(const Integer& a, const Integer& b) noexcept;

    // Unsigned magnitude, so INT64_MIN is handled.
    static std::uint64_t magnitude(std::int64_t v) noexcept {
        return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    }

    std::int64_t small_ = 0;
    std::unique_ptr<BigInt> big_;
};

Integer abs(const Integer& a);
/// Quotient rounded toward negative infinity. Throws on division by zero.
Integer floor_div(const Integer& a, const Integer& b);
/// Representative of a modulo |m| in [0, |m|); m == 0 returns a unchanged.
Integer floor_mod(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

using IntVector = std::vector<Integer>;

IntVector zero_vector(std::size_t n);
bool is_zero(const IntVector& v);

struct IntegerHash {
    std::size_t operator()(const Integer& v) const noexcept { return v.hash(); }
};

} // namespace aqc
