#include "aqcoh/integer.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace aqc {

Integer::Integer(const BigInt& v) {
    if (v >= INT64_MIN && v <= INT64_MAX)
        small_ = static_cast<std::int64_t>(v);
    else
        big_ = std::make_unique<BigInt>(v);
}

Integer Integer::normalize(BigInt v) {
    Integer out;
    if (v >= INT64_MIN && v <= INT64_MAX)
        out.small_ = static_cast<std::int64_t>(v);
    else
        out.big_ = std::make_unique<BigInt>(std::move(v));
    return out;
}

Integer Integer::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size())
        throw std::invalid_argument("malformed integer literal");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
    const BigInt magnitude(std::string(text.substr(i)));
    return normalize(text[0] == '-' ? BigInt(-magnitude) : magnitude);
}

std::int64_t Integer::as_int64() const {
    if (big_)
        throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
    return small_;
}

BigInt Integer::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string Integer::to_string() const { return big_ ? big_->str() : std::to_string(small_); }

int Integer::sign() const noexcept {
    if (big_)
        return big_->sign();
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::negate_slow(const Integer& a) { return normalize(-a.to_big()); }
Integer Integer::add_slow(const Integer& a, const Integer& b) { return normalize(a.to_big() + b.to_big()); }
Integer Integer::sub_slow(const Integer& a, const Integer& b) { return normalize(a.to_big() - b.to_big()); }
Integer Integer::mul_slow(const Integer& a, const Integer& b) { return normalize(a.to_big() * b.to_big()); }

Integer Integer::div_slow(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1))
        return Integer(a.small_ / b.small_);
    return normalize(a.to_big() / b.to_big());
}

Integer Integer::mod_slow(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_) {
        if (b.small_ == -1)
            return Integer(0);
        return Integer(a.small_ % b.small_);
    }
    return normalize(a.to_big() % b.to_big());
}

bool Integer::equal_slow(const Integer& a, const Integer& b) noexcept {
    // normalized representation: big values never fit in 64 bits
    if (!a.big_ || !b.big_)
        return false;
    return *a.big_ == *b.big_;
}

std::strong_ordering Integer::compare_slow(const Integer& a, const Integer& b) noexcept {
    const BigInt x = a.to_big();
    const BigInt y = b.to_big();
    if (x < y)
        return std::strong_ordering::less;
    if (x > y)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Integer::abs_less_slow(const Integer& a, const Integer& b) noexcept {
    return boost::multiprecision::abs(a.to_big()) < boost::multiprecision::abs(b.to_big());
}

std::size_t Integer::hash() const noexcept {
    if (!big_)
        return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->str());
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0)))
        q -= 1;
    return q;
}

Integer floor_mod(const Integer& a, const Integer& m) {
    if (m.is_zero())
        return a;
    Integer r = a % m;
    if (r.sign() < 0)
        r += abs(m);
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    auto sa = a.to_int64();
    auto sb = b.to_int64();
    if (sa && sb && *sa != INT64_MIN && *sb != INT64_MIN) {
        std::int64_t x = *sa < 0 ? -*sa : *sa;
        std::int64_t y = *sb < 0 ? -*sb : *sb;
        while (y != 0) {
            std::int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(x);
    }
    return Integer(boost::multiprecision::gcd(a.to_big(), b.to_big()));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

IntVector zero_vector(std::size_t n) { return IntVector(n); }

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

} // namespace aqc
