#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace regain {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binary rational m / 2^e. This is the only number type in the
/// project; there is no floating-point fallback and no general rational.
///
/// Canonical form: e == 0 or m is odd, so every value has exactly one
/// representation and equality is structural.
class Dyadic {
public:
    Dyadic() = default;
    explicit Dyadic(BigInt integer) : num_(std::move(integer)) {}
    explicit Dyadic(std::int64_t integer) : num_(integer) {}

    /// m / 2^e, normalized.
    static Dyadic scaled(BigInt m, std::uint64_t e);
    /// 2^{-k}.
    static Dyadic pow2_neg(std::uint64_t k) { return scaled(BigInt(1), k); }
    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(BigInt(1)); }

    const BigInt& mantissa() const { return num_; }
    std::uint64_t exponent() const { return exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator-() const;
    Dyadic operator*(const Dyadic& o) const;

    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

    /// Multiply by 2^k (k may be negative). Exact.
    Dyadic mul_pow2(std::int64_t k) const;

    /// Multiply by a small nonnegative integer. Exact.
    Dyadic mul_uint(std::uint64_t n) const;

    std::strong_ordering operator<=>(const Dyadic& o) const { return compare(o); }
    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }

    BigInt floor() const;
    BigInt ceil() const;

    /// Canonical text form "m/2^e"; integers print as "m/2^0".
    std::string str() const;
    static Dyadic parse(const std::string& text);

private:
    std::strong_ordering compare(const Dyadic& o) const;
    void normalize();

    BigInt num_;             // mantissa, arbitrary precision, signed
    std::uint64_t exp_ = 0;  // value = num_ / 2^exp_
};

}  // namespace regain
