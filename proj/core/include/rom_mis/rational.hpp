#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rom_mis/errors.hpp"

namespace rommis {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Kept in canonical form: den > 0, gcd(|num|, den) = 1.
/// All geometric decisions in this library are made with this type; no
/// floating point enters any algorithmic comparison.
///
/// cpp_int stores small magnitudes (up to two limbs) inline, so coordinates
/// and the scaled fractions with denominators up to ~2^128 stay on the fast
/// path and only genuinely huge values fall back to heap-allocated limbs.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(int v) : num_(v), den_(1) {}       // NOLINT
    explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);

    /// Parses "p" or "p/q" (decimal, optional leading '-' on p; q > 0).
    static Rational parse(std::string_view text);

    /// 2^e as a rational, e >= 0.
    static Rational pow2(int e);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    int sign() const noexcept { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// Three-way comparison by exact value.
    friend int compare(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Largest integer <= value / smallest integer >= value.
    BigInt floor() const;
    BigInt ceil() const;

    /// Canonical text form: "p" when integral, else "p/q". Round-trips
    /// bit-exactly through parse().
    std::string str() const;

    /// Approximation for reporting only; never used in decisions.
    double to_double() const;

    std::size_t hash() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// floor(a / b) for b > 0, as an exact integer.
BigInt floor_div(const Rational& a, const Rational& b);

} // namespace rommis

template <>
struct std::hash<rommis::Rational> {
    std::size_t operator()(const rommis::Rational& r) const noexcept { return r.hash(); }
};
