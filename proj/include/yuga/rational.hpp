#pragma once

/**
 * @file rational.hpp
 * @brief Exact signed rationals over arbitrary-precision integers.
 *
 * Every public operation leaves a Rational in lowest terms with a positive
 * denominator; the sign lives on the numerator and zero is always 0/1.
 * Nothing here touches floating point.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "yuga/error.hpp"

namespace yuga {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Greatest common divisor of |a| and |b| by Euclid's algorithm; gcd(0, 0) = 0.
BigInt gcd(BigInt a, BigInt b);

/// floor(n / d) for d > 0, whatever the sign of n.
BigInt floor_div(const BigInt& n, const BigInt& d);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

    /// Reduces n/d to lowest terms. Throws ZeroDenominator when d == 0.
    Rational(BigInt n, BigInt d);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }

    BigInt floor() const { return floor_div(num_, den_); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Throws DivisionByZero for zero.
    Rational reciprocal() const;

    /// Canonical "n/d" form, denominator always printed ("5/1", "0/1").
    std::string str() const;

    /// Accepts "n/d" or a bare integer "n"; optional leading '-' or '+'.
    static Rational parse(std::string_view text);

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Reduced {};
    Rational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Same as the two-argument constructor, named for call sites that read better that way.
inline Rational normalize(BigInt numerator, BigInt denominator) {
    return Rational(std::move(numerator), std::move(denominator));
}

/// Whole part plus proper fraction, with the sign applying to the whole value:
/// -7/2 is -(3 1/2).
class MixedNumber {
public:
    enum class Sign { Positive, Negative };

    MixedNumber() = default;

    /// Validates the invariants instead of repairing them; throws OutOfRange.
    MixedNumber(Sign sign, BigInt whole, BigInt frac_numerator, BigInt frac_denominator);

    Sign sign() const noexcept { return sign_; }
    const BigInt& whole() const noexcept { return whole_; }
    const BigInt& frac_numerator() const noexcept { return frac_num_; }
    const BigInt& frac_denominator() const noexcept { return frac_den_; }

    /// "w n/d", prefixed with '-' when negative: "14 73/124", "-3 1/2", "5 0/1".
    std::string str() const;
    static MixedNumber parse(std::string_view text);

    friend bool operator==(const MixedNumber&, const MixedNumber&) = default;

private:
    Sign sign_ = Sign::Positive;
    BigInt whole_ = 0;
    BigInt frac_num_ = 0;
    BigInt frac_den_ = 1;
};

MixedNumber to_mixed(const Rational& r);
Rational from_mixed(const MixedNumber& m);

/// Reduces r onto [0, modulus). Throws OutOfRange if modulus < 1.
Rational mod_circle(const Rational& r, const BigInt& modulus);

/// x with x/b = c/d, i.e. b*c/d. Throws DivisionByZero when d is zero.
Rational rule_of_three(const Rational& b, const Rational& c, const Rational& d);

/// Integer nearest to r, ties away from zero.
BigInt round_half_away(const Rational& r);

inline constexpr unsigned kDefaultMaxDecimalPlaces = 50;

/// Decimal expansion of r rounded half-away-from-zero to `places` digits.
/// Never prints a negative zero. Throws OutOfRange if places > max_places.
std::string to_decimal_string(const Rational& r, unsigned places,
                              unsigned max_places = kDefaultMaxDecimalPlaces);

} // namespace yuga
