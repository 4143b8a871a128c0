#include "yuga/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace yuga {

BigInt gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return q;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw ZeroDenominator();
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DivisionByZero();
    return Rational(den_, num_);
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view text, bool allow_sign) {
    std::string_view body = text;
    bool negative = false;
    if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
    BigInt v{std::string(body)};
    return negative ? BigInt(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
    BigInt n = parse_integer(text.substr(0, slash), true);
    BigInt d = parse_integer(text.substr(slash + 1), false);
    if (d == 0) throw ZeroDenominator();
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    return Rational(BigInt(-num_), den_, Reduced{});
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

MixedNumber::MixedNumber(Sign sign, BigInt whole, BigInt frac_numerator, BigInt frac_denominator)
    : sign_(sign), whole_(std::move(whole)), frac_num_(std::move(frac_numerator)),
      frac_den_(std::move(frac_denominator)) {
    if (whole_ < 0 || frac_num_ < 0) throw OutOfRange("mixed number parts must be nonnegative");
    if (frac_den_ <= 0) throw OutOfRange("mixed number denominator must be positive");
    if (frac_num_ >= frac_den_) throw OutOfRange("mixed number fraction must be proper");
    if (frac_num_ == 0 && frac_den_ != 1)
        throw OutOfRange("zero fractional part must be written 0/1");
    if (frac_num_ > 0 && gcd(frac_num_, frac_den_) != 1)
        throw OutOfRange("mixed number fraction must be in lowest terms");
    if (whole_ == 0 && frac_num_ == 0 && sign_ == Sign::Negative)
        throw OutOfRange("zero has no negative mixed form");
}

std::string MixedNumber::str() const {
    std::string out = sign_ == Sign::Negative ? "-" : "";
    out += whole_.str() + " " + frac_num_.str() + "/" + frac_den_.str();
    return out;
}

MixedNumber MixedNumber::parse(std::string_view text) {
    auto fail = [&] { return ParseError("not a mixed number: '" + std::string(text) + "'"); };
    Sign sign = Sign::Positive;
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        sign = Sign::Negative;
        body.remove_prefix(1);
    }
    auto space = body.find(' ');
    auto slash = body.find('/');
    if (space == std::string_view::npos || slash == std::string_view::npos || slash < space)
        throw fail();
    auto whole = body.substr(0, space);
    auto num = body.substr(space + 1, slash - space - 1);
    auto den = body.substr(slash + 1);
    if (!all_digits(whole) || !all_digits(num) || !all_digits(den)) throw fail();
    return MixedNumber(sign, BigInt(std::string(whole)), BigInt(std::string(num)),
                       BigInt(std::string(den)));
}

MixedNumber to_mixed(const Rational& r) {
    Rational mag = r.abs();
    BigInt whole = mag.floor();
    Rational frac = mag - Rational(whole);
    auto sign = r.is_negative() ? MixedNumber::Sign::Negative : MixedNumber::Sign::Positive;
    return MixedNumber(sign, std::move(whole), frac.numerator(), frac.denominator());
}

Rational from_mixed(const MixedNumber& m) {
    Rational mag = Rational(m.whole()) + Rational(m.frac_numerator(), m.frac_denominator());
    return m.sign() == MixedNumber::Sign::Negative ? -mag : mag;
}

Rational mod_circle(const Rational& r, const BigInt& modulus) {
    if (modulus < 1) throw OutOfRange("circle modulus must be at least 1");
    const BigInt span = r.denominator() * modulus;
    BigInt turns = floor_div(r.numerator(), span);
    return Rational(r.numerator() - turns * span, r.denominator());
}

Rational rule_of_three(const Rational& b, const Rational& c, const Rational& d) {
    if (d.is_zero()) throw DivisionByZero();
    return b * c / d;
}

BigInt round_half_away(const Rational& r) {
    // floor((2|n| + d) / 2d) rounds the magnitude half-up.
    BigInt n = r.numerator() < 0 ? BigInt(-r.numerator()) : r.numerator();
    BigInt q = (2 * n + r.denominator()) / (2 * r.denominator());
    return r.is_negative() ? BigInt(-q) : q;
}

std::string to_decimal_string(const Rational& r, unsigned places, unsigned max_places) {
    if (places > max_places)
        throw OutOfRange("decimal places " + std::to_string(places) + " exceed maximum " +
                         std::to_string(max_places));
    BigInt scale = boost::multiprecision::pow(BigInt(10), places);
    BigInt scaled = round_half_away(r.abs() * Rational(scale));
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');

    std::string out;
    if (r.is_negative() && scaled != 0) out = "-";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

} // namespace yuga
