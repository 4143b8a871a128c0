#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "yuga/rational.hpp"

using namespace yuga;

namespace {

bool canonical(const Rational& r) {
    if (r.denominator() <= 0) return false;
    if (r.is_zero()) return r.denominator() == 1;
    return gcd(r.numerator(), r.denominator()) == 1;
}

} // namespace

TEST_SUITE("rational") {

TEST_CASE("gcd agrees with trial division") {
    CHECK(gcd(1809, 124) == oracle::trial_division_gcd(1809, 124));
    CHECK(gcd(1809, 124) == 1);
    CHECK(gcd(3618, 124) == 2);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 18) == 6);
    for (int i = 0; i < 500; ++i) {
        auto a = oracle::uniform(-5000, 5000), b = oracle::uniform(-5000, 5000);
        CHECK(gcd(a, b) == oracle::trial_division_gcd(a, b));
    }
}

TEST_CASE("normalize") {
    auto r = normalize(1809, 124);
    CHECK(r.numerator() == 1809);
    CHECK(r.denominator() == 124);
    CHECK(normalize(2, 4) == Rational(1, 2));
    auto h = normalize(-3, -6);
    CHECK(h.numerator() == 1);
    CHECK(h.denominator() == 2);
    CHECK(normalize(3, -6).numerator() == -1);
    CHECK(normalize(0, -7).denominator() == 1);
    CHECK_THROWS_AS(normalize(1, 0), ZeroDenominator);
}

TEST_CASE("lowest terms after every operation") {
    for (int i = 0; i < 2000; ++i) {
        auto a = oracle::random_rational(1000), b = oracle::random_rational(1000);
        CHECK(canonical(a));
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a * b));
        if (!b.is_zero()) CHECK(canonical(a / b));
        CHECK(canonical(-a));
    }
}

TEST_CASE("arithmetic examples") {
    const Rational rate(1809, 124);
    CHECK(rate + rate == Rational(1809, 62));
    CHECK(to_mixed(rate + rate).str() == "29 11/62");
    CHECK(rate + Rational(0) == rate);
    CHECK(Rational(1, 2) * Rational(1, 3) == Rational(1, 6));
    CHECK_THROWS_AS(rate / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZero);
}

TEST_CASE("algebraic laws") {
    for (int i = 0; i < 1000; ++i) {
        auto a = oracle::random_rational(500), b = oracle::random_rational(500),
             c = oracle::random_rational(500);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("ordering matches cross multiplication") {
    for (int i = 0; i < 1000; ++i) {
        auto a = oracle::random_rational(300), b = oracle::random_rational(300);
        bool less = a.numerator() * b.denominator() < b.numerator() * a.denominator();
        CHECK((a < b) == less);
    }
}

TEST_CASE("repeated accumulation stays exact") {
    const Rational rate(1809, 124);
    Rational total;
    for (int i = 0; i < 124 * 50; ++i) total += rate;
    CHECK(total == Rational(1809 * 50));
}

TEST_CASE("big values do not overflow") {
    Rational r(1, 3);
    for (int i = 0; i < 200; ++i) r *= Rational(BigInt(1) << 64, 3);
    CHECK(canonical(r));
    CHECK(r / r == Rational(1));
}

TEST_CASE("mixed numbers") {
    CHECK(to_mixed(Rational(1809, 124)).str() == "14 73/124");
    auto five = to_mixed(Rational(5));
    CHECK(five.sign() == MixedNumber::Sign::Positive);
    CHECK(five.whole() == 5);
    CHECK(five.frac_numerator() == 0);
    CHECK(five.frac_denominator() == 1);
    CHECK(five.str() == "5 0/1");
    auto neg = to_mixed(Rational(-7, 2));
    CHECK(neg.sign() == MixedNumber::Sign::Negative);
    CHECK(neg.whole() == 3);
    CHECK(neg.str() == "-3 1/2");
    CHECK(to_mixed(Rational(-1, 3)).str() == "-0 1/3");
    CHECK(to_mixed(Rational(0)).str() == "0 0/1");

    CHECK_THROWS_AS(MixedNumber(MixedNumber::Sign::Positive, 1, 4, 3), OutOfRange);
    CHECK_THROWS_AS(MixedNumber(MixedNumber::Sign::Positive, 1, 2, 4), OutOfRange);
    CHECK_THROWS_AS(MixedNumber(MixedNumber::Sign::Positive, 1, 0, 4), OutOfRange);
    CHECK_THROWS_AS(MixedNumber(MixedNumber::Sign::Negative, 0, 0, 1), OutOfRange);
}

TEST_CASE("mixed round trip") {
    for (int i = 0; i < 2000; ++i) {
        auto r = oracle::random_rational(10000);
        auto m = to_mixed(r);
        CHECK(from_mixed(m) == r);
        CHECK(to_mixed(from_mixed(m)) == m);
        CHECK(MixedNumber::parse(m.str()) == m);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("text parsing") {
    CHECK(Rational::parse("1809/124") == Rational(1809, 124));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("72") == Rational(72));
    CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(MixedNumber::parse("14/124"), ParseError);
    CHECK_THROWS_AS(MixedNumber::parse("14 146/124"), OutOfRange);
    std::ostringstream os;
    os << Rational(73, 124);
    CHECK(os.str() == "73/124");
}

TEST_CASE("mod circle") {
    CHECK(mod_circle(Rational(1809), 27) == Rational(0));
    CHECK(mod_circle(Rational(3618, 124), 27) == Rational(135, 62));
    CHECK(to_mixed(mod_circle(Rational(3618, 124), 27)).str() == "2 11/62");
    CHECK(mod_circle(Rational(5, 2), 27) == Rational(5, 2));
    CHECK(mod_circle(Rational(-1, 2), 27) == Rational(53, 2));
    CHECK_THROWS_AS(mod_circle(Rational(1), 0), OutOfRange);

    for (int i = 0; i < 2000; ++i) {
        auto r = oracle::random_rational(100000);
        BigInt m = oracle::uniform(1, 400);
        auto q = mod_circle(r, m);
        CHECK(q >= Rational(0));
        CHECK(q < Rational(m));
        CHECK(((r - q) / Rational(m)).is_integer());
    }
}

TEST_CASE("rule of three") {
    CHECK(rule_of_three(1, 1809, 124) == Rational(1809, 124));
    CHECK(rule_of_three(2, 3, 6) == Rational(1));
    CHECK(rule_of_three(5, 62, 1) == Rational(310));
    CHECK_THROWS_AS(rule_of_three(1, 2, 0), DivisionByZero);
    for (int i = 0; i < 2000; ++i) {
        auto b = oracle::random_rational(1000), c = oracle::random_rational(1000),
             d = oracle::random_rational(1000);
        if (d.is_zero()) continue;
        CHECK(rule_of_three(b, c, d) * d == b * c);
    }
}

TEST_CASE("round half away from zero") {
    CHECK(round_half_away(Rational(5, 2)) == 3);
    CHECK(round_half_away(Rational(-5, 2)) == -3);
    CHECK(round_half_away(Rational(7, 3)) == 2);
    CHECK(round_half_away(Rational(-7, 3)) == -2);
    CHECK(round_half_away(Rational(1680)) == 1680);
}

TEST_CASE("decimal strings") {
    CHECK(to_decimal_string(Rational(1809, 124), 5) == "14.58871");
    CHECK(to_decimal_string(Rational(1, 2), 3) == "0.500");
    CHECK(to_decimal_string(Rational(73, 124), 5) == oracle::long_division(73, 124, 5));
    CHECK(to_decimal_string(Rational(73, 124), 5) == "0.58871");
    CHECK(to_decimal_string(Rational(1, 2), 0) == "1");
    CHECK(to_decimal_string(Rational(-1, 2), 0) == "-1");
    CHECK(to_decimal_string(Rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal_string(Rational(-7, 2), 1) == "-3.5");
    CHECK(to_decimal_string(Rational(1, 3), 50).size() == 52);
    CHECK_THROWS_AS(to_decimal_string(Rational(1, 3), 51), OutOfRange);
    CHECK(to_decimal_string(Rational(1, 3), 60, 60).size() == 62);
}

TEST_CASE("decimal strings agree with long division") {
    for (int i = 0; i < 1000; ++i) {
        auto r = oracle::random_rational(1000000);
        auto places = static_cast<unsigned>(oracle::uniform(0, 12));
        CHECK(to_decimal_string(r, places) ==
              oracle::long_division(r.numerator(), r.denominator(), places));
    }
}

} // TEST_SUITE
