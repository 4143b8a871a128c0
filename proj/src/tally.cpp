#include "yuga/tally.hpp"

#include <stdexcept>

namespace yuga {

BigInt tally_circle(const YugaParameters& p) {
    return BigInt(p.naksatra_count()) * p.fortnights();
}

std::string tally_unit_label(const YugaParameters& p) {
    return "amsa-1/" + std::to_string(p.fortnights()) + "-naksatra";
}

TallyQuantity scaled_moon_position(const YugaParameters& p, std::uint64_t fortnight) {
    const BigInt travelled = BigInt(fortnight) * p.moon_traversals();
    return {travelled % tally_circle(p), tally_unit_label(p)};
}

TallyQuantity accumulate_tally(const YugaParameters& p, std::uint64_t fortnight) {
    const BigInt circle = tally_circle(p);
    const BigInt step = p.moon_traversals();
    BigInt count = 0;
    for (std::uint64_t n = 0; n < fortnight; ++n) {
        count += step;
        while (count >= circle) count -= circle;
    }
    return {count, tally_unit_label(p)};
}

SixthShare sixth_share(const BigInt& measures) {
    if (measures < 0) throw OutOfRange("quantity of measures must be nonnegative");
    SixthShare s{measures / 6, 0, measures % 6};
    s.producer = 5 * s.tax;
    return s;
}

Rational UnitFractionDecomposition::sum() const {
    Rational total;
    for (const auto& d : denominators) total += Rational(BigInt(1), d);
    return total;
}

std::string UnitFractionDecomposition::str() const {
    std::string out;
    for (const auto& d : denominators) {
        if (!out.empty()) out += " + ";
        out += "1/" + d.str();
    }
    return out;
}

UnitFractionDecomposition greedy_unit_fractions(const Rational& r) {
    if (r <= Rational(0) || r >= Rational(1))
        throw OutOfRange("unit fraction decomposition needs 0 < r < 1, got " + r.str());
    UnitFractionDecomposition out;
    Rational rest = r;
    while (!rest.is_zero()) {
        const BigInt& a = rest.numerator();
        const BigInt& b = rest.denominator();
        BigInt d = (b + a - 1) / a;  // ceil(b / a)
        Rational next = rest - Rational(BigInt(1), d);
        // a/b - 1/d = (a*d - b) / (b*d) with a*d - b < a, so numerators strictly fall.
        if (next.numerator() >= a) throw std::logic_error("greedy step did not shrink numerator");
        out.denominators.push_back(std::move(d));
        rest = std::move(next);
    }
    return out;
}

ModelComparison models_agree(const YugaParameters& p, std::uint64_t fortnight) {
    ModelComparison c{fortnight, scaled_moon_position(p, fortnight), tally_circle(p), {}, {}, false};
    c.tally_position = Rational(c.tally.count, p.fortnights());
    c.rational_position = moon_position(p, fortnight).total();
    c.agree = c.tally_position == c.rational_position;
    return c;
}

} // namespace yuga
