#include "yuga/precession.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace yuga {

namespace {

const BigInt kFullCircle = 360;

} // namespace

Rational naksatra_span_degrees() {
    return Rational(kFullCircle, kZodiacNaksatras);
}

EclipticLongitude::EclipticLongitude(const Rational& degrees)
    : degrees_(mod_circle(degrees, kFullCircle)) {}

EclipticLongitude EclipticLongitude::from_dms(std::int64_t degrees, std::int64_t minutes,
                                              const Rational& seconds) {
    return EclipticLongitude(Rational(degrees) + Rational(minutes, 60) + seconds / Rational(3600));
}

std::string EclipticLongitude::exact_str() const {
    return degrees_.str() + " deg";
}

std::string EclipticLongitude::dms_str() const {
    return format_dms(degrees_);
}

std::string format_dms(const Rational& degrees) {
    if (degrees.is_negative()) throw OutOfRange("negative angle " + degrees.str());
    const BigInt whole = degrees.floor();
    const Rational minutes_total = (degrees - Rational(whole)) * Rational(60);
    const BigInt minutes = minutes_total.floor();
    std::string out = whole.str() + "°" + minutes.str() + "′";
    const Rational seconds = (minutes_total - Rational(minutes)) * Rational(60);
    if (!seconds.is_zero()) out += to_decimal_string(seconds, 2) + "″";
    return out;
}

// -- epochs -------------------------------------------------------------------

Epoch Epoch::ce(std::int64_t year) {
    if (year < 1) throw OutOfRange("CE years start at 1");
    return Epoch(year);
}

Epoch Epoch::bce(std::int64_t year) {
    if (year < 1) throw OutOfRange("BCE years start at 1");
    return Epoch(1 - year);
}

Epoch Epoch::parse(std::string_view text) {
    const std::string raw(text);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    auto fail = [&] { return ParseError("not an epoch: '" + raw + "'"); };
    auto number = [&](std::string_view digits, bool allow_sign) {
        if (digits.empty()) throw fail();
        std::size_t start = allow_sign && (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
        if (start == digits.size()) throw fail();
        for (std::size_t i = start; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw fail();
        BigInt v{std::string(digits.substr(digits[0] == '+' ? 1 : 0))};
        if (v > std::numeric_limits<std::int64_t>::max() - 1 ||
            v < std::numeric_limits<std::int64_t>::min() + 1)
            throw fail();
        return static_cast<std::int64_t>(v);
    };

    std::string_view body = s;
    if (body.ends_with("BCE")) return bce(number(body.substr(0, body.size() - 3), false));
    if (body.ends_with("BC")) return bce(number(body.substr(0, body.size() - 2), false));
    if (body.ends_with("CE")) return ce(number(body.substr(0, body.size() - 2), false));
    if (body.ends_with("AD")) return ce(number(body.substr(0, body.size() - 2), false));
    return Epoch(number(body, true));
}

std::string Epoch::label() const {
    if (year_ <= 0) return (BigInt(1) - year_).str() + " BCE";
    return std::to_string(year_) + " CE";
}

PrecessionRate::PrecessionRate(Rational years_per_degree)
    : years_per_degree_(std::move(years_per_degree)) {
    if (years_per_degree_ <= Rational(0))
        throw OutOfRange("precession rate must be positive, got " + years_per_degree_.str());
}

OriginConvention OriginConvention::dhanistha_first() {
    return {Rational(22) * naksatra_span_degrees()};
}

// -- dating -------------------------------------------------------------------

EclipticLongitude naksatra_longitude(std::int64_t segment, const Rational& progress,
                                     const OriginConvention& origin) {
    if (segment < 0 || segment >= kZodiacNaksatras)
        throw OutOfRange("segment " + std::to_string(segment) + " outside [0, 27)");
    if (progress.is_negative() || progress >= Rational(1))
        throw OutOfRange("progress " + progress.str() + " outside [0, 1)");
    return EclipticLongitude(origin.segment_zero_degrees +
                             (Rational(segment) + progress) * naksatra_span_degrees());
}

EclipticLongitude naksatra_longitude(const NaksatraPoint& point, const OriginConvention& origin) {
    return naksatra_longitude(point.segment, point.progress, origin);
}

Rational minimal_arc_separation(const EclipticLongitude& a, const EclipticLongitude& b) {
    const Rational forward = mod_circle(a.degrees() - b.degrees(), kFullCircle);
    const Rational backward = Rational(kFullCircle) - forward;
    return forward.is_zero() ? forward : std::min(forward, backward);
}

Rational elapsed_years(const EclipticLongitude& a, const EclipticLongitude& b,
                       const PrecessionRate& rate) {
    return minimal_arc_separation(a, b) * rate.years_per_degree();
}

Epoch conjunction_date(Epoch known, const Rational& elapsed) {
    if (elapsed.is_negative()) throw OutOfRange("elapsed years must be nonnegative");
    const BigInt year = BigInt(known.astronomical_year()) - round_half_away(elapsed);
    if (year < std::numeric_limits<std::int64_t>::min() + 1)
        throw OutOfRange("conjunction year out of range");
    return Epoch(static_cast<std::int64_t>(year));
}

Rational sensitivity(const Rational& observation_error_degrees, const PrecessionRate& rate) {
    if (observation_error_degrees.is_negative())
        throw OutOfRange("observation error must be nonnegative");
    return observation_error_degrees * rate.years_per_degree();
}

DatingReport date_from_naksatra_points(const NaksatraPoint& a, const NaksatraPoint& b, Epoch known,
                                       const PrecessionRate& rate, const OriginConvention& origin,
                                       const Rational& error_degrees) {
    DatingReport r;
    r.point_a = a;
    r.point_b = b;
    r.longitude_a = naksatra_longitude(a, origin);
    r.longitude_b = naksatra_longitude(b, origin);
    r.separation_degrees = minimal_arc_separation(r.longitude_a, r.longitude_b);
    r.elapsed_years_exact = elapsed_years(r.longitude_a, r.longitude_b, rate);
    r.elapsed_years_rounded = round_half_away(r.elapsed_years_exact);
    r.date = conjunction_date(known, r.elapsed_years_exact);
    r.error_degrees = error_degrees;
    r.error_years = sensitivity(error_degrees, rate);
    r.earliest = conjunction_date(known, r.elapsed_years_exact + r.error_years);
    r.latest = conjunction_date(known, std::max(Rational(0), r.elapsed_years_exact - r.error_years));
    return r;
}

} // namespace yuga
