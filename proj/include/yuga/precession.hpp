#pragma once

/**
 * @file precession.hpp
 * @brief Dating a recorded solstice position by precession.
 *
 * Two nakshatra reference points are turned into ecliptic longitudes, their
 * separation is multiplied by a precession rate (years per degree, 72 by
 * default) and the elapsed time is subtracted from a known epoch. All
 * intermediate values stay exact; only the final calendar year is rounded.
 */

#include <cstdint>
#include <string>
#include <string_view>

#include "yuga/rational.hpp"

namespace yuga {

/// 27 equal segments of 13 deg 20 min.
inline constexpr std::int64_t kZodiacNaksatras = 27;
Rational naksatra_span_degrees();

/// Degrees on [0, 360), exact.
class EclipticLongitude {
public:
    EclipticLongitude() = default;

    /// Wraps any rational degree value onto [0, 360).
    explicit EclipticLongitude(const Rational& degrees);

    static EclipticLongitude from_dms(std::int64_t degrees, std::int64_t minutes,
                                      const Rational& seconds = Rational(0));

    const Rational& degrees() const noexcept { return degrees_; }

    /// "880/3 deg".
    std::string exact_str() const;
    /// "293°20′"; seconds are appended only when the minutes are not whole.
    std::string dms_str() const;

    friend bool operator==(const EclipticLongitude&, const EclipticLongitude&) = default;

private:
    Rational degrees_;
};

/// Sexagesimal rendering of a nonnegative angle, see EclipticLongitude::dms_str.
std::string format_dms(const Rational& degrees);

/// Astronomical year numbering: 0 is 1 BCE, -1 is 2 BCE.
class Epoch {
public:
    constexpr Epoch() = default;
    constexpr explicit Epoch(std::int64_t astronomical_year) : year_(astronomical_year) {}

    static Epoch ce(std::int64_t year);
    static Epoch bce(std::int64_t year);

    /// "530CE", "530 CE", "1151BCE", "1151 bce" or a bare astronomical year "-1150".
    static Epoch parse(std::string_view text);

    constexpr std::int64_t astronomical_year() const noexcept { return year_; }

    /// "530 CE" or "1151 BCE"; never year zero.
    std::string label() const;

    friend constexpr bool operator==(Epoch, Epoch) = default;
    friend constexpr auto operator<=>(Epoch, Epoch) = default;

private:
    std::int64_t year_ = 0;
};

class PrecessionRate {
public:
    /// Throws OutOfRange unless positive.
    explicit PrecessionRate(Rational years_per_degree = Rational(72));

    const Rational& years_per_degree() const noexcept { return years_per_degree_; }

private:
    Rational years_per_degree_;
};

/// Longitude of segment 0 of the naming scheme in use.
struct OriginConvention {
    Rational segment_zero_degrees;

    /// Ashvini begins at 0 deg; Uttarashadha is segment 20, Dhanishtha 22.
    static OriginConvention asvini_zero() { return {Rational(0)}; }
    /// Segments counted from Dhanishtha, placed where the Ashvini scheme puts it.
    static OriginConvention dhanistha_first();
};

/// A point given as segment plus fraction of the way through it.
struct NaksatraPoint {
    std::int64_t segment = 0;
    Rational progress;
};

/// origin + (segment + progress) * 40/3, wrapped to [0, 360). Throws
/// OutOfRange when segment is not in [0, 27) or progress not in [0, 1).
EclipticLongitude naksatra_longitude(std::int64_t segment, const Rational& progress,
                                     const OriginConvention& origin = OriginConvention::asvini_zero());
EclipticLongitude naksatra_longitude(const NaksatraPoint& point, const OriginConvention& origin);

/// Shorter of the two arcs between a and b, in [0, 180].
Rational minimal_arc_separation(const EclipticLongitude& a, const EclipticLongitude& b);

Rational elapsed_years(const EclipticLongitude& a, const EclipticLongitude& b,
                       const PrecessionRate& rate = PrecessionRate());

/// known minus elapsed rounded half away from zero. Throws OutOfRange for a
/// negative elapsed time or a result beyond the 64-bit year range.
Epoch conjunction_date(Epoch known, const Rational& elapsed);

/// Years of error produced by an observational error in degrees. Throws
/// OutOfRange for a negative error.
Rational sensitivity(const Rational& observation_error_degrees,
                     const PrecessionRate& rate = PrecessionRate());

struct DatingReport {
    NaksatraPoint point_a;
    NaksatraPoint point_b;
    EclipticLongitude longitude_a;
    EclipticLongitude longitude_b;
    Rational separation_degrees;
    Rational elapsed_years_exact;
    BigInt elapsed_years_rounded;
    Epoch date;
    Rational error_degrees;
    Rational error_years;
    Epoch earliest;  ///< separation widened by the error
    Epoch latest;    ///< separation narrowed by the error, never below zero
};

DatingReport date_from_naksatra_points(const NaksatraPoint& a, const NaksatraPoint& b, Epoch known,
                                       const PrecessionRate& rate = PrecessionRate(),
                                       const OriginConvention& origin = OriginConvention::asvini_zero(),
                                       const Rational& error_degrees = Rational(2));

} // namespace yuga
