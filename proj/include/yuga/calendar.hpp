#pragma once

/**
 * @file calendar.hpp
 * @brief The five-year yuga: cycle constants, per-fortnight nakshatra
 *        positions of moon and sun, the fortnight table and intercalation.
 *
 * Positions are measured in nakshatras from the origin of the cycle (the
 * first point of Dhanishtha, where sun and moon are in conjunction at the
 * winter solstice that opens the yuga). Fortnight n is the position after n
 * fortnights of motion; 0 is the opening conjunction.
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yuga/rational.hpp"

namespace yuga {

class YugaParameters {
public:
    /// Validates every field and every cycle invariant; throws InvalidParameters.
    YugaParameters(std::int64_t years, std::int64_t solar_months, std::int64_t synodic_months,
                   std::int64_t sidereal_months, std::int64_t naksatra_count,
                   std::int64_t fortnights, std::int64_t moon_traversals);

    /// Derives solar months, fortnights and moon traversals from the rest.
    static YugaParameters from_cycle(std::int64_t years, std::int64_t synodic_months,
                                     std::int64_t sidereal_months, std::int64_t naksatra_count);

    std::int64_t years() const noexcept { return years_; }
    std::int64_t solar_months() const noexcept { return solar_months_; }
    std::int64_t synodic_months() const noexcept { return synodic_months_; }
    std::int64_t sidereal_months() const noexcept { return sidereal_months_; }
    std::int64_t naksatra_count() const noexcept { return naksatra_count_; }
    std::int64_t fortnights() const noexcept { return fortnights_; }
    std::int64_t moon_traversals() const noexcept { return moon_traversals_; }

    std::int64_t intercalary_count() const noexcept { return synodic_months_ - solar_months_; }

    friend bool operator==(const YugaParameters&, const YugaParameters&) = default;

private:
    std::int64_t years_;
    std::int64_t solar_months_;
    std::int64_t synodic_months_;
    std::int64_t sidereal_months_;
    std::int64_t naksatra_count_;
    std::int64_t fortnights_;
    std::int64_t moon_traversals_;
};

/// (5, 60, 62, 67, 27, 124, 1809).
YugaParameters default_parameters();

/// Whole segment plus exact progress in [0, 1) through it.
class NaksatraPosition {
public:
    NaksatraPosition() = default;

    /// Splits a total position on [0, naksatra_count). Throws OutOfRange otherwise.
    NaksatraPosition(const Rational& total, std::int64_t naksatra_count);

    std::int64_t segment() const noexcept { return segment_; }
    const Rational& progress() const noexcept { return progress_; }
    Rational total() const { return Rational(segment_) + progress_; }

    friend bool operator==(const NaksatraPosition&, const NaksatraPosition&) = default;

private:
    std::int64_t segment_ = 0;
    Rational progress_;
};

/// Ordered names, segment 0 first.
class NaksatraNameTable {
public:
    /// Throws InvalidNameTable on wrong length, empty names, or duplicates
    /// (including names that only differ in diacritics or case).
    NaksatraNameTable(std::vector<std::string> names, std::int64_t naksatra_count);

    /// UTF-8, one name per line. A trailing newline is allowed; blank lines are not.
    static NaksatraNameTable load(const std::filesystem::path& path, std::int64_t naksatra_count);
    static NaksatraNameTable parse(std::string_view text, std::int64_t naksatra_count);

    /// The 27 standard names starting from Dhanishtha.
    static NaksatraNameTable standard();

    const std::string& origin_name() const { return names_.front(); }
    const std::string& at(std::int64_t segment) const;
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Diacritic- and case-insensitive lookup; -1 when absent.
    std::int64_t find(std::string_view name) const;

    friend bool operator==(const NaksatraNameTable&, const NaksatraNameTable&) = default;

private:
    std::vector<std::string> names_;
};

/// The 27 nakshatras in the conventional order beginning with Ashvini.
const std::vector<std::string>& asvini_order_names();

/// Lowercase ASCII with IAST diacritics folded away ("Dhaniṣṭhā" -> "dhanistha").
std::string fold_name(std::string_view name);

/// Moon traversals per fortnight: 1809/124 for the default yuga.
Rational moon_rate(const YugaParameters& p);

/// Sun traversals per fortnight, naksatra_count * years / fortnights.
/// The cycle constants do not fix this; 135/124 for the default yuga is a
/// model completion (the sun covers the 27 nakshatras once a year).
Rational sun_rate(const YugaParameters& p);

NaksatraPosition moon_position(const YugaParameters& p, std::uint64_t fortnight);
NaksatraPosition sun_position(const YugaParameters& p, std::uint64_t fortnight);
NaksatraPosition sun_position(const YugaParameters& p, std::uint64_t fortnight,
                              const Rational& rate);

/// Moon position reached by adding the rate once per fortnight and wrapping
/// after every step, the way a tabulator would. Equal to moon_position.
NaksatraPosition accumulate_moon_position(const YugaParameters& p, std::uint64_t fortnight);

/// Throws OutOfRange if the position has more segments than the table.
const std::string& naksatra_name(const NaksatraPosition& pos, const NaksatraNameTable& table);

struct FortnightRecord {
    std::int64_t fortnight;  // 1-based
    NaksatraPosition moon;
    NaksatraPosition sun;
    std::string moon_name;
    std::string sun_name;
};

/// One record per fortnight of the cycle, 1..p.fortnights().
std::vector<FortnightRecord> yuga_table(const YugaParameters& p, const NaksatraNameTable& table);

/// Where the extra synodic months go.
struct EndOfHalfYuga {};   ///< spread evenly; one at the end of each half for two
struct EndOfYugaOnly {};   ///< all packed at the end of the cycle
struct ExplicitPlacement {
    std::vector<std::int64_t> ordinals;
};
using IntercalaryPolicy = std::variant<EndOfHalfYuga, EndOfYugaOnly, ExplicitPlacement>;

/// Synodic-month ordinals (1-based) of the intercalary months. Throws
/// InvalidSchedule for an explicit list of the wrong size, out of range, or
/// not strictly increasing.
std::vector<std::int64_t> intercalary_schedule(const YugaParameters& p,
                                               const IntercalaryPolicy& policy = EndOfHalfYuga{});

} // namespace yuga
