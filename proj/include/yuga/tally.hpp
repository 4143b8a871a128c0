#pragma once

/**
 * @file tally.hpp
 * @brief Whole-number ("concrete") arithmetic for the yuga computation.
 *
 * The tally model works only with natural-number counts, addition and
 * separating off complete groups. Measuring the moon's path in units of
 * 1/fortnights of a nakshatra makes every fortnight's motion a whole count
 * (1809 units for the default yuga) on a circle of naksatra_count *
 * fortnights units (3348). models_agree() checks the tally count against the
 * exact rational position for any fortnight.
 *
 * Writing that count back out as "14 73/124" is a division, which the tally
 * model never performs; the bridge to Rational lives in models_agree only.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "yuga/calendar.hpp"
#include "yuga/rational.hpp"

namespace yuga {

struct TallyQuantity {
    BigInt count;
    std::string unit_label;

    friend bool operator==(const TallyQuantity&, const TallyQuantity&) = default;
};

/// Units in one full circle: naksatra_count * fortnights.
BigInt tally_circle(const YugaParameters& p);

/// Unit label, e.g. "amsa-1/124-naksatra".
std::string tally_unit_label(const YugaParameters& p);

/// (fortnight * moon_traversals) mod circle.
TallyQuantity scaled_moon_position(const YugaParameters& p, std::uint64_t fortnight);

/// The same count reached by laying down moon_traversals units per fortnight
/// and taking away a full circle whenever one is complete. Only addition,
/// comparison and subtraction of whole counts.
TallyQuantity accumulate_tally(const YugaParameters& p, std::uint64_t fortnight);

struct SixthShare {
    BigInt tax;        ///< one measure per complete group of six
    BigInt producer;   ///< the five kept from each complete group
    BigInt remainder;  ///< final incomplete group, in [0, 6)

    friend bool operator==(const SixthShare&, const SixthShare&) = default;
};

/// Groups the measures in sixes and sets the sixth of each group aside.
/// Throws OutOfRange for a negative quantity.
SixthShare sixth_share(const BigInt& measures);

/// Strictly increasing denominators whose unit fractions sum to the input.
struct UnitFractionDecomposition {
    std::vector<BigInt> denominators;

    Rational sum() const;
    /// "1/2 + 1/12 + 1/186".
    std::string str() const;
};

/// Greedy (Fibonacci-Sylvester) decomposition. Throws OutOfRange unless 0 < r < 1.
UnitFractionDecomposition greedy_unit_fractions(const Rational& r);

struct ModelComparison {
    std::uint64_t fortnight;
    TallyQuantity tally;
    BigInt circle;
    Rational tally_position;     ///< tally count / fortnights
    Rational rational_position;  ///< moon_position(p, fortnight).total()
    bool agree;
};

ModelComparison models_agree(const YugaParameters& p, std::uint64_t fortnight);

} // namespace yuga
