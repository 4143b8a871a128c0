#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "yuga/calendar.hpp"

using namespace yuga;

namespace {

NaksatraPosition at(std::int64_t segment, Rational progress) {
    return NaksatraPosition(Rational(segment) + progress, 27);
}

/// Random parameters that satisfy every cycle invariant.
YugaParameters random_parameters() {
    const auto years = oracle::uniform(1, 8);
    const auto synodic = 12 * years + oracle::uniform(0, 5);
    return YugaParameters::from_cycle(years, synodic, oracle::uniform(1, 120),
                                      oracle::uniform(1, 40));
}

} // namespace

TEST_SUITE("calendar") {

TEST_CASE("default parameters") {
    const auto p = default_parameters();
    CHECK(p.years() == 5);
    CHECK(p.solar_months() == 60);
    CHECK(p.synodic_months() == 62);
    CHECK(p.sidereal_months() == 67);
    CHECK(p.naksatra_count() == 27);
    CHECK(p.fortnights() == 124);
    CHECK(p.moon_traversals() == 1809);
    CHECK(p.intercalary_count() == 2);
    CHECK(p == YugaParameters::from_cycle(5, 62, 67, 27));
}

TEST_CASE("parameter invariants are enforced") {
    CHECK_THROWS_AS(YugaParameters(5, 60, 62, 67, 27, 0, 1809), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters(5, 60, 62, 67, 27, 125, 1809), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters(5, 60, 62, 67, 27, 124, 1808), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters(5, 61, 62, 67, 27, 124, 1809), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters::from_cycle(5, 59, 67, 27), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters::from_cycle(0, 62, 67, 27), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters::from_cycle(5, 62, 67, -1), InvalidParameters);
    CHECK_THROWS_AS(YugaParameters::from_cycle(5, 62, INT64_MAX, 27), InvalidParameters);
    CHECK_NOTHROW(YugaParameters::from_cycle(1, 12, 1, 1));
}

TEST_CASE("moon rate") {
    const auto p = default_parameters();
    CHECK(moon_rate(p) == Rational(1809, 124));
    CHECK(to_mixed(moon_rate(p)).str() == "14 73/124");
    // One nakshatra per fortnight: 2 x 27 traversals over 54 fortnights.
    CHECK(moon_rate(YugaParameters::from_cycle(2, 27, 2, 27)) == Rational(1));
}

TEST_CASE("moon position examples") {
    const auto p = default_parameters();
    CHECK(moon_position(p, 0) == at(0, 0));
    CHECK(moon_position(p, 1) == at(14, Rational(73, 124)));
    CHECK(moon_position(p, 2) == at(2, Rational(11, 62)));
    CHECK(moon_position(p, 124) == at(0, 0));
    CHECK(moon_position(p, 125) == moon_position(p, 1));
    CHECK(moon_position(p, 1).segment() == 14);
    CHECK(moon_position(p, 1).progress() == Rational(73, 124));
}

TEST_CASE("sun position examples") {
    const auto p = default_parameters();
    CHECK(sun_rate(p) == Rational(135, 124));
    CHECK(sun_position(p, 0) == at(0, 0));
    CHECK(sun_position(p, 1) == at(1, Rational(11, 124)));
    CHECK(sun_position(p, 124) == at(0, 0));
    CHECK(sun_position(p, 1, Rational(1)) == at(1, 0));
    CHECK_THROWS_AS(sun_position(p, 1, Rational(-1)), OutOfRange);
}

TEST_CASE("conjunction at the yuga start") {
    const auto p = default_parameters();
    CHECK(moon_position(p, 0) == sun_position(p, 0));
    CHECK(moon_position(p, 0).total() == Rational(0));
}

TEST_CASE("accumulation equals closed form") {
    const auto p = default_parameters();
    Rational stepwise;
    for (std::uint64_t n = 0; n <= 2 * 124; ++n) {
        CHECK(NaksatraPosition(stepwise, 27) == moon_position(p, n));
        stepwise = mod_circle(stepwise + moon_rate(p), 27);
    }
    CHECK(accumulate_moon_position(p, 200) == moon_position(p, 200));
}

TEST_CASE("periodicity and closure for random parameters") {
    for (int i = 0; i < 300; ++i) {
        const auto p = random_parameters();
        const auto n = static_cast<std::uint64_t>(oracle::uniform(0, 100000));
        const auto f = static_cast<std::uint64_t>(p.fortnights());
        CHECK(moon_position(p, n + f) == moon_position(p, n));
        CHECK(sun_position(p, n + f) == sun_position(p, n));
        // moon_traversals is a multiple of naksatra_count by construction.
        CHECK(moon_position(p, f) == moon_position(p, 0));
        CHECK(sun_position(p, f) == sun_position(p, 0));
        const auto pos = moon_position(p, n);
        CHECK(pos.progress() >= Rational(0));
        CHECK(pos.progress() < Rational(1));
        CHECK(pos.segment() < p.naksatra_count());
    }
}

TEST_CASE("position bounds") {
    CHECK_THROWS_AS(NaksatraPosition(Rational(27), 27), OutOfRange);
    CHECK_THROWS_AS(NaksatraPosition(Rational(-1, 2), 27), OutOfRange);
    CHECK(NaksatraPosition(Rational(53, 2), 27).segment() == 26);
}

TEST_CASE("standard name table") {
    const auto t = NaksatraNameTable::standard();
    CHECK(t.size() == 27);
    CHECK(t.origin_name() == "Dhaniṣṭhā");
    CHECK(naksatra_name(at(0, 0), t) == "Dhaniṣṭhā");
    CHECK(naksatra_name(at(26, 0), t) == t.names().back());
    CHECK(naksatra_name(at(26, 0), t) == "Śravaṇa");
    // 15th name counted from Dhanishtha: Ashvini-order index (22 + 14) mod 27 = 9.
    CHECK(naksatra_name(at(14, 0), t) == asvini_order_names()[9]);
    CHECK(naksatra_name(at(14, 0), t) == "Maghā");
    CHECK(t.find("Dhanistha") == 0);
    CHECK(t.find("UTTARASADHA") == 25);
    CHECK(t.find("Uttarāṣāḍhā") == 25);
    CHECK(t.find("Mula") == 23);
    CHECK(t.find("Pluto") == -1);
}

TEST_CASE("shipped names file matches the built-in table") {
    const auto path = std::filesystem::path(YUGA_DATA_DIR) / "naksatras.txt";
    CHECK(NaksatraNameTable::load(path, 27) == NaksatraNameTable::standard());
}

TEST_CASE("name table validation") {
    CHECK_THROWS_AS(NaksatraNameTable::parse("a\nb\n", 3), InvalidNameTable);
    CHECK_THROWS_AS(NaksatraNameTable::parse("a\nb\na\n", 3), InvalidNameTable);
    CHECK_THROWS_AS(NaksatraNameTable::parse("Mūla\nb\nMula\n", 3), InvalidNameTable);
    CHECK_THROWS_AS(NaksatraNameTable::parse("a\n\nc\n", 3), InvalidNameTable);
    CHECK_THROWS_AS(NaksatraNameTable::load("/nonexistent/names.txt", 27), InvalidNameTable);
    const auto t = NaksatraNameTable::parse("a\r\nb\r\nc", 3);
    CHECK(t.at(2) == "c");
    CHECK_THROWS_AS(t.at(3), OutOfRange);
}

TEST_CASE("fold names") {
    CHECK(fold_name("Dhaniṣṭhā") == "dhanistha");
    CHECK(fold_name("Śatabhiṣaj") == "satabhisaj");
    CHECK(fold_name("Kṛttikā") == "krttika");
    // a + combining macron
    CHECK(fold_name("Ma\xCC\x84gha") == "magha");
}

TEST_CASE("yuga table") {
    const auto p = default_parameters();
    const auto rows = yuga_table(p, NaksatraNameTable::standard());
    REQUIRE(rows.size() == 124);
    CHECK(rows.front().fortnight == 1);
    CHECK(to_mixed(rows.front().moon.total()).str() == "14 73/124");
    CHECK(rows.front().moon_name == "Maghā");
    CHECK(rows.back().fortnight == 124);
    CHECK(rows.back().moon == at(0, 0));
    CHECK(rows.back().sun == at(0, 0));
    CHECK(rows.back().moon_name == "Dhaniṣṭhā");
    for (const auto& r : rows) {
        CHECK(r.moon == moon_position(p, static_cast<std::uint64_t>(r.fortnight)));
        CHECK(r.sun == sun_position(p, static_cast<std::uint64_t>(r.fortnight)));
    }
    const auto small = YugaParameters::from_cycle(1, 12, 1, 3);
    CHECK_THROWS_AS(yuga_table(small, NaksatraNameTable::standard()), InvalidNameTable);
    CHECK(yuga_table(small, NaksatraNameTable::parse("a\nb\nc\n", 3)).size() == 24);
}

TEST_CASE("intercalary schedule") {
    const auto p = default_parameters();
    CHECK(intercalary_schedule(p) == std::vector<std::int64_t>{31, 62});
    CHECK(intercalary_schedule(p, EndOfHalfYuga{}) == std::vector<std::int64_t>{31, 62});
    CHECK(intercalary_schedule(p, EndOfYugaOnly{}) == std::vector<std::int64_t>{61, 62});
    CHECK(intercalary_schedule(p, ExplicitPlacement{{30, 60}}) ==
          std::vector<std::int64_t>{30, 60});
    CHECK_THROWS_AS(intercalary_schedule(p, ExplicitPlacement{{30}}), InvalidSchedule);
    CHECK_THROWS_AS(intercalary_schedule(p, ExplicitPlacement{{0, 30}}), InvalidSchedule);
    CHECK_THROWS_AS(intercalary_schedule(p, ExplicitPlacement{{30, 63}}), InvalidSchedule);
    CHECK_THROWS_AS(intercalary_schedule(p, ExplicitPlacement{{40, 30}}), InvalidSchedule);
    CHECK_THROWS_AS(intercalary_schedule(p, ExplicitPlacement{{30, 30}}), InvalidSchedule);

    const auto flat = YugaParameters::from_cycle(5, 60, 67, 27);
    CHECK(intercalary_schedule(flat).empty());
    CHECK(intercalary_schedule(flat, EndOfYugaOnly{}).empty());
    CHECK(intercalary_schedule(flat, ExplicitPlacement{}).empty());
}

TEST_CASE("intercalary schedule properties") {
    for (int i = 0; i < 300; ++i) {
        const auto p = random_parameters();
        for (IntercalaryPolicy policy : {IntercalaryPolicy{EndOfHalfYuga{}},
                                         IntercalaryPolicy{EndOfYugaOnly{}}}) {
            const auto s = intercalary_schedule(p, policy);
            CHECK(static_cast<std::int64_t>(s.size()) == p.intercalary_count());
            for (std::size_t k = 0; k < s.size(); ++k) {
                CHECK(s[k] >= 1);
                CHECK(s[k] <= p.synodic_months());
                if (k) CHECK(s[k] > s[k - 1]);
            }
        }
    }
}

} // TEST_SUITE
