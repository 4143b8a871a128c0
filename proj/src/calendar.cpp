#include "yuga/calendar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace yuga {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameters(what);
}

} // namespace

YugaParameters::YugaParameters(std::int64_t years, std::int64_t solar_months,
                               std::int64_t synodic_months, std::int64_t sidereal_months,
                               std::int64_t naksatra_count, std::int64_t fortnights,
                               std::int64_t moon_traversals)
    : years_(years), solar_months_(solar_months), synodic_months_(synodic_months),
      sidereal_months_(sidereal_months), naksatra_count_(naksatra_count),
      fortnights_(fortnights), moon_traversals_(moon_traversals) {
    require(years > 0, "years must be positive");
    require(solar_months > 0, "solar months must be positive");
    require(synodic_months > 0, "synodic months must be positive");
    require(sidereal_months > 0, "sidereal months must be positive");
    require(naksatra_count > 0, "nakshatra count must be positive");
    require(fortnights > 0, "fortnights must be positive");
    require(moon_traversals > 0, "moon traversals must be positive");

    // Compare in BigInt so absurd inputs fail the check instead of overflowing.
    require(BigInt(fortnights) == 2 * BigInt(synodic_months),
            "fortnights must be twice the synodic months");
    require(BigInt(moon_traversals) == BigInt(sidereal_months) * BigInt(naksatra_count),
            "moon traversals must equal sidereal months times nakshatra count");
    require(BigInt(solar_months) == 12 * BigInt(years), "solar months must be 12 per year");
    require(synodic_months >= solar_months, "synodic months cannot be fewer than solar months");
}

YugaParameters YugaParameters::from_cycle(std::int64_t years, std::int64_t synodic_months,
                                          std::int64_t sidereal_months,
                                          std::int64_t naksatra_count) {
    const BigInt max = std::numeric_limits<std::int64_t>::max();
    require(BigInt(years) * 12 <= max && BigInt(synodic_months) * 2 <= max &&
                BigInt(sidereal_months) * BigInt(naksatra_count) <= max,
            "cycle constants overflow");
    return YugaParameters(years, years * 12, synodic_months, sidereal_months, naksatra_count,
                          synodic_months * 2, sidereal_months * naksatra_count);
}

YugaParameters default_parameters() {
    return YugaParameters(5, 60, 62, 67, 27, 124, 1809);
}

NaksatraPosition::NaksatraPosition(const Rational& total, std::int64_t naksatra_count) {
    if (total < Rational(0) || total >= Rational(naksatra_count))
        throw OutOfRange("position " + total.str() + " outside [0, " +
                         std::to_string(naksatra_count) + ")");
    BigInt whole = total.floor();
    segment_ = static_cast<std::int64_t>(whole);
    progress_ = total - Rational(whole);
}

// -- names ------------------------------------------------------------------

namespace {

char32_t next_codepoint(std::string_view s, std::size_t& i) {
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char c = byte(i);
    int extra = c < 0x80 ? 0 : (c >> 5) == 0x6 ? 1 : (c >> 4) == 0xE ? 2 : (c >> 3) == 0x1E ? 3 : -1;
    if (extra < 0 || i + extra >= s.size()) {
        ++i;
        return 0xFFFD;
    }
    char32_t cp = extra == 0 ? c : c & (0x3F >> extra);
    for (int k = 1; k <= extra; ++k) cp = (cp << 6) | (byte(i + k) & 0x3F);
    i += extra + 1;
    return cp;
}

char fold_codepoint(char32_t cp) {
    switch (cp) {
    case 0x0100: case 0x0101: return 'a';
    case 0x012A: case 0x012B: return 'i';
    case 0x016A: case 0x016B: return 'u';
    case 0x1E5A: case 0x1E5B: case 0x1E5C: case 0x1E5D: return 'r';
    case 0x1E36: case 0x1E37: return 'l';
    case 0x1E44: case 0x1E45: case 0x1E46: case 0x1E47: case 0x00D1: case 0x00F1: return 'n';
    case 0x1E6C: case 0x1E6D: return 't';
    case 0x1E0C: case 0x1E0D: return 'd';
    case 0x015A: case 0x015B: case 0x1E62: case 0x1E63: return 's';
    case 0x1E40: case 0x1E41: case 0x1E42: case 0x1E43: return 'm';
    case 0x1E24: case 0x1E25: return 'h';
    default: return 0;
    }
}

bool is_combining(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

} // namespace

std::string fold_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (std::size_t i = 0; i < name.size();) {
        std::size_t start = i;
        char32_t cp = next_codepoint(name, i);
        if (cp < 0x80) {
            out += static_cast<char>(std::tolower(static_cast<int>(cp)));
        } else if (char f = fold_codepoint(cp)) {
            out += f;
        } else if (!is_combining(cp)) {
            out.append(name.substr(start, i - start));
        }
    }
    return out;
}

const std::vector<std::string>& asvini_order_names() {
    static const std::vector<std::string> names = {
        "Aśvinī",      "Bharaṇī",      "Kṛttikā",         "Rohiṇī",
        "Mṛgaśirā",    "Ārdrā",        "Punarvasu",       "Puṣya",
        "Āśleṣā",      "Maghā",        "Pūrvaphalgunī",   "Uttaraphalgunī",
        "Hasta",       "Citrā",        "Svātī",           "Viśākhā",
        "Anurādhā",    "Jyeṣṭhā",      "Mūla",            "Pūrvāṣādhā",
        "Uttarāṣādhā", "Śravaṇa",      "Dhaniṣṭhā",       "Śatabhiṣaj",
        "Pūrvabhādrapadā", "Uttarabhādrapadā", "Revatī",
    };
    return names;
}

NaksatraNameTable::NaksatraNameTable(std::vector<std::string> names, std::int64_t naksatra_count)
    : names_(std::move(names)) {
    if (naksatra_count <= 0 || names_.size() != static_cast<std::size_t>(naksatra_count))
        throw InvalidNameTable("expected " + std::to_string(naksatra_count) + " names, got " +
                               std::to_string(names_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw InvalidNameTable("empty nakshatra name");
        if (!seen.insert(fold_name(n)).second)
            throw InvalidNameTable("duplicate nakshatra name '" + n + "'");
    }
}

NaksatraNameTable NaksatraNameTable::parse(std::string_view text, std::int64_t naksatra_count) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        names.push_back(std::move(line));
        pos = eol + 1;
    }
    return NaksatraNameTable(std::move(names), naksatra_count);
}

NaksatraNameTable NaksatraNameTable::load(const std::filesystem::path& path,
                                          std::int64_t naksatra_count) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidNameTable("cannot read names file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), naksatra_count);
}

NaksatraNameTable NaksatraNameTable::standard() {
    const auto& asvini = asvini_order_names();
    constexpr std::size_t dhanistha = 22;
    std::vector<std::string> rotated;
    rotated.reserve(asvini.size());
    for (std::size_t k = 0; k < asvini.size(); ++k)
        rotated.push_back(asvini[(dhanistha + k) % asvini.size()]);
    return NaksatraNameTable(std::move(rotated), 27);
}

const std::string& NaksatraNameTable::at(std::int64_t segment) const {
    if (segment < 0 || static_cast<std::size_t>(segment) >= names_.size())
        throw OutOfRange("segment " + std::to_string(segment) + " not in name table");
    return names_[static_cast<std::size_t>(segment)];
}

std::int64_t NaksatraNameTable::find(std::string_view name) const {
    const std::string key = fold_name(name);
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (fold_name(names_[i]) == key) return static_cast<std::int64_t>(i);
    return -1;
}

// -- positions ----------------------------------------------------------------

Rational moon_rate(const YugaParameters& p) {
    return Rational(p.moon_traversals(), p.fortnights());
}

Rational sun_rate(const YugaParameters& p) {
    return Rational(BigInt(p.naksatra_count()) * p.years(), p.fortnights());
}

namespace {

NaksatraPosition closed_form(const YugaParameters& p, std::uint64_t fortnight,
                             const Rational& rate) {
    Rational travelled = Rational(BigInt(fortnight)) * rate;
    return NaksatraPosition(mod_circle(travelled, p.naksatra_count()), p.naksatra_count());
}

} // namespace

NaksatraPosition moon_position(const YugaParameters& p, std::uint64_t fortnight) {
    return closed_form(p, fortnight, moon_rate(p));
}

NaksatraPosition sun_position(const YugaParameters& p, std::uint64_t fortnight) {
    return closed_form(p, fortnight, sun_rate(p));
}

NaksatraPosition sun_position(const YugaParameters& p, std::uint64_t fortnight,
                              const Rational& rate) {
    if (rate.is_negative()) throw OutOfRange("sun rate must be nonnegative");
    return closed_form(p, fortnight, rate);
}

NaksatraPosition accumulate_moon_position(const YugaParameters& p, std::uint64_t fortnight) {
    const Rational step = moon_rate(p);
    const BigInt circle = p.naksatra_count();
    Rational at;
    for (std::uint64_t n = 0; n < fortnight; ++n) at = mod_circle(at + step, circle);
    return NaksatraPosition(at, p.naksatra_count());
}

const std::string& naksatra_name(const NaksatraPosition& pos, const NaksatraNameTable& table) {
    return table.at(pos.segment());
}

std::vector<FortnightRecord> yuga_table(const YugaParameters& p, const NaksatraNameTable& table) {
    if (table.size() != static_cast<std::size_t>(p.naksatra_count()))
        throw InvalidNameTable("name table has " + std::to_string(table.size()) +
                               " entries for a " + std::to_string(p.naksatra_count()) +
                               "-nakshatra yuga");
    std::vector<FortnightRecord> rows;
    rows.reserve(static_cast<std::size_t>(p.fortnights()));
    for (std::int64_t n = 1; n <= p.fortnights(); ++n) {
        auto k = static_cast<std::uint64_t>(n);
        FortnightRecord r{n, moon_position(p, k), sun_position(p, k), {}, {}};
        r.moon_name = naksatra_name(r.moon, table);
        r.sun_name = naksatra_name(r.sun, table);
        rows.push_back(std::move(r));
    }
    return rows;
}

// -- intercalation --------------------------------------------------------------

namespace {

struct ScheduleBuilder {
    const YugaParameters& p;

    std::vector<std::int64_t> operator()(const EndOfHalfYuga&) const {
        const std::int64_t k = p.intercalary_count();
        std::vector<std::int64_t> out;
        for (std::int64_t i = 1; i <= k; ++i)
            out.push_back(static_cast<std::int64_t>(BigInt(i) * p.synodic_months() / k));
        return out;
    }

    std::vector<std::int64_t> operator()(const EndOfYugaOnly&) const {
        const std::int64_t k = p.intercalary_count();
        std::vector<std::int64_t> out;
        for (std::int64_t i = p.synodic_months() - k + 1; i <= p.synodic_months(); ++i)
            out.push_back(i);
        return out;
    }

    std::vector<std::int64_t> operator()(const ExplicitPlacement& e) const {
        const auto want = static_cast<std::size_t>(p.intercalary_count());
        if (e.ordinals.size() != want)
            throw InvalidSchedule("expected " + std::to_string(want) +
                                  " intercalary months, got " + std::to_string(e.ordinals.size()));
        for (std::size_t i = 0; i < e.ordinals.size(); ++i) {
            const auto m = e.ordinals[i];
            if (m < 1 || m > p.synodic_months())
                throw InvalidSchedule("month ordinal " + std::to_string(m) + " outside [1, " +
                                      std::to_string(p.synodic_months()) + "]");
            if (i > 0 && m <= e.ordinals[i - 1])
                throw InvalidSchedule("month ordinals must be strictly increasing");
        }
        return e.ordinals;
    }
};

} // namespace

std::vector<std::int64_t> intercalary_schedule(const YugaParameters& p,
                                               const IntercalaryPolicy& policy) {
    return std::visit(ScheduleBuilder{p}, policy);
}

} // namespace yuga
