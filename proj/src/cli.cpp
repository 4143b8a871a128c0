#include "yuga/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yuga/calendar.hpp"
#include "yuga/precession.hpp"
#include "yuga/serialize.hpp"
#include "yuga/tally.hpp"

namespace yuga::cli {

OutputFormat parse_format(std::string_view text) {
    if (text == "table") return OutputFormat::Table;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw ParseError("unknown format '" + std::string(text) + "' (expected table, json or csv)");
}

namespace {

/// Bad arguments detected after CLI11 accepted the command line.
class UsageError : public Error {
public:
    using Error::Error;
};

struct ParamOverrides {
    std::optional<std::int64_t> years, solar, synodic, sidereal, naksatras, fortnights, traversals;

    void attach(CLI::App* cmd) {
        auto group = cmd->add_option_group("yuga parameters");
        group->add_option("--years", years, "Years per yuga (default 5)");
        group->add_option("--solar-months", solar, "Solar months (default 12 per year)");
        group->add_option("--synodic-months", synodic, "Synodic months (default 62)");
        group->add_option("--sidereal-months", sidereal, "Sidereal months (default 67)");
        group->add_option("--naksatras", naksatras, "Nakshatras on the circle (default 27)");
        group->add_option("--fortnights", fortnights, "Fortnights (default 2 per synodic month)");
        group->add_option("--traversals", traversals,
                          "Moon traversals (default sidereal months x nakshatras)");
    }

    YugaParameters resolve() const {
        const auto d = default_parameters();
        const std::int64_t y = years.value_or(d.years());
        const std::int64_t syn = synodic.value_or(d.synodic_months());
        const std::int64_t sid = sidereal.value_or(d.sidereal_months());
        const std::int64_t k = naksatras.value_or(d.naksatra_count());
        // Derived fields follow the overridden ones unless set explicitly.
        auto derived = [](std::optional<std::int64_t> given, const BigInt& value) {
            if (given) return *given;
            if (value > std::numeric_limits<std::int64_t>::max() ||
                value < std::numeric_limits<std::int64_t>::min())
                throw UsageError("yuga parameter overflows: " + value.str());
            return static_cast<std::int64_t>(value);
        };
        try {
            return YugaParameters(y, derived(solar, BigInt(y) * 12), syn, sid, k,
                                  derived(fortnights, BigInt(syn) * 2),
                                  derived(traversals, BigInt(sid) * k));
        } catch (const InvalidParameters& e) {
            throw UsageError(std::string("invalid yuga parameters: ") + e.what());
        }
    }
};

struct Config {
    std::optional<std::string> names;
    std::optional<std::string> format;
    std::optional<Rational> rate;
    std::optional<Rational> error_deg;
    std::optional<Rational> origin_deg;
};

Rational json_rational(const Json& v, const std::string& key) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw UsageError("config key '" + key + "' must be an integer or a \"p/q\" string");
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file " + path + " must hold a JSON object");
    Config c;
    for (const auto& [key, value] : j.items()) {
        if (key == "names" && value.is_string()) c.names = value.get<std::string>();
        else if (key == "format" && value.is_string()) c.format = value.get<std::string>();
        else if (key == "rate") c.rate = json_rational(value, key);
        else if (key == "error_deg") c.error_deg = json_rational(value, key);
        else if (key == "origin_deg") c.origin_deg = json_rational(value, key);
        else throw UsageError("unknown or mistyped config key '" + key + "'");
    }
    return c;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError(what + ": " + e.what());
    }
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
    BigInt v{text};
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw UsageError(what + " is too large: " + text);
    return static_cast<std::uint64_t>(v);
}

NaksatraNameTable generated_names(std::int64_t count) {
    std::vector<std::string> names;
    for (std::int64_t i = 1; i <= count; ++i) names.push_back("#" + std::to_string(i));
    return NaksatraNameTable(std::move(names), count);
}

// -- shared state of one invocation -------------------------------------------

struct Invocation {
    std::string format_flag;
    std::string config_path;
    std::string names_flag;
    Config config;

    OutputFormat format() const {
        try {
            if (!format_flag.empty()) return parse_format(format_flag);
            if (config.format) return parse_format(*config.format);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        return OutputFormat::Table;
    }

    std::optional<std::string> names_path() const {
        if (!names_flag.empty()) return names_flag;
        return config.names;
    }

    NaksatraNameTable names(std::int64_t count) const {
        if (auto path = names_path()) return NaksatraNameTable::load(*path, count);
        if (count == kZodiacNaksatras) return NaksatraNameTable::standard();
        return generated_names(count);
    }
};

std::string pad(const std::string& s, std::size_t width) {
    // Width in code points so IAST names line up.
    std::size_t cps = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++cps;
    return cps >= width ? s : s + std::string(width - cps, ' ');
}

// -- commands -------------------------------------------------------------------

void emit_json(std::ostream& out, const Json& j) {
    out << j.dump(2, ' ', false) << "\n";
}

void cmd_yuga_table(const Invocation& inv, const ParamOverrides& ov,
                    std::optional<unsigned> decimals, std::ostream& out) {
    const auto p = ov.resolve();
    const auto rows = yuga_table(p, inv.names(p.naksatra_count()));
    switch (inv.format()) {
    case OutputFormat::Json: emit_json(out, yuga_table_json(rows, decimals)); break;
    case OutputFormat::Csv: out << yuga_table_csv(rows, decimals); break;
    case OutputFormat::Table:
        out << pad("fortnight", 11) << pad("moon", 14) << pad("moon nakshatra", 20)
            << pad("sun", 14) << "sun nakshatra\n";
        for (const auto& r : rows)
            out << pad(std::to_string(r.fortnight), 11) << pad(to_mixed(r.moon.total()).str(), 14)
                << pad(r.moon_name, 20) << pad(to_mixed(r.sun.total()).str(), 14) << r.sun_name
                << "\n";
        break;
    }
}

void cmd_position(const Invocation& inv, const std::string& body, const YugaParameters& p,
                  std::uint64_t fortnight, const NaksatraPosition& pos,
                  std::optional<unsigned> decimals, std::ostream& out) {
    const auto table = inv.names(p.naksatra_count());
    const auto& name = naksatra_name(pos, table);
    switch (inv.format()) {
    case OutputFormat::Json: emit_json(out, position_json(fortnight, pos, name, decimals)); break;
    case OutputFormat::Csv: out << position_csv(fortnight, pos, name, decimals); break;
    case OutputFormat::Table:
        out << body << " after fortnight " << fortnight << ": " << to_mixed(pos.total()).str()
            << " nakshatras from " << table.origin_name() << "\n"
            << "  segment  " << pos.segment() << " (" << name << ")\n"
            << "  progress " << pos.progress().str() << "\n";
        if (decimals) out << "  decimal  " << to_decimal_string(pos.total(), *decimals) << "\n";
        break;
    }
}

NaksatraPoint parse_point(const std::string& text, const NaksatraNameTable& table) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos)
        throw UsageError("point '" + text + "' must be <segment>:<progress> or <name>:<progress>");
    const std::string head = text.substr(0, colon);
    NaksatraPoint pt;
    pt.progress = parse_rational_arg(text.substr(colon + 1), "progress of '" + text + "'");
    if (!head.empty() && head.find_first_not_of("0123456789") == std::string::npos) {
        pt.segment = static_cast<std::int64_t>(parse_count(head, "segment"));
    } else {
        pt.segment = table.find(head);
        if (pt.segment < 0) throw UsageError("unknown nakshatra '" + head + "'");
    }
    if (pt.segment >= kZodiacNaksatras) throw UsageError("segment out of range in '" + text + "'");
    if (pt.progress.is_negative() || pt.progress >= Rational(1))
        throw UsageError("progress must lie in [0, 1) in '" + text + "'");
    return pt;
}

/// Where segment 0 of the table sits in the Ashvini-at-zero frame, if known.
OriginConvention table_origin(const NaksatraNameTable& table) {
    const auto& standard = asvini_order_names();
    const auto key = fold_name(table.origin_name());
    for (std::size_t i = 0; i < standard.size(); ++i)
        if (fold_name(standard[i]) == key)
            return {Rational(static_cast<std::int64_t>(i)) * naksatra_span_degrees()};
    return OriginConvention::asvini_zero();
}

struct DateArgs {
    std::string from, to, epoch, rate, error_deg, origin_deg;
};

void cmd_date(const Invocation& inv, const DateArgs& a, std::ostream& out) {
    const auto table = inv.names(kZodiacNaksatras);
    const NaksatraPoint pa = parse_point(a.from, table);
    const NaksatraPoint pb = parse_point(a.to, table);
    Epoch known;
    try {
        known = Epoch::parse(a.epoch);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const Rational rate = !a.rate.empty() ? parse_rational_arg(a.rate, "--rate")
                                          : inv.config.rate.value_or(Rational(72));
    const Rational err = !a.error_deg.empty() ? parse_rational_arg(a.error_deg, "--error-deg")
                                              : inv.config.error_deg.value_or(Rational(2));
    OriginConvention origin = table_origin(table);
    if (!a.origin_deg.empty()) origin = {parse_rational_arg(a.origin_deg, "--origin-deg")};
    else if (inv.config.origin_deg) origin = {*inv.config.origin_deg};

    if (rate <= Rational(0)) throw UsageError("--rate must be positive");
    if (err.is_negative()) throw UsageError("--error-deg must be nonnegative");

    const auto r = date_from_naksatra_points(pa, pb, known, PrecessionRate(rate), origin, err);
    switch (inv.format()) {
    case OutputFormat::Json: emit_json(out, dating_report_json(r)); break;
    case OutputFormat::Csv: throw UsageError("date supports --format table or json");
    case OutputFormat::Table:
        out << "point A      " << table.at(pa.segment) << " + " << pa.progress.str() << " -> "
            << r.longitude_a.dms_str() << " (" << r.longitude_a.exact_str() << ")\n"
            << "point B      " << table.at(pb.segment) << " + " << pb.progress.str() << " -> "
            << r.longitude_b.dms_str() << " (" << r.longitude_b.exact_str() << ")\n"
            << "separation   " << format_dms(r.separation_degrees) << " ("
            << r.separation_degrees.str() << " deg)\n"
            << "elapsed      " << r.elapsed_years_exact.str() << " years (rounded "
            << r.elapsed_years_rounded.str() << ")\n"
            << "known epoch  " << known.label() << "\n"
            << "conjunction  " << r.date.label() << "\n"
            << "error band   +/-" << r.error_degrees.str() << " deg = +/-" << r.error_years.str()
            << " years: " << r.earliest.label() << " .. " << r.latest.label() << "\n";
        break;
    }
}

void cmd_sensitivity(const Invocation& inv, const std::string& error_deg, const std::string& rate_arg,
                     std::ostream& out) {
    const Rational err = parse_rational_arg(error_deg, "--error-deg");
    const Rational rate = !rate_arg.empty() ? parse_rational_arg(rate_arg, "--rate")
                                            : inv.config.rate.value_or(Rational(72));
    if (err.is_negative()) throw UsageError("--error-deg must be nonnegative");
    if (rate <= Rational(0)) throw UsageError("--rate must be positive");
    const Rational years = sensitivity(err, PrecessionRate(rate));
    switch (inv.format()) {
    case OutputFormat::Json: {
        Json j;
        j["error_deg"] = err.str();
        j["years_per_degree"] = rate.str();
        j["years"] = years.str();
        emit_json(out, j);
        break;
    }
    case OutputFormat::Csv:
        out << "error_deg,years_per_degree,years\n"
            << err.str() << "," << rate.str() << "," << years.str() << "\n";
        break;
    case OutputFormat::Table:
        out << format_dms(err) << " of observational error at 1 deg per " << rate.str()
            << " years shifts the date by " << years.str() << " years\n";
        break;
    }
}

int cmd_compare(const Invocation& inv, const ParamOverrides& ov, std::uint64_t max_fortnight,
                std::ostream& out) {
    const auto p = ov.resolve();
    std::vector<ModelComparison> rows;
    bool all_agree = true;
    for (std::uint64_t n = 0;; ++n) {
        rows.push_back(models_agree(p, n));
        all_agree = all_agree && rows.back().agree;
        if (n == max_fortnight) break;
    }
    switch (inv.format()) {
    case OutputFormat::Json: emit_json(out, comparison_json(rows)); break;
    case OutputFormat::Csv: out << comparison_csv(rows); break;
    case OutputFormat::Table:
        out << pad("fortnight", 11) << pad("tally", 16) << pad("rational", 18) << "agree\n";
        for (const auto& c : rows)
            out << pad(std::to_string(c.fortnight), 11)
                << pad(c.tally.count.str() + "/" + c.circle.str(), 16)
                << pad(to_mixed(c.rational_position).str(), 18) << (c.agree ? "yes" : "NO")
                << "\n";
        break;
    }
    return all_agree ? kSuccess : kDomainError;
}

void cmd_decompose(const Invocation& inv, const std::string& fraction, std::ostream& out) {
    const Rational r = parse_rational_arg(fraction, "fraction");
    if (r <= Rational(0) || r >= Rational(1))
        throw UsageError("fraction must lie strictly between 0 and 1, got " + r.str());
    const auto d = greedy_unit_fractions(r);
    switch (inv.format()) {
    case OutputFormat::Json: {
        Json j;
        j["fraction"] = r.str();
        Json dens = Json::array();
        for (const auto& x : d.denominators) dens.push_back(x.str());
        j["denominators"] = std::move(dens);
        j["sum"] = d.sum().str();
        emit_json(out, j);
        break;
    }
    case OutputFormat::Csv:
        out << "index,denominator\n";
        for (std::size_t i = 0; i < d.denominators.size(); ++i)
            out << i + 1 << "," << d.denominators[i].str() << "\n";
        break;
    case OutputFormat::Table: out << r.str() << " = " << d.str() << "\n"; break;
    }
}

void cmd_tax(const Invocation& inv, const std::string& measures_arg, std::ostream& out) {
    const BigInt measures = BigInt(parse_count(measures_arg, "--measures"));
    const auto s = sixth_share(measures);
    switch (inv.format()) {
    case OutputFormat::Json: {
        Json j;
        j["measures"] = measures.str();
        j["tax"] = s.tax.str();
        j["producer"] = s.producer.str();
        j["remainder"] = s.remainder.str();
        emit_json(out, j);
        break;
    }
    case OutputFormat::Csv:
        out << "measures,tax,producer,remainder\n"
            << measures.str() << "," << s.tax.str() << "," << s.producer.str() << ","
            << s.remainder.str() << "\n";
        break;
    case OutputFormat::Table:
        out << measures.str() << " measures: " << s.tax.str() << " set aside as tax, "
            << s.producer.str() << " kept, " << s.remainder.str() << " in the unfinished group\n";
        break;
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact five-year yuga calendar, precession dating and tally arithmetic", "vjcalc"};
    app.require_subcommand(1);
    app.fallthrough();

    Invocation inv;
    app.add_option("--format", inv.format_flag, "Output format: table, json or csv");
    app.add_option("--config", inv.config_path, "JSON config file (names, format, rate, "
                                                "error_deg, origin_deg); flags take precedence");
    app.add_option("--names", inv.names_flag, "Nakshatra names file, one per line from the origin");

    auto* yuga_cmd = app.add_subcommand("yuga", "Yuga tables");
    yuga_cmd->require_subcommand(1);
    auto* table_cmd = yuga_cmd->add_subcommand("table", "Moon and sun position for every fortnight");
    ParamOverrides table_ov;
    table_ov.attach(table_cmd);
    std::optional<unsigned> table_decimals;
    table_cmd->add_option("--decimals", table_decimals, "Add decimal columns with this many places")
        ->check(CLI::Range(0u, kDefaultMaxDecimalPlaces));

    auto add_position_cmd = [&](const char* name, const char* help, ParamOverrides& ov,
                                std::string& fortnight, std::optional<unsigned>& decimals) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--fortnight", fortnight, "Fortnights since the yuga began")->required();
        ov.attach(cmd);
        cmd->add_option("--decimals", decimals, "Also print a decimal with this many places")
            ->check(CLI::Range(0u, kDefaultMaxDecimalPlaces));
        return cmd;
    };
    ParamOverrides moon_ov, sun_ov;
    std::string moon_fortnight, sun_fortnight, sun_rate_arg;
    std::optional<unsigned> moon_decimals, sun_decimals;
    auto* moon_cmd = add_position_cmd("moon-position", "Moon's nakshatra position", moon_ov,
                                      moon_fortnight, moon_decimals);
    auto* sun_cmd = add_position_cmd("sun-position", "Sun's nakshatra position", sun_ov,
                                     sun_fortnight, sun_decimals);
    sun_cmd->add_option("--sun-rate", sun_rate_arg,
                        "Sun nakshatras per fortnight as p/q (default nakshatras x years / fortnights)");

    DateArgs date_args;
    auto* date_cmd = app.add_subcommand("date", "Date a solstice shift by precession");
    date_cmd->add_option("--from", date_args.from, "Earlier point, <name|segment>:<progress>")
        ->required();
    date_cmd->add_option("--to", date_args.to, "Later point, <name|segment>:<progress>")->required();
    date_cmd->add_option("--epoch", date_args.epoch, "Year of the later point, e.g. 530CE")
        ->required();
    date_cmd->add_option("--rate", date_args.rate, "Years per degree of precession (default 72)");
    date_cmd->add_option("--error-deg", date_args.error_deg, "Observation error band in degrees");
    date_cmd->add_option("--origin-deg", date_args.origin_deg,
                         "Longitude of the table's first segment (default from its name)");

    std::string sens_error, sens_rate;
    auto* sens_cmd = app.add_subcommand("sensitivity", "Years of error per observational error");
    sens_cmd->add_option("--error-deg", sens_error, "Observation error in degrees")->required();
    sens_cmd->add_option("--rate", sens_rate, "Years per degree of precession (default 72)");

    ParamOverrides cmp_ov;
    std::string cmp_max = "124";
    auto* cmp_cmd = app.add_subcommand("compare-models", "Tally count against exact rational");
    cmp_cmd->add_option("--max", cmp_max, "Last fortnight to compare (default 124)");
    cmp_ov.attach(cmp_cmd);

    std::string fraction;
    auto* dec_cmd = app.add_subcommand("decompose", "Greedy unit-fraction decomposition");
    dec_cmd->add_option("fraction", fraction, "Proper fraction p/q")->required();

    std::string measures;
    auto* tax_cmd = app.add_subcommand("tax", "Set aside one measure in every six");
    tax_cmd->add_option("--measures", measures, "Number of measures")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (!inv.config_path.empty()) inv.config = load_config(inv.config_path);

        if (*table_cmd) {
            cmd_yuga_table(inv, table_ov, table_decimals, out);
        } else if (*moon_cmd) {
            const auto n = parse_count(moon_fortnight, "--fortnight");
            const auto p = moon_ov.resolve();
            cmd_position(inv, "moon", p, n, moon_position(p, n), moon_decimals, out);
        } else if (*sun_cmd) {
            const auto n = parse_count(sun_fortnight, "--fortnight");
            const auto p = sun_ov.resolve();
            NaksatraPosition pos;
            if (sun_rate_arg.empty()) {
                pos = sun_position(p, n);
            } else {
                const Rational rate = parse_rational_arg(sun_rate_arg, "--sun-rate");
                if (rate.is_negative()) throw UsageError("--sun-rate must be nonnegative");
                pos = sun_position(p, n, rate);
            }
            cmd_position(inv, "sun", p, n, pos, sun_decimals, out);
        } else if (*date_cmd) {
            cmd_date(inv, date_args, out);
        } else if (*sens_cmd) {
            cmd_sensitivity(inv, sens_error, sens_rate, out);
        } else if (*cmp_cmd) {
            const int code = cmd_compare(inv, cmp_ov, parse_count(cmp_max, "--max"), out);
            if (code != kSuccess) err << "vjcalc: tally and rational models disagree\n";
            return code;
        } else if (*dec_cmd) {
            cmd_decompose(inv, fraction, out);
        } else if (*tax_cmd) {
            cmd_tax(inv, measures, out);
        }
    } catch (const UsageError& e) {
        err << "vjcalc: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "vjcalc: " << e.what() << "\n";
        return kDomainError;
    }
    return kSuccess;
}

} // namespace yuga::cli
