#include "yuga/serialize.hpp"

#include <sstream>

namespace yuga {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

std::string join_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

} // namespace

std::vector<std::string> yuga_table_columns(bool with_decimals) {
    std::vector<std::string> cols = {"fortnight",   "moon_segment", "moon_progress",
                                     "moon_mixed",  "moon_name",    "sun_segment",
                                     "sun_progress", "sun_mixed",   "sun_name"};
    if (with_decimals) {
        cols.emplace_back("moon_decimal");
        cols.emplace_back("sun_decimal");
    }
    return cols;
}

Json yuga_table_json(std::span<const FortnightRecord> rows, std::optional<unsigned> decimals) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["fortnight"] = r.fortnight;
        j["moon_segment"] = r.moon.segment();
        j["moon_progress"] = r.moon.progress().str();
        j["moon_mixed"] = to_mixed(r.moon.total()).str();
        j["moon_name"] = r.moon_name;
        j["sun_segment"] = r.sun.segment();
        j["sun_progress"] = r.sun.progress().str();
        j["sun_mixed"] = to_mixed(r.sun.total()).str();
        j["sun_name"] = r.sun_name;
        if (decimals) {
            j["moon_decimal"] = to_decimal_string(r.moon.total(), *decimals);
            j["sun_decimal"] = to_decimal_string(r.sun.total(), *decimals);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string yuga_table_csv(std::span<const FortnightRecord> rows, std::optional<unsigned> decimals) {
    std::string out = join_row(yuga_table_columns(decimals.has_value()));
    for (const auto& r : rows) {
        std::vector<std::string> f = {
            std::to_string(r.fortnight),       std::to_string(r.moon.segment()),
            r.moon.progress().str(),           to_mixed(r.moon.total()).str(),
            r.moon_name,                       std::to_string(r.sun.segment()),
            r.sun.progress().str(),            to_mixed(r.sun.total()).str(),
            r.sun_name,
        };
        if (decimals) {
            f.push_back(to_decimal_string(r.moon.total(), *decimals));
            f.push_back(to_decimal_string(r.sun.total(), *decimals));
        }
        out += join_row(f);
    }
    return out;
}

Json position_json(std::uint64_t fortnight, const NaksatraPosition& pos, const std::string& name,
                   std::optional<unsigned> decimals) {
    Json j;
    j["fortnight"] = fortnight;
    j["segment"] = pos.segment();
    j["progress"] = pos.progress().str();
    j["mixed"] = to_mixed(pos.total()).str();
    j["name"] = name;
    if (decimals) j["decimal"] = to_decimal_string(pos.total(), *decimals);
    return j;
}

std::string position_csv(std::uint64_t fortnight, const NaksatraPosition& pos,
                         const std::string& name, std::optional<unsigned> decimals) {
    std::vector<std::string> head = {"fortnight", "segment", "progress", "mixed", "name"};
    std::vector<std::string> row = {std::to_string(fortnight), std::to_string(pos.segment()),
                                    pos.progress().str(), to_mixed(pos.total()).str(), name};
    if (decimals) {
        head.emplace_back("decimal");
        row.push_back(to_decimal_string(pos.total(), *decimals));
    }
    return join_row(head) + join_row(row);
}

namespace {

Json point_json(const NaksatraPoint& p) {
    Json j;
    j["segment"] = p.segment;
    j["progress"] = p.progress.str();
    return j;
}

Json longitude_json(const EclipticLongitude& l) {
    Json j;
    j["exact"] = l.exact_str();
    j["dms"] = l.dms_str();
    return j;
}

} // namespace

Json dating_report_json(const DatingReport& r) {
    Json j;
    j["point_a"] = point_json(r.point_a);
    j["point_b"] = point_json(r.point_b);
    j["longitude_a"] = longitude_json(r.longitude_a);
    j["longitude_b"] = longitude_json(r.longitude_b);
    Json sep;
    sep["exact"] = r.separation_degrees.str() + " deg";
    sep["dms"] = format_dms(r.separation_degrees);
    j["separation"] = std::move(sep);
    j["elapsed_years_exact"] = r.elapsed_years_exact.str();
    j["elapsed_years_rounded"] = r.elapsed_years_rounded.str();
    Json date;
    date["astronomical"] = r.date.astronomical_year();
    date["label"] = r.date.label();
    j["date"] = std::move(date);
    Json sens;
    sens["error_deg"] = r.error_degrees.str();
    sens["error_years"] = r.error_years.str();
    sens["band"] = Json::array({r.earliest.label(), r.latest.label()});
    j["sensitivity"] = std::move(sens);
    return j;
}

std::string comparison_csv(std::span<const ModelComparison> rows) {
    std::string out = join_row({"fortnight", "tally_units", "tally_circle", "rational_position",
                                "agree"});
    for (const auto& c : rows)
        out += join_row({std::to_string(c.fortnight), c.tally.count.str(), c.circle.str(),
                         c.rational_position.str(), c.agree ? "true" : "false"});
    return out;
}

Json comparison_json(std::span<const ModelComparison> rows) {
    Json out = Json::array();
    for (const auto& c : rows) {
        Json j;
        j["fortnight"] = c.fortnight;
        j["tally_units"] = c.tally.count.str();
        j["tally_circle"] = c.circle.str();
        j["rational_position"] = c.rational_position.str();
        j["agree"] = c.agree;
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace yuga
