#pragma once

// JSON and CSV forms of the library's records. Every exact quantity is
// written as a string ("p/q", "w p/q"); keys keep a fixed order so the
// output is byte-stable.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "yuga/calendar.hpp"
#include "yuga/precession.hpp"
#include "yuga/tally.hpp"

namespace yuga {

using Json = nlohmann::ordered_json;

/// fortnight, moon_segment, moon_progress, moon_mixed, moon_name,
/// sun_segment, sun_progress, sun_mixed, sun_name, then moon_decimal and
/// sun_decimal when decimal places are requested.
std::vector<std::string> yuga_table_columns(bool with_decimals);

Json yuga_table_json(std::span<const FortnightRecord> rows, std::optional<unsigned> decimals = {});
std::string yuga_table_csv(std::span<const FortnightRecord> rows,
                           std::optional<unsigned> decimals = {});

/// fortnight, segment, progress, mixed, name [, decimal].
Json position_json(std::uint64_t fortnight, const NaksatraPosition& pos, const std::string& name,
                   std::optional<unsigned> decimals = {});
std::string position_csv(std::uint64_t fortnight, const NaksatraPosition& pos,
                         const std::string& name, std::optional<unsigned> decimals = {});

Json dating_report_json(const DatingReport& r);

/// fortnight, tally_units, tally_circle, rational_position, agree.
std::string comparison_csv(std::span<const ModelComparison> rows);
Json comparison_json(std::span<const ModelComparison> rows);

/// Quotes a CSV field when it holds a separator, quote or newline.
std::string csv_field(const std::string& s);

} // namespace yuga
