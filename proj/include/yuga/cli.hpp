#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

namespace yuga::cli {

enum class OutputFormat { Table, Json, Csv };

/// Throws yuga::ParseError for anything but "table", "json" or "csv".
OutputFormat parse_format(std::string_view text);

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kUsageError = 2,
};

/// Runs one vjcalc invocation. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace yuga::cli
