#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace etau::csv {

inline constexpr int kSchemaVersion = 1;

// "# etau-csv schema=<name> version=1" followed by the column row.
void write_header(std::ostream& out, std::string_view schema, const std::vector<std::string>& columns);

// Round-trippable decimal form; "inf", "-inf" and "nan" for non-finite values.
std::string num(double x);

// Splits on commas; no quoting (no field in these schemas contains a comma).
std::vector<std::string> split_row(std::string_view line);

// Parses a number written by num(); throws std::invalid_argument otherwise.
double parse_num(std::string_view field);

}  // namespace etau::csv
