#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pitchctl::detail {

/// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
/// Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split_csv_record(std::string_view line);

/// Reads the next line, dropping a trailing '\r'. Returns false at end of input.
bool read_line(std::istream& in, std::string& line);

std::string_view trim(std::string_view s);

/// Whole-string decimal parse; rejects empty input, trailing junk, inf and nan.
std::optional<double> parse_double(std::string_view s);

}  // namespace pitchctl::detail
