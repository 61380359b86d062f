#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legnet::csv {

/// Quotes a field when it contains a comma, quote, CR or LF (RFC 4180).
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

/// Reads one RFC 4180 record, including quoted fields spanning lines.
/// `line` is advanced by the number of physical lines consumed. Returns
/// nullopt at end of input; throws ParseError on an unterminated quote.
std::optional<std::vector<std::string>> read_record(std::istream& in, std::size_t& line);

}  // namespace legnet::csv
