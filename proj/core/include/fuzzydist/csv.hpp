#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzydist::csv {

struct Record {
  std::size_t line = 0;  // 1-based line number of the record's first line
  std::vector<std::string> fields;
};

/// Splits comma-separated text into records. Fields may be double-quoted
/// (with "" as an escaped quote, and embedded commas or newlines). LF and
/// CRLF line endings are accepted; blank lines are skipped.
std::vector<Record> read_records(std::istream& in);

/// Quotes a field when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

/// Writes one record terminated by LF.
void write_record(std::ostream& out, const std::vector<std::string>& fields);

/// Locale-independent strict decimal parse; the whole field must be consumed
/// (surrounding spaces and tabs are ignored). Returns false on failure.
bool parse_double(std::string_view field, double& value) noexcept;

/// Shortest "%.{digits}g" rendering, used for all numeric file output.
std::string format_number(double value, int significant_digits);

}  // namespace fuzzydist::csv
