#include "fuzzydist/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>

#include "fuzzydist/error.hpp"

namespace fuzzydist::csv {

std::vector<Record> read_records(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) fail(ErrorCode::kIo, "failed to read CSV input");

  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    if (record_has_content) {
      end_field();
      records.push_back(std::move(current));
    }
    current = Record{};
    field.clear();
    field_was_quoted = false;
    record_has_content = false;
    current.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          fail(ErrorCode::kParse, "line " + std::to_string(line) + ", field " +
                                      std::to_string(current.fields.size() + 1) +
                                      ": unexpected quote inside unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        record_has_content = true;
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field.push_back(c);
        record_has_content = true;
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        if (field_was_quoted && c != ' ' && c != '\t') {
          fail(ErrorCode::kParse, "line " + std::to_string(line) + ", field " +
                                      std::to_string(current.fields.size() + 1) +
                                      ": text after closing quote");
        }
        if (!field_was_quoted) field.push_back(c);
        record_has_content = true;
        break;
    }
  }
  if (in_quotes) {
    fail(ErrorCode::kParse, "line " + std::to_string(current.line) + ": unterminated quoted field");
  }
  end_record();
  return records;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

bool parse_double(std::string_view field, double& value) noexcept {
  const auto first = field.find_first_not_of(" \t");
  if (first == std::string_view::npos) return false;
  const auto last = field.find_last_not_of(" \t");
  field = field.substr(first, last - first + 1);
  // from_chars rejects a leading '+', which some spreadsheet exports emit.
  if (field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::string format_number(double value, int significant_digits) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace fuzzydist::csv
