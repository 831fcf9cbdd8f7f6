#include "csv.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>

#include "collabnet/error.hpp"

namespace collabnet::detail {

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  std::size_t pos = 0;
  if (text.starts_with("\xEF\xBB\xBF")) pos = 3;

  std::vector<CsvRow> rows;
  std::size_t line = 1;
  CsvRow row{line, {}};
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{line, {}};
  };

  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (in_quotes) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          ++pos;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started && !field.empty()) {
          throw Error(ErrorCode::MalformedRow,
                      "stray quote on line " + std::to_string(line));
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (pos + 1 < text.size() && text[pos + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_field();
        ++line;
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::MalformedRow,
                "unterminated quote starting on line " +
                    std::to_string(row.line));
  }
  if (field_started || !row.fields.empty()) {
    end_field();
    end_row();
  }
  return rows;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

void expect_header(const std::vector<CsvRow>& rows,
                   const std::vector<std::string>& header,
                   std::string_view what) {
  if (rows.empty()) {
    throw Error(ErrorCode::MalformedRow,
                std::string(what) + ": missing header");
  }
  if (rows.front().fields != header) {
    std::string expected;
    for (const auto& h : header) expected += (expected.empty() ? "" : ",") + h;
    throw Error(ErrorCode::MalformedRow,
                std::string(what) + ": expected header `" + expected + "`");
  }
}

}  // namespace collabnet::detail
