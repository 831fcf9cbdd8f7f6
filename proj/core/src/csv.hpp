#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace collabnet::detail {

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: quoted fields, doubled quotes, embedded newlines, CRLF.
/// A UTF-8 byte-order mark on the first line is skipped. Blank lines are
/// dropped. Throws MalformedRow on an unterminated quote.
std::vector<CsvRow> read_csv(std::istream& in);

/// Quotes the field only when it contains a delimiter, quote or newline.
std::string csv_field(std::string_view value);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest representation that round-trips.
std::string format_double(double value);

/// Throws MalformedRow naming `what` when the header differs.
void expect_header(const std::vector<CsvRow>& rows,
                   const std::vector<std::string>& header,
                   std::string_view what);

}  // namespace collabnet::detail
