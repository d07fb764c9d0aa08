#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace senti::csv {

using Row = std::vector<std::string>;

// RFC-4180 reader: quoted fields, doubled quotes, embedded CR/LF inside
// quotes. Accepts LF or CRLF record terminators.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Returns std::nullopt at end of input. Throws InputError on an
  // unterminated quoted field.
  std::optional<Row> next();

  // 1-based physical line where the last returned record started.
  std::size_t line() const { return record_line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

std::string quote(std::string_view field);
void write_row(std::ostream& out, const Row& row);

// Locates `name` in a header row; std::nullopt when absent.
std::optional<std::size_t> column(const Row& header, std::string_view name);

// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

}  // namespace senti::csv
