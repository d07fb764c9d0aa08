#include "senti/artifacts.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "senti/csv.hpp"
#include "senti/errors.hpp"

namespace senti {

namespace {

using csv::format_double;

std::string join(const csv::Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
  return out;
}

void expect_header(csv::Reader& reader, std::string_view header, std::string_view what) {
  auto row = reader.next();
  if (!row || join(*row) != header) {
    throw InputError(std::string(what) + " must start with header " + std::string(header));
  }
}

double parse_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

BandStatus parse_status(const std::string& s, std::size_t line) {
  if (s == "within_band") return BandStatus::within_band;
  if (s == "above") return BandStatus::above;
  if (s == "below") return BandStatus::below;
  throw InputError("line " + std::to_string(line) + ": unknown status '" + s + "'");
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("cannot move " + tmp.string() + " into place: " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_file(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InputError("SHA-256 failed for " + path.string());
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

void write_smoothed_csv(std::ostream& out, std::span<const SmoothedTable> tables) {
  out << kSmoothedHeader << '\n';
  for (const auto& t : tables) {
    const auto& s = t.series;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double clamped = t.clamp_at_zero ? std::max(0.0, s.fit[i]) : s.fit[i];
      csv::write_row(out, {std::to_string(t.sequence), t.metric, format_double(s.eval_x[i]),
                           format_double(s.fit[i]), format_double(clamped),
                           format_double(s.se[i]), format_double(s.lower[i]),
                           format_double(s.upper[i]), format_double(s.cond_var[i])});
    }
  }
}

std::vector<SmoothedTable> read_smoothed_csv(std::istream& in) {
  csv::Reader reader(in);
  expect_header(reader, kSmoothedHeader, "smoothed CSV");
  std::vector<SmoothedTable> tables;
  while (auto row = reader.next()) {
    const std::size_t line = reader.line();
    if (row->size() != 9) throw InputError("smoothed CSV line " + std::to_string(line) +
                                           ": expected 9 fields");
    const auto& r = *row;
    std::size_t seq = 0;
    const auto res = std::from_chars(r[0].data(), r[0].data() + r[0].size(), seq);
    if (res.ec != std::errc()) throw InputError("smoothed CSV line " + std::to_string(line) +
                                                ": bad sequence");
    if (tables.empty() || tables.back().sequence != seq || tables.back().metric != r[1]) {
      SmoothedTable t;
      t.sequence = seq;
      t.metric = r[1];
      tables.push_back(std::move(t));
    }
    auto& t = tables.back();
    auto& s = t.series;
    s.eval_x.push_back(parse_double(r[2], line));
    s.fit.push_back(parse_double(r[3], line));
    const double clamped = parse_double(r[4], line);
    if (clamped != s.fit.back()) t.clamp_at_zero = true;
    s.se.push_back(parse_double(r[5], line));
    s.lower.push_back(parse_double(r[6], line));
    s.upper.push_back(parse_double(r[7], line));
    s.cond_var.push_back(parse_double(r[8], line));
  }
  return tables;
}

void write_flags_csv(std::ostream& out, std::span<const RecordFlag> flags) {
  out << kFlagsHeader << '\n';
  for (const auto& f : flags) {
    csv::write_row(out, {std::to_string(f.record_id), f.metric, format_double(f.value),
                         format_double(f.fit), format_double(f.lower), format_double(f.upper),
                         std::string(to_string(f.status))});
  }
}

std::vector<RecordFlag> read_flags_csv(std::istream& in) {
  csv::Reader reader(in);
  expect_header(reader, kFlagsHeader, "flags CSV");
  std::vector<RecordFlag> flags;
  while (auto row = reader.next()) {
    const std::size_t line = reader.line();
    if (row->size() != 7) throw InputError("flags CSV line " + std::to_string(line) +
                                           ": expected 7 fields");
    const auto& r = *row;
    RecordFlag f;
    f.record_id = static_cast<RecordId>(parse_double(r[0], line));
    f.metric = r[1];
    f.value = parse_double(r[2], line);
    f.fit = parse_double(r[3], line);
    f.lower = parse_double(r[4], line);
    f.upper = parse_double(r[5], line);
    f.status = parse_status(r[6], line);
    flags.push_back(std::move(f));
  }
  return flags;
}

void write_extrema_csv(std::ostream& out, std::span<const Extremum> extrema) {
  out << kExtremaHeader << '\n';
  for (const auto& e : extrema) {
    csv::write_row(out, {std::to_string(e.sequence), e.metric, format_double(e.x),
                         format_double(e.fit), std::string(to_string(e.kind))});
  }
}

}  // namespace senti
