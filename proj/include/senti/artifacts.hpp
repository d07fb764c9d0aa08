#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "senti/insight.hpp"
#include "senti/smoother.hpp"

namespace senti {

// Writes via a sibling temp file and rename, so readers never observe a
// partially written artifact.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Lower-case hex SHA-256 of the file's bytes.
std::string sha256_file(const std::filesystem::path& path);

// One smoothed metric within one sequence.
struct SmoothedTable {
  std::size_t sequence = 0;
  std::string metric;
  bool clamp_at_zero = false;  // count metrics report max(fit, 0)
  SmoothedSeries series;
};

// smoothed.csv: sequence,metric,x,fit,fit_clamped,se,lower,upper,cond_var
void write_smoothed_csv(std::ostream& out, std::span<const SmoothedTable> tables);
// Rebuilds the per-grid arrays exactly (shortest round-trip decimal text).
// Scalar fields of SmoothedSeries are not stored and stay defaulted.
std::vector<SmoothedTable> read_smoothed_csv(std::istream& in);

// flags.csv: record_id,metric,value,fit,lower,upper,status
void write_flags_csv(std::ostream& out, std::span<const RecordFlag> flags);
std::vector<RecordFlag> read_flags_csv(std::istream& in);

// extrema.csv: sequence,metric,x,fit,kind
void write_extrema_csv(std::ostream& out, std::span<const Extremum> extrema);

inline constexpr std::string_view kSmoothedHeader =
    "sequence,metric,x,fit,fit_clamped,se,lower,upper,cond_var";
inline constexpr std::string_view kFlagsHeader = "record_id,metric,value,fit,lower,upper,status";
inline constexpr std::string_view kExtremaHeader = "sequence,metric,x,fit,kind";

}  // namespace senti
