#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/metrics.hpp"
#include "senti/smoother.hpp"

namespace senti {

struct SequenceSummary {
  std::size_t index = 0;
  std::string label;
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // population (n divisor)
  double fit_min = 0.0;
  double fit_max = 0.0;
  double amplitude = 0.0;  // fit_max - fit_min
};

// Plain mean/variance of `values` next to the range of the smoothed fit.
SequenceSummary summarize_sequence(const SequenceSlice& slice, std::span<const double> values,
                                   const SmoothedSeries& series);

enum class BandStatus { within_band, above, below };
std::string_view to_string(BandStatus status);

struct RecordFlag {
  RecordId record_id = 0;
  std::string metric;
  double value = 0.0;
  double fit = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  BandStatus status = BandStatus::within_band;
};

// One flag per point (x is the record id). The band is the confidence band
// interpolated at x, or fit +/- k * sqrt(cond_var) when k_sigma is given.
// above/below use strict comparison.
std::vector<RecordFlag> flag_records(std::span<const SeriesPoint> points,
                                     const SmoothedSeries& series, std::string_view metric,
                                     std::optional<double> k_sigma = std::nullopt);

enum class ExtremumKind { maximum, minimum };
std::string_view to_string(ExtremumKind kind);

struct Extremum {
  std::size_t sequence = 0;
  std::string metric;
  double x = 0.0;
  double fit = 0.0;
  ExtremumKind kind = ExtremumKind::maximum;
};

// Interior strict local extrema of `fit`. A plateau counts once, at its
// first grid point, when both outer neighbours are on the same side.
// Endpoints are never reported.
std::vector<Extremum> find_extrema(std::span<const double> eval_x, std::span<const double> fit,
                                   std::size_t sequence = 0, std::string_view metric = {});

inline std::vector<Extremum> find_extrema(const SmoothedSeries& series, std::size_t sequence = 0,
                                          std::string_view metric = {}) {
  return find_extrema(series.eval_x, series.fit, sequence, metric);
}

struct AgreementReport {
  std::optional<double> agreement;  // nullopt when nothing is comparable
  std::size_t records = 0;
  std::size_t compared = 0;
  std::size_t agreeing = 0;
  std::size_t nrc_zero = 0;
  std::size_t bing_zero = 0;
};

// Sign agreement between nrc_score and bing_score over records where both
// are nonzero. With zeros_as_agree, records where both are zero are also
// compared and count as agreeing.
AgreementReport lexicon_agreement(std::span<const RecordMetrics> metrics,
                                  bool zeros_as_agree = false);

}  // namespace senti
