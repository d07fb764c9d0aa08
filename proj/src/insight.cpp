#include "senti/insight.hpp"

#include <algorithm>
#include <cmath>

#include "senti/errors.hpp"

namespace senti {

SequenceSummary summarize_sequence(const SequenceSlice& slice, std::span<const double> values,
                                   const SmoothedSeries& series) {
  if (values.empty()) {
    throw InputError("sequence " + std::to_string(slice.index) + " is empty");
  }
  SequenceSummary out;
  out.index = slice.index;
  out.label = slice.label;
  out.n = values.size();

  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.variance = ss / static_cast<double>(values.size());

  if (!series.fit.empty()) {
    const auto [lo, hi] = std::minmax_element(series.fit.begin(), series.fit.end());
    out.fit_min = *lo;
    out.fit_max = *hi;
    out.amplitude = *hi - *lo;
  }
  return out;
}

std::string_view to_string(BandStatus status) {
  switch (status) {
    case BandStatus::above: return "above";
    case BandStatus::below: return "below";
    default: return "within_band";
  }
}

std::vector<RecordFlag> flag_records(std::span<const SeriesPoint> points,
                                     const SmoothedSeries& series, std::string_view metric,
                                     std::optional<double> k_sigma) {
  std::vector<RecordFlag> flags;
  flags.reserve(points.size());
  for (const auto& p : points) {
    const BandValue band = band_at(series, p.x);
    RecordFlag f;
    f.record_id = static_cast<RecordId>(std::llround(p.x));
    f.metric = std::string(metric);
    f.value = p.y;
    f.fit = band.fit;
    if (k_sigma) {
      const double half = *k_sigma * std::sqrt(std::max(0.0, band.cond_var));
      f.lower = band.fit - half;
      f.upper = band.fit + half;
    } else {
      f.lower = band.lower;
      f.upper = band.upper;
    }
    if (p.y > f.upper) {
      f.status = BandStatus::above;
    } else if (p.y < f.lower) {
      f.status = BandStatus::below;
    }
    flags.push_back(std::move(f));
  }
  return flags;
}

std::string_view to_string(ExtremumKind kind) {
  return kind == ExtremumKind::maximum ? "maximum" : "minimum";
}

std::vector<Extremum> find_extrema(std::span<const double> eval_x, std::span<const double> fit,
                                   std::size_t sequence, std::string_view metric) {
  std::vector<Extremum> out;
  const std::size_t g = std::min(eval_x.size(), fit.size());
  if (g < 3) return out;

  std::size_t i = 1;
  while (i + 1 < g) {
    // [i, j] is the run of grid points equal to fit[i]
    std::size_t j = i;
    while (j + 1 < g && fit[j + 1] == fit[i]) ++j;
    if (j + 1 >= g) break;  // run touches the right endpoint
    const double left = fit[i - 1];
    const double right = fit[j + 1];
    if (left < fit[i] && right < fit[i]) {
      out.push_back({sequence, std::string(metric), eval_x[i], fit[i], ExtremumKind::maximum});
    } else if (left > fit[i] && right > fit[i]) {
      out.push_back({sequence, std::string(metric), eval_x[i], fit[i], ExtremumKind::minimum});
    }
    i = j + 1;
  }
  return out;
}

AgreementReport lexicon_agreement(std::span<const RecordMetrics> metrics, bool zeros_as_agree) {
  AgreementReport r;
  r.records = metrics.size();
  for (const auto& m : metrics) {
    if (m.nrc_score == 0) ++r.nrc_zero;
    if (m.bing_score == 0) ++r.bing_zero;
    if (m.nrc_score != 0 && m.bing_score != 0) {
      ++r.compared;
      if ((m.nrc_score > 0) == (m.bing_score > 0)) ++r.agreeing;
    } else if (zeros_as_agree && m.nrc_score == 0 && m.bing_score == 0) {
      ++r.compared;
      ++r.agreeing;
    }
  }
  if (r.compared > 0) {
    r.agreement = static_cast<double>(r.agreeing) / static_cast<double>(r.compared);
  }
  return r;
}

}  // namespace senti
