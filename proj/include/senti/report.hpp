#pragma once

#include <span>
#include <string>
#include <vector>

#include "senti/artifacts.hpp"
#include "senti/metrics.hpp"

namespace senti {

struct PanelSequence {
  std::size_t index = 0;
  std::string label;
  RecordId start_id = 0;
  RecordId end_id = 0;
};

struct ReportInput {
  std::vector<PanelSequence> sequences;
  std::vector<std::string> metrics;  // row order
  std::vector<SmoothedTable> tables;
  // mean per (sequence, metric); looked up by index into sequences/metrics
  std::vector<std::vector<double>> means;
  std::vector<RecordMetrics> records;  // raw points; may be empty
  std::vector<RecordFlag> flags;       // may be empty
};

// One panel per (metric, sequence): raw points, shaded band polygon, a single
// <path class="fit"> and a horizontal <line class="mean">. Static SVG only.
std::string render_report_svg(const ReportInput& input);

// Raw value of a named metric column for one record.
double metric_value(const RecordMetrics& m, std::string_view metric);

}  // namespace senti
