#include "senti/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "senti/errors.hpp"

namespace senti {

namespace {

constexpr double kPanelW = 360.0;
constexpr double kPanelH = 200.0;
constexpr double kGap = 24.0;
constexpr double kPad = 28.0;
constexpr double kTop = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Scale {
  double x0, x1, y0, y1;  // data range
  double left, top;       // panel origin

  double px(double x) const {
    const double span = x1 > x0 ? x1 - x0 : 1.0;
    return left + kPad + (x - x0) / span * (kPanelW - 2 * kPad);
  }
  double py(double y) const {
    const double span = y1 > y0 ? y1 - y0 : 1.0;
    return top + kPanelH - kPad - (y - y0) / span * (kPanelH - 2 * kPad);
  }
};

}  // namespace

double metric_value(const RecordMetrics& m, std::string_view metric) {
  if (metric == "sentiment_count") return static_cast<double>(m.sentiment_count);
  if (metric == "nrc_score") return static_cast<double>(m.nrc_score);
  if (metric == "bing_score") return static_cast<double>(m.bing_score);
  throw InputError("unknown metric '" + std::string(metric) + "'");
}

std::string render_report_svg(const ReportInput& in) {
  const std::size_t cols = in.sequences.size();
  const std::size_t rows = in.metrics.size();
  const double width = kGap + static_cast<double>(cols) * (kPanelW + kGap);
  const double height = kTop + static_cast<double>(rows) * (kPanelH + kGap);

  std::map<std::pair<std::size_t, std::string>, const SmoothedTable*> by_key;
  for (const auto& t : in.tables) by_key[{t.sequence, t.metric}] = &t;
  std::map<std::pair<RecordId, std::string>, BandStatus> flag_status;
  for (const auto& f : in.flags) flag_status[{f.record_id, f.metric}] = f.status;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  svg << "<style>.frame{fill:#fff;stroke:#999}.band{fill:#bbb;fill-opacity:0.5;stroke:none}"
         ".fit{fill:none;stroke:#1f4fbf;stroke-width:1.5}.mean{stroke:#d62728;stroke-width:1.2}"
         ".point{fill:#444;fill-opacity:0.35}.above,.below{fill:#ff7f0e}"
         "text{font-family:sans-serif;font-size:11px}</style>\n";
  svg << "<text x=\"" << num(kGap) << "\" y=\"22\" font-size=\"14\">Conditional means by "
         "sequence</text>\n";

  for (std::size_t r = 0; r < rows; ++r) {
    const std::string& metric = in.metrics[r];
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& seq = in.sequences[c];
      const double left = kGap + static_cast<double>(c) * (kPanelW + kGap);
      const double top = kTop + static_cast<double>(r) * (kPanelH + kGap);
      const auto it = by_key.find({seq.index, metric});
      const SmoothedTable* table = it == by_key.end() ? nullptr : it->second;
      const double mean = in.means.at(c).at(r);

      std::vector<std::pair<double, double>> raw;
      for (const auto& m : in.records) {
        if (seq.start_id <= m.record_id && m.record_id <= seq.end_id) {
          raw.emplace_back(static_cast<double>(m.record_id), metric_value(m, metric));
        }
      }

      Scale s{static_cast<double>(seq.start_id), static_cast<double>(seq.end_id),
              std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
              left, top};
      const auto widen = [&](double y) {
        s.y0 = std::min(s.y0, y);
        s.y1 = std::max(s.y1, y);
      };
      widen(mean);
      for (const auto& p : raw) widen(p.second);
      if (table) {
        for (double v : table->series.lower) widen(v);
        for (double v : table->series.upper) widen(v);
      }
      if (s.y1 - s.y0 < 1e-9) {
        s.y0 -= 1.0;
        s.y1 += 1.0;
      }

      svg << "<g class=\"panel\" data-sequence=\"" << seq.index << "\" data-metric=\""
          << escape(metric) << "\">\n";
      svg << "<rect class=\"frame\" x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
          << num(kPanelW) << "\" height=\"" << num(kPanelH) << "\"/>\n";
      svg << "<text x=\"" << num(left + 6) << "\" y=\"" << num(top + 14) << "\">"
          << escape(seq.label) << " / " << escape(metric) << "</text>\n";

      if (table && !table->series.eval_x.empty()) {
        const auto& ser = table->series;
        svg << "<polygon class=\"band\" points=\"";
        for (std::size_t i = 0; i < ser.size(); ++i) {
          svg << (i ? " " : "") << num(s.px(ser.eval_x[i])) << ',' << num(s.py(ser.upper[i]));
        }
        for (std::size_t i = ser.size(); i-- > 0;) {
          svg << ' ' << num(s.px(ser.eval_x[i])) << ',' << num(s.py(ser.lower[i]));
        }
        svg << "\"/>\n";
      }

      for (const auto& [x, y] : raw) {
        const auto f = flag_status.find({static_cast<RecordId>(x), metric});
        const bool flagged = f != flag_status.end() && f->second != BandStatus::within_band;
        svg << "<circle class=\""
            << (flagged ? std::string(to_string(f->second)) : std::string("point"))
            << "\" cx=\"" << num(s.px(x)) << "\" cy=\"" << num(s.py(y)) << "\" r=\"1.6\"/>\n";
      }

      svg << "<line class=\"mean\" x1=\"" << num(s.px(s.x0)) << "\" y1=\"" << num(s.py(mean))
          << "\" x2=\"" << num(s.px(s.x1)) << "\" y2=\"" << num(s.py(mean)) << "\"/>\n";

      if (table && !table->series.eval_x.empty()) {
        const auto& ser = table->series;
        svg << "<path class=\"fit\" d=\"";
        for (std::size_t i = 0; i < ser.size(); ++i) {
          const double y = table->clamp_at_zero ? std::max(0.0, ser.fit[i]) : ser.fit[i];
          svg << (i ? " L" : "M") << num(s.px(ser.eval_x[i])) << ',' << num(s.py(y));
        }
        svg << "\"/>\n";
      }
      svg << "</g>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace senti
