#include "senti/smoother.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "senti/errors.hpp"

namespace senti {

namespace {

constexpr double kBandwidthFactor = 1.01;
constexpr std::size_t kMaxTerms = 3;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

void check_sorted(std::span<const SeriesPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw InputError("series point " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && points[i].x < points[i - 1].x) {
      throw InputError("series x values must be non-decreasing");
    }
  }
}

struct Window {
  std::vector<std::size_t> index;  // ascending
  std::vector<double> weight;
  std::size_t nearest = 0;
  double bandwidth = 0.0;
};

// The q points nearest to x0. Among points at the cut-off distance the
// lower indices win, so the window is a pure function of (x, x0, q).
Window select_window(std::span<const SeriesPoint> points, double x0, std::size_t q) {
  const std::size_t n = points.size();
  const auto dist = [&](std::size_t i) { return std::abs(points[i].x - x0); };
  auto it = std::lower_bound(points.begin(), points.end(), x0,
                             [](const SeriesPoint& p, double v) { return p.x < v; });
  auto right = static_cast<std::ptrdiff_t>(it - points.begin());
  auto left = right - 1;
  const auto sn = static_cast<std::ptrdiff_t>(n);

  double cutoff = 0.0;
  for (std::size_t taken = 0; taken < q; ++taken) {
    const bool take_left =
        left >= 0 && (right >= sn || dist(static_cast<std::size_t>(left)) <=
                                         dist(static_cast<std::size_t>(right)));
    const std::size_t i = static_cast<std::size_t>(take_left ? left-- : right++);
    cutoff = std::max(cutoff, dist(i));
  }
  // Widen to every point tied at the cut-off, then keep the lowest indices.
  while (left >= 0 && dist(static_cast<std::size_t>(left)) == cutoff) --left;
  while (right < sn && dist(static_cast<std::size_t>(right)) == cutoff) ++right;

  Window win;
  win.index.reserve(q);
  std::size_t ties_allowed = q;
  for (auto i = left + 1; i < right; ++i) {
    if (dist(static_cast<std::size_t>(i)) < cutoff) --ties_allowed;
  }
  for (auto i = left + 1; i < right; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (dist(u) == cutoff) {
      if (ties_allowed == 0) continue;
      --ties_allowed;
    }
    win.index.push_back(u);
    if (win.index.size() == 1 || dist(u) < dist(win.nearest)) win.nearest = u;
  }

  win.bandwidth = kBandwidthFactor * cutoff;
  win.weight.reserve(q);
  for (std::size_t i : win.index) {
    win.weight.push_back(win.bandwidth > 0.0 ? tricube_weight(dist(i) / win.bandwidth) : 1.0);
  }
  return win;
}

// Solves A z = b for a small dense matrix by LU with partial pivoting.
// Returns false when a pivot vanishes relative to the matrix scale.
bool pivoted_solve(std::array<std::array<double, kMaxTerms>, kMaxTerms> a,
                   std::array<double, kMaxTerms>& b, std::size_t m) {
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, std::abs(a[i][j]));
  }
  if (scale == 0.0) return false;

  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    }
    if (std::abs(a[piv][k]) <= 1e-13 * scale) return false;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < m; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < m; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = m; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < m; ++j) s -= a[k][j] * b[j];
    b[k] = s / a[k][k];
  }
  return true;
}

// The local estimate at x0 as a linear combination of window y values.
struct LinearRow {
  Window window;
  std::vector<double> coef;  // l_i, parallel to window.index
  double fit = 0.0;
};

LinearRow linear_row(std::span<const SeriesPoint> points, double x0, const SmoothParams& params) {
  const std::size_t q = window_size(points.size(), params.span);
  const auto m = static_cast<std::size_t>(params.degree) + 1;

  LinearRow row;
  row.window = select_window(points, x0, q);
  const Window& win = row.window;

  std::vector<double> distinct;
  for (std::size_t k = 0; k < q; ++k) {
    if (win.weight[k] > 0.0) distinct.push_back(points[win.index[k]].x);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < m) {
    throw NumericalError("singular local window at x0 = " + fmt(x0) + ": " +
                         std::to_string(distinct.size()) + " distinct x for degree " +
                         std::to_string(params.degree));
  }

  // Basis in t = (x - x0) / h keeps the normal matrix well scaled.
  const double h = win.bandwidth > 0.0 ? win.bandwidth : 1.0;
  std::vector<std::array<double, kMaxTerms>> basis(q);
  std::array<std::array<double, kMaxTerms>, kMaxTerms> normal{};
  for (std::size_t k = 0; k < q; ++k) {
    const double t = (points[win.index[k]].x - x0) / h;
    basis[k] = {1.0, t, t * t};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) normal[i][j] += win.weight[k] * basis[k][i] * basis[k][j];
    }
  }

  // Row 0 of the inverse (normal matrix is symmetric) gives the equivalent
  // kernel: l_k = w_k * z . phi(t_k).
  std::array<double, kMaxTerms> z{1.0, 0.0, 0.0};
  if (!pivoted_solve(normal, z, m)) {
    throw NumericalError("singular local window at x0 = " + fmt(x0));
  }

  row.coef.resize(q);
  const double y_ref = points[win.nearest].y;
  double delta = 0.0;
  for (std::size_t k = 0; k < q; ++k) {
    double dot = 0.0;
    for (std::size_t j = 0; j < m; ++j) dot += z[j] * basis[k][j];
    row.coef[k] = win.weight[k] * dot;
    delta += row.coef[k] * (points[win.index[k]].y - y_ref);
  }
  row.fit = y_ref + delta;
  return row;
}

double sum_squares(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

void require_fit_size(std::size_t n, const SmoothParams& params) {
  if (n == 0) throw InputError("cannot smooth an empty series");
  const std::size_t q = window_size(n, params.span);
  if (q < static_cast<std::size_t>(params.degree) + 1) {
    throw InputError("window of " + std::to_string(q) + " points is too small for degree " +
                     std::to_string(params.degree) + " (increase span)");
  }
}

struct Bracket {
  std::size_t lo = 0;
  double frac = 0.0;
};

Bracket locate(const SmoothedSeries& series, double x) {
  const auto& gx = series.eval_x;
  if (gx.empty() || x < gx.front() || x > gx.back() || std::isnan(x)) {
    throw InputError("x = " + fmt(x) + " outside the smoothed range");
  }
  if (gx.size() == 1) return {0, 0.0};
  auto it = std::upper_bound(gx.begin(), gx.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - gx.begin());
  if (hi >= gx.size()) hi = gx.size() - 1;
  const std::size_t lo = hi - 1;
  return {lo, (x - gx[lo]) / (gx[hi] - gx[lo])};
}

double lerp_at(const std::vector<double>& v, Bracket b) {
  if (b.frac == 0.0) return v[b.lo];
  if (b.frac == 1.0) return v[b.lo + 1];
  return v[b.lo] + b.frac * (v[b.lo + 1] - v[b.lo]);
}

}  // namespace

void validate(const SmoothParams& params) {
  if (!(params.span > 0.0 && params.span <= 1.0)) {
    throw InputError("span must be in (0, 1], got " + fmt(params.span));
  }
  if (params.degree < 0 || params.degree > 2) {
    throw InputError("degree must be 0, 1 or 2, got " + std::to_string(params.degree));
  }
  if (!(params.ci_level > 0.0 && params.ci_level < 1.0)) {
    throw InputError("confidence level must be in (0, 1), got " + fmt(params.ci_level));
  }
  if (!params.grid.all_x && params.grid.points < 2) {
    throw InputError("grid needs at least 2 points");
  }
}

std::size_t window_size(std::size_t n, double span) {
  const double raw = span * static_cast<double>(n);
  auto q = static_cast<std::size_t>(std::ceil(raw * (1.0 - 1e-12)));
  return std::clamp<std::size_t>(q, 1, std::max<std::size_t>(n, 1));
}

double residual_df(std::size_t n, const SmoothParams& params) {
  const double df = static_cast<double>(n) - 1.25 * (params.degree + 1) / params.span;
  return std::max(1.0, df);
}

double tricube_weight(double u) {
  const double a = std::abs(u);
  if (!(a < 1.0)) return 0.0;
  const double c = 1.0 - a * a * a;
  return c * c * c;
}

double residual_variance(std::span<const SeriesPoint> points, const SmoothParams& params) {
  validate(params);
  check_sorted(points);
  require_fit_size(points.size(), params);
  double rss = 0.0;
  for (const auto& p : points) {
    const double r = p.y - linear_row(points, p.x, params).fit;
    rss += r * r;
  }
  return rss / residual_df(points.size(), params);
}

LocalFit local_fit(std::span<const SeriesPoint> points, double x0, const SmoothParams& params,
                   double sigma2) {
  validate(params);
  check_sorted(points);
  require_fit_size(points.size(), params);
  const LinearRow row = linear_row(points, x0, params);
  return {row.fit, std::sqrt(sigma2 * sum_squares(row.coef))};
}

LocalFit local_fit(std::span<const SeriesPoint> points, double x0, const SmoothParams& params) {
  return local_fit(points, x0, params, residual_variance(points, params));
}

SmoothedSeries smooth_series(std::span<const SeriesPoint> points, const SmoothParams& params) {
  validate(params);
  check_sorted(points);
  const std::size_t n = points.size();
  if (n < static_cast<std::size_t>(params.degree) + 2) {
    throw InputError("need at least " + std::to_string(params.degree + 2) +
                     " points to smooth with degree " + std::to_string(params.degree) +
                     ", got " + std::to_string(n));
  }
  require_fit_size(n, params);

  SmoothedSeries s;
  s.params = params;
  s.n = n;

  double mean = 0.0;
  for (const auto& p : points) mean += p.y;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (const auto& p : points) var += (p.y - mean) * (p.y - mean);
  s.seq_mean = mean;
  s.seq_var = var / static_cast<double>(n);

  s.sigma2 = residual_variance(points, params);
  s.df = residual_df(n, params);
  boost::math::students_t dist(s.df);
  s.t_critical = boost::math::quantile(dist, 0.5 + params.ci_level / 2.0);

  if (params.grid.all_x) {
    for (const auto& p : points) {
      if (s.eval_x.empty() || s.eval_x.back() != p.x) s.eval_x.push_back(p.x);
    }
  } else {
    const double lo = points.front().x;
    const double hi = points.back().x;
    if (lo == hi) {
      s.eval_x.push_back(lo);
    } else {
      const std::size_t g = params.grid.points;
      for (std::size_t i = 0; i < g; ++i) {
        s.eval_x.push_back(i + 1 == g ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                                      static_cast<double>(g - 1));
      }
    }
  }

  const std::size_t g = s.eval_x.size();
  std::vector<Window> windows;
  windows.reserve(g);
  for (double x0 : s.eval_x) {
    LinearRow row = linear_row(points, x0, params);
    const double se = std::sqrt(s.sigma2 * sum_squares(row.coef));
    const double half = s.t_critical * se;
    s.fit.push_back(row.fit);
    s.se.push_back(se);
    s.lower.push_back(row.fit - half);
    s.upper.push_back(row.fit + half);
    windows.push_back(std::move(row.window));
  }

  // Local dispersion around the fitted slope, using the fit interpolated at
  // each record's x.
  std::vector<double> sq_resid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = points[i].y - lerp_at(s.fit, locate(s, points[i].x));
    sq_resid[i] = r * r;
  }
  for (const auto& win : windows) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < win.index.size(); ++k) {
      num += win.weight[k] * sq_resid[win.index[k]];
      den += win.weight[k];
    }
    s.cond_var.push_back(den > 0.0 ? num / den : 0.0);
  }
  return s;
}

double conditional_mean_at(const SmoothedSeries& series, double x) {
  return lerp_at(series.fit, locate(series, x));
}

BandValue band_at(const SmoothedSeries& series, double x) {
  const Bracket b = locate(series, x);
  return {lerp_at(series.fit, b), lerp_at(series.lower, b), lerp_at(series.upper, b),
          lerp_at(series.cond_var, b)};
}

}  // namespace senti
