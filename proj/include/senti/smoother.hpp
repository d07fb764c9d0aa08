#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace senti {

// x is the conditioning variable (corpus position), y the metric value.
struct SeriesPoint {
  double x = 0.0;
  double y = 0.0;
};

struct GridSpec {
  std::size_t points = 80;  // evenly spaced over [min x, max x]
  bool all_x = false;       // evaluate at every distinct x instead

  static GridSpec evenly(std::size_t n) { return {n, false}; }
  static GridSpec all() { return {0, true}; }
};

struct SmoothParams {
  double span = 0.75;  // fraction of points in each local window
  int degree = 2;      // local polynomial degree, 0..2
  double ci_level = 0.95;
  GridSpec grid;
};

// Throws InputError when a parameter is outside its domain.
void validate(const SmoothParams& params);

// ceil(span * n), clamped to [1, n].
std::size_t window_size(std::size_t n, double span);

// Residual degrees of freedom: n - 1.25 (degree + 1) / span, at least 1.
double residual_df(std::size_t n, const SmoothParams& params);

// (1 - |u|^3)^3 on |u| < 1, else 0.
double tricube_weight(double u);

struct LocalFit {
  double fit = 0.0;
  double se = 0.0;
};

// Weighted least-squares polynomial over the window_size(n, span) points
// nearest to x0, with tricube weights scaled by 1.01 times the window's
// largest distance. se uses the series-wide residual variance.
//
// Points must be sorted by x (ties allowed). Throws NumericalError when the
// window has fewer than degree + 1 distinct x.
LocalFit local_fit(std::span<const SeriesPoint> points, double x0, const SmoothParams& params);

// Same, with a precomputed residual variance.
LocalFit local_fit(std::span<const SeriesPoint> points, double x0, const SmoothParams& params,
                   double sigma2);

// Sum of squared residuals at the data points divided by residual_df.
double residual_variance(std::span<const SeriesPoint> points, const SmoothParams& params);

struct SmoothedSeries {
  std::vector<double> eval_x;
  std::vector<double> fit;
  std::vector<double> se;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> cond_var;

  SmoothParams params;
  std::size_t n = 0;
  double seq_mean = 0.0;
  double seq_var = 0.0;  // population variance
  double sigma2 = 0.0;
  double df = 0.0;
  double t_critical = 0.0;

  std::size_t size() const { return eval_x.size(); }
};

SmoothedSeries smooth_series(std::span<const SeriesPoint> points, const SmoothParams& params);

// Linear interpolation of the fit between grid points. Throws InputError
// outside [eval_x.front(), eval_x.back()].
double conditional_mean_at(const SmoothedSeries& series, double x);

struct BandValue {
  double fit = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double cond_var = 0.0;
};

// All band columns interpolated at x; same range rule as conditional_mean_at.
BandValue band_at(const SmoothedSeries& series, double x);

}  // namespace senti
