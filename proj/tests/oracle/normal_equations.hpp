#pragma once

// Test-only reference for the local regression. Shares the window and
// weighting conventions with the library but nothing of its code path:
// full sort for neighbour selection, raw (unscaled) centred basis in long
// double, and an explicit adjugate inverse of the normal matrix.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Point {
  double x;
  double y;
};

struct Result {
  long double fit;
  std::vector<long double> l;  // equivalent kernel over all n points
};

inline std::size_t window_count(std::size_t n, double span) {
  auto q = static_cast<std::size_t>(std::ceil(span * static_cast<double>(n) * (1.0 - 1e-12)));
  return std::clamp<std::size_t>(q, 1, n);
}

inline long double tricube(long double u) {
  u = std::fabs(u);
  if (u >= 1.0L) return 0.0L;
  return std::pow(1.0L - std::pow(u, 3.0L), 3.0L);
}

using Mat = std::array<std::array<long double, 3>, 3>;

// Inverse of the leading m x m block via the adjugate.
inline Mat inverse(const Mat& a, std::size_t m) {
  Mat inv{};
  if (m == 1) {
    inv[0][0] = 1.0L / a[0][0];
    return inv;
  }
  if (m == 2) {
    const long double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det == 0.0L) throw std::runtime_error("oracle: singular");
    inv[0][0] = a[1][1] / det;
    inv[0][1] = -a[0][1] / det;
    inv[1][0] = -a[1][0] / det;
    inv[1][1] = a[0][0] / det;
    return inv;
  }
  const long double c00 = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const long double c01 = a[1][2] * a[2][0] - a[1][0] * a[2][2];
  const long double c02 = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  const long double det = a[0][0] * c00 + a[0][1] * c01 + a[0][2] * c02;
  if (det == 0.0L) throw std::runtime_error("oracle: singular");
  inv[0][0] = c00 / det;
  inv[1][0] = c01 / det;
  inv[2][0] = c02 / det;
  inv[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
  inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
  inv[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
  inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
  inv[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
  inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
  return inv;
}

inline Result solve_at(const std::vector<Point>& pts, double x0, double span, int degree) {
  const std::size_t n = pts.size();
  const std::size_t q = window_count(n, span);
  const std::size_t m = static_cast<std::size_t>(degree) + 1;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(pts[a].x - x0) < std::fabs(pts[b].x - x0);
  });
  order.resize(q);

  long double far = 0.0L;
  for (auto i : order) far = std::max<long double>(far, std::fabs(pts[i].x - x0));
  const long double h = 1.01L * far;

  Mat normal{};
  std::vector<long double> w(q);
  std::vector<std::array<long double, 3>> phi(q);
  for (std::size_t k = 0; k < q; ++k) {
    const long double u = static_cast<long double>(pts[order[k]].x) - x0;
    w[k] = h > 0.0L ? tricube(u / h) : 1.0L;
    phi[k] = {1.0L, u, u * u};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) normal[i][j] += w[k] * phi[k][i] * phi[k][j];
    }
  }
  const Mat inv = inverse(normal, m);

  Result r{0.0L, std::vector<long double>(n, 0.0L)};
  for (std::size_t k = 0; k < q; ++k) {
    long double row = 0.0L;
    for (std::size_t j = 0; j < m; ++j) row += inv[0][j] * phi[k][j];
    r.l[order[k]] = w[k] * row;
    r.fit += r.l[order[k]] * pts[order[k]].y;
  }
  return r;
}

inline long double sigma2(const std::vector<Point>& pts, double span, int degree) {
  long double rss = 0.0L;
  for (const auto& p : pts) {
    const long double r = p.y - solve_at(pts, p.x, span, degree).fit;
    rss += r * r;
  }
  const double df =
      std::max(1.0, static_cast<double>(pts.size()) - 1.25 * (degree + 1) / span);
  return rss / df;
}

struct FitSe {
  double fit;
  double se;
};

inline FitSe fit_se(const std::vector<Point>& pts, double x0, double span, int degree,
                    long double s2) {
  const Result r = solve_at(pts, x0, span, degree);
  long double ss = 0.0L;
  for (auto v : r.l) ss += v * v;
  return {static_cast<double>(r.fit), static_cast<double>(std::sqrt(s2 * ss))};
}

}  // namespace oracle
