// Test-only reference computations. Nothing here calls into the library's
// algorithms; each helper works straight from the definition.
#ifndef BCODEC_TESTS_ORACLES_HPP_
#define BCODEC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// z_k = #{i <= k : x_i <= x_k}, quadratic count.
inline std::vector<std::int64_t> rank_counts(const std::vector<double>& x) {
  std::vector<std::int64_t> z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) z[k] += x[i] <= x[k] ? 1 : 0;
  }
  return z;
}

// #{i < n : x_1 > x_i}
inline std::int64_t first_exceeds(const std::vector<double>& x) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) d += x[0] > x[i] ? 1 : 0;
  return d;
}

inline std::vector<double> uniform_word(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n);
  for (;;) {
    for (auto& v : x) v = u(gen);
    auto sorted = x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return x;
  }
}

// Point of the limit curve at parameter s, as (r, theta) in the (p,q) quadrant.
struct CurvePoint {
  double r;
  double theta;
};

inline CurvePoint curve_point(double s) {
  const double pi = std::acos(-1.0);
  const double v = (2.0 / pi) * (s * std::asin(s) + std::sqrt(1.0 - s * s));
  const double p = v - s;
  const double q = v + s;
  return {std::hypot(p, q), std::atan2(q, p)};
}

// Radius of the curve on the ray theta, by bisection on the curve parameter s
// (theta increases with s along the curve).
inline double curve_radius(double theta) {
  double lo = -1.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (curve_point(mid).theta < theta) lo = mid; else hi = mid;
  }
  return curve_point(0.5 * (lo + hi)).r;
}

// Spearman rank correlation (no ties expected).
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(v.size());
    // average ranks over ties
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = 0.5 * static_cast<double>(i + j) + 1.0;
      i = j + 1;
    }
    return r;
  };
  const auto ra = ranks(a), rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle

#endif  // BCODEC_TESTS_ORACLES_HPP_
