#include "bcodec/limit_shape.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace bcodec {

namespace {

constexpr double kBisectionTol = 1e-10;
constexpr double kBisectionHi = 4.0;
constexpr double kArchSlack = 1e-9;

// omega continued by |s| outside [-1,1]; the boundary of the quadrant.
double omega_extended(double s) noexcept {
  if (std::abs(s) >= 1.0) return std::abs(s);
  return (2.0 / kPi) * (s * std::asin(s) + std::sqrt(1.0 - s * s));
}

void require_interior_angle(double theta) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw Error(ErrorCode::DomainError, "theta must lie in (0, pi/2)");
  }
}

// Heights y at integer x = col - row along the boundary of d, unscaled.
struct Staircase {
  int x0 = 0;
  std::vector<int> y;
};

Staircase staircase(const YoungDiagram& d) {
  Staircase s;
  const int len = d.num_rows();
  s.x0 = -len;
  int x = -len, y = len;
  s.y.push_back(y);
  for (int i = len; i >= 1; --i) {
    const int step_right = d.row_length(i) - d.row_length(i + 1);
    for (int k = 0; k < step_right; ++k) s.y.push_back(++y), ++x;
    s.y.push_back(--y), ++x;
  }
  return s;
}

double staircase_height(const Staircase& s, double x) noexcept {
  const double lo = s.x0;
  const double hi = s.x0 + static_cast<double>(s.y.size()) - 1.0;
  if (x <= lo || x >= hi) return std::abs(x);
  const double t = x - lo;
  const auto i = static_cast<std::size_t>(t);
  const double frac = t - static_cast<double>(i);
  if (i + 1 >= s.y.size()) return s.y.back();
  return s.y[i] + frac * (s.y[i + 1] - s.y[i]);
}

}  // namespace

ScaledPoint PolarPoint::to_scaled() const noexcept {
  return {r * std::cos(theta), r * std::sin(theta)};
}

double omega(double s) {
  if (!(std::abs(s) <= 1.0)) {
    throw Error(ErrorCode::DomainError, "omega is defined on [-1,1], got " + std::to_string(s));
  }
  return omega_extended(s);
}

double omega_slope(double s) {
  if (!(std::abs(s) <= 1.0)) throw Error(ErrorCode::DomainError, "omega is defined on [-1,1]");
  return (2.0 / kPi) * std::asin(s);
}

Rotated to_rotated(ScaledPoint pt) noexcept {
  return {(pt.q - pt.p) / 2.0, (pt.q + pt.p) / 2.0};
}

double r_theta(double theta) {
  require_interior_angle(theta);
  // v - omega(u) increases strictly along every interior ray.
  auto gap = [theta](double r) {
    const Rotated w = to_rotated(PolarPoint{r, theta}.to_scaled());
    return w.v - omega_extended(w.u);
  };
  double lo = 0.0, hi = kBisectionHi;
  while (hi - lo > kBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) < 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double arch(PolarPoint pt) {
  const double rt = r_theta(pt.theta);
  if (pt.r < 0.0 || pt.r > rt + kArchSlack) {
    throw Error(ErrorCode::DomainError, "radius outside the limit triangle");
  }
  const double a = (pt.r * pt.r) / (rt * rt);
  return std::min(a, 1.0);
}

Cell cell_at(std::size_t n, ScaledPoint pt) noexcept {
  const double s = std::sqrt(static_cast<double>(n));
  return {static_cast<int>(std::floor(pt.p * s)) + 1, static_cast<int>(std::floor(pt.q * s)) + 1};
}

namespace {

template <class Entry>
const Entry& lookup(const Tableau<Entry>& t, std::size_t n, ScaledPoint pt) {
  if (!(pt.p >= 0.0 && pt.q >= 0.0) || n == 0) {
    throw Error(ErrorCode::OutsideDiagram, "point outside the quadrant");
  }
  const Cell c = cell_at(n, pt);
  if (!t.contains(c)) throw Error(ErrorCode::OutsideDiagram, "point outside the diagram");
  return t.at(c);
}

}  // namespace

double phi_eval(const RealTableau& p_tab, std::size_t n, ScaledPoint pt) {
  return lookup(p_tab, n, pt);
}

double psi_eval(const StandardTableau& q_tab, std::size_t n, ScaledPoint pt) {
  return static_cast<double>(lookup(q_tab, n, pt)) / static_cast<double>(n);
}

double profile_height(const YoungDiagram& d, std::size_t n, double u) {
  if (n == 0) return std::abs(u);
  const double scale = 2.0 * std::sqrt(static_cast<double>(n));
  return staircase_height(staircase(d), u * scale) / scale;
}

double profile_distance(const YoungDiagram& d, std::size_t n) {
  if (d.cell_count() != n) {
    throw Error(ErrorCode::CellCountMismatch, "diagram does not have n cells");
  }
  if (n == 0) throw Error(ErrorCode::CellCountMismatch, "profile of the empty diagram is undefined");
  const Staircase s = staircase(d);
  const double scale = 2.0 * std::sqrt(static_cast<double>(n));
  double worst = 0.0;
  for (int i = 0; i < kProfileGridPoints; ++i) {
    const double u = -kProfileHalfWidth + 2.0 * kProfileHalfWidth * i / (kProfileGridPoints - 1);
    const double v = staircase_height(s, u * scale) / scale;
    worst = std::max(worst, std::abs(v - omega_extended(u)));
  }
  return worst;
}

}  // namespace bcodec
