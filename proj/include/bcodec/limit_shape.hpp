#ifndef BCODEC_LIMIT_SHAPE_HPP_
#define BCODEC_LIMIT_SHAPE_HPP_

#include <cstddef>

#include "bcodec/tableau.hpp"

namespace bcodec {

// Coordinates of a diagram shrunk by sqrt(n): p runs down the rows,
// q along the columns.
struct ScaledPoint {
  double p = 0.0;
  double q = 0.0;
};

// Polar coordinates on the (p,q) quadrant: p = r cos(theta), q = r sin(theta).
struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;

  ScaledPoint to_scaled() const noexcept;
};

struct Rotated {
  double u = 0.0;
  double v = 0.0;
};

inline constexpr double kPi = 3.14159265358979323846;

// (2/pi)(s asin s + sqrt(1 - s^2)) on |s| <= 1; DomainError outside.
double omega(double s);
// Derivative (2/pi) asin s.
double omega_slope(double s);

// u = (q - p)/2, v = (q + p)/2. The limit boundary is v = omega(u).
Rotated to_rotated(ScaledPoint pt) noexcept;

// Radius along the ray at angle theta where it meets the limit curve.
// DomainError unless 0 < theta < pi/2.
double r_theta(double theta);

// r^2 / r_theta^2. DomainError for r outside [0, r_theta].
double arch(PolarPoint pt);

// Value of the scaled P step function: the entry of the cell holding
// (p sqrt(n), q sqrt(n)), cells indexed by floor + 1. OutsideDiagram when the
// point misses the tableau.
double phi_eval(const RealTableau& p_tab, std::size_t n, ScaledPoint pt);
// Same lookup on Q, divided by n.
double psi_eval(const StandardTableau& q_tab, std::size_t n, ScaledPoint pt);

// Cell of the lookup above, without the containment check.
Cell cell_at(std::size_t n, ScaledPoint pt) noexcept;

// Rotated, sqrt(n)-scaled boundary of d as a function of u (piecewise linear,
// equal to |u| outside the diagram's span).
double profile_height(const YoungDiagram& d, std::size_t n, double u);

inline constexpr double kProfileHalfWidth = 0.95;
inline constexpr int kProfileGridPoints = 401;

// sup over a uniform u grid on [-0.95, 0.95] of |profile - omega|.
// CellCountMismatch unless d has n cells.
double profile_distance(const YoungDiagram& d, std::size_t n);

}  // namespace bcodec

#endif  // BCODEC_LIMIT_SHAPE_HPP_
