#ifndef BCODEC_SCHUETZENBERGER_HPP_
#define BCODEC_SCHUETZENBERGER_HPP_

#include <vector>

#include "bcodec/tableau.hpp"

namespace bcodec {

// The chain of cells from (1,1) that always steps to whichever of the right
// or lower neighbour holds the smaller entry, ending at an outer corner.
struct Nerve {
  std::vector<Cell> cells;
  std::vector<int> values;

  friend bool operator==(const Nerve&, const Nerve&) = default;
};

// All of these throw Error(EmptyTableau) on an empty tableau.
Nerve nerve(const StandardTableau& q);

// Finite Schuetzenberger shift: slide the entries one step back along the
// nerve, drop the last nerve cell, subtract one from every entry.
// Q(x_1..x_n) maps to Q(x_2..x_n).
StandardTableau sch_shift(const StandardTableau& q);

struct NerveEndpoint {
  int a1 = 1;  // row
  int a2 = 1;  // column

  friend bool operator==(const NerveEndpoint&, const NerveEndpoint&) = default;
};

NerveEndpoint nerve_endpoint(const StandardTableau& q);

// clamp(kappa * a1 / sqrt(n), 0, 1). Throws NonpositiveKappa for kappa <= 0.
double decode_first_nerve(const StandardTableau& q, double kappa = 1.0);

// Least-squares slope through the origin of x1 against the raw statistic
// a1/sqrt(n); the calibrated kappa for decode_first_nerve.
double fit_kappa(const std::vector<double>& raw, const std::vector<double>& x1);

// Q(x^1), Q(x^2), ..., Q(x^n).
std::vector<StandardTableau> q_tableau_stream(const Realization& x);

}  // namespace bcodec

#endif  // BCODEC_SCHUETZENBERGER_HPP_
