#include "bcodec/schuetzenberger.hpp"

#include <algorithm>
#include <cmath>

#include "bcodec/rsk.hpp"

namespace bcodec {

namespace {

void require_nonempty(const StandardTableau& q) {
  if (q.empty()) throw Error(ErrorCode::EmptyTableau, "tableau has no cells");
}

}  // namespace

Nerve nerve(const StandardTableau& q) {
  require_nonempty(q);
  Nerve out;
  Cell c{1, 1};
  for (;;) {
    out.cells.push_back(c);
    out.values.push_back(q.at(c));
    const Cell right{c.row, c.col + 1};
    const Cell down{c.row + 1, c.col};
    const bool has_right = q.contains(right);
    const bool has_down = q.contains(down);
    if (!has_right && !has_down) break;
    if (has_right && has_down) {
      c = q.at(right) < q.at(down) ? right : down;
    } else {
      c = has_right ? right : down;
    }
  }
  return out;
}

StandardTableau sch_shift(const StandardTableau& q) {
  const Nerve path = nerve(q);
  auto rows = q.rows();
  for (std::size_t i = 0; i + 1 < path.cells.size(); ++i) {
    const Cell c = path.cells[i];
    rows[c.row - 1][c.col - 1] = path.values[i + 1];
  }
  const Cell last = path.cells.back();
  rows[last.row - 1].pop_back();
  if (rows[last.row - 1].empty()) rows.pop_back();
  for (auto& r : rows) {
    for (int& v : r) --v;
  }
  return StandardTableau(unchecked, std::move(rows));
}

NerveEndpoint nerve_endpoint(const StandardTableau& q) {
  const Cell last = nerve(q).cells.back();
  return {last.row, last.col};
}

double decode_first_nerve(const StandardTableau& q, double kappa) {
  require_nonempty(q);
  if (!(kappa > 0.0)) throw Error(ErrorCode::NonpositiveKappa, "kappa must be positive");
  const auto [a1, a2] = nerve_endpoint(q);
  const double est = kappa * a1 / std::sqrt(static_cast<double>(q.size()));
  return std::clamp(est, 0.0, 1.0);
}

double fit_kappa(const std::vector<double>& raw, const std::vector<double>& x1) {
  if (raw.size() != x1.size() || raw.empty()) {
    throw Error(ErrorCode::ConfigError, "calibration needs matching nonempty samples");
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    sxy += raw[i] * x1[i];
    sxx += raw[i] * raw[i];
  }
  if (!(sxx > 0.0)) throw Error(ErrorCode::ConfigError, "degenerate calibration sample");
  return sxy / sxx;
}

std::vector<StandardTableau> q_tableau_stream(const Realization& x) {
  std::vector<StandardTableau> out;
  out.reserve(x.size());
  RowInserter ins;
  for (double v : x.values()) {
    ins.insert(v);
    out.push_back(ins.q());
  }
  return out;
}

}  // namespace bcodec
