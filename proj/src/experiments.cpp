#include "bcodec/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "bcodec/rng.hpp"
#include "bcodec/rsk.hpp"
#include "bcodec/schuetzenberger.hpp"
#include "bcodec/weyl.hpp"

namespace bcodec {

double TrialRecord::get(std::string_view name) const {
  for (const auto& [key, value] : measurements) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::IndexOutOfRange, "no measurement named " + std::string(name));
}

std::vector<double> ExperimentResult::column(std::string_view name) const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.get(name));
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

Realization sample_realization(std::uint64_t seed, std::size_t n) {
  CounterStream stream(seed);
  std::vector<double> values(n);
  for (auto& v : values) v = stream.uniform();

  // Redraw ties from further along the same stream until all are distinct.
  std::vector<std::size_t> order(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b] || (values[a] == values[b] && a < b);
    });
    bool redrawn = false;
    for (std::size_t i = 1; i < n; ++i) {
      if (values[order[i]] == values[order[i - 1]]) {
        values[order[i]] = stream.uniform();
        redrawn = true;
      }
    }
    if (!redrawn) break;
  }
  return Realization(unchecked, std::move(values));
}

namespace {

void require_index(const Realization& x, std::size_t m) {
  if (m < 1 || m > x.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "tracked index must lie in 1..n");
  }
}

// Follows the value that sat at `at` through one insertion's bump path.
Cell follow(Cell at, const std::vector<Cell>& bump_path) {
  const auto r = static_cast<std::size_t>(at.row);
  if (bump_path.size() > r && bump_path[r - 1].col == at.col) return bump_path[r];
  return at;
}

// Column of x_m only depends on the entries not larger than x_m, so the
// others are never inserted.
std::optional<std::size_t> arrival_restricted(const Realization& x, std::size_t m) {
  const double target = x[m - 1];
  RowInserter ins;
  std::vector<Cell> path;
  Cell at{};
  for (std::size_t k = 1; k <= x.size(); ++k) {
    const double v = x[k - 1];
    if (v > target) continue;
    ins.insert(v, &path);
    if (k < m) continue;
    at = (k == m) ? path.front() : follow(at, path);
    if (at.col == 1) return k;
  }
  return std::nullopt;
}

void require_sizes(const ExperimentConfig& c, std::size_t min_n) {
  if (c.n < min_n) {
    throw Error(ErrorCode::ConfigError, "n must be at least " + std::to_string(min_n));
  }
  if (c.trials < 1) throw Error(ErrorCode::ConfigError, "trials must be positive");
}

// Runs body(trial) for every trial, concurrently, and concatenates the
// per-trial records in trial order so the output does not depend on
// scheduling.
template <class Body>
ExperimentResult run_trials(const ExperimentConfig& config, Body body) {
  std::vector<std::vector<TrialRecord>> per_trial(config.trials);
  std::vector<std::size_t> skipped(config.trials, 0);
  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(config.trials)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        per_trial[t] = body(t, derive_key(config.seed, t), skipped[t]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = config.trials;
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult out;
  for (std::size_t t = 0; t < config.trials; ++t) {
    for (auto& rec : per_trial[t]) out.records.push_back(std::move(rec));
    out.skipped += skipped[t];
  }
  return out;
}

TrialRecord make_record(std::uint64_t key, std::size_t trial, std::size_t n) {
  TrialRecord rec;
  rec.seed = key;
  rec.trial = trial;
  rec.n = n;
  return rec;
}

// Largest radius along the ray whose cell is still inside the diagram.
double boundary_radius(const YoungDiagram& d, std::size_t n, double theta) {
  const double s = std::sqrt(static_cast<double>(n));
  const auto inside = [&](double r) { return d.contains(cell_at(n, PolarPoint{r, theta}.to_scaled())); };
  double lo = 0.0;
  double hi = (d.num_rows() + d.row_length(1) + 2) / s;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (inside(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace

EntryPath trace_entry(const Realization& x, std::size_t m) {
  require_index(x, m);
  EntryPath out;
  RowInserter ins;
  std::vector<Cell> path;
  Cell at{};
  for (std::size_t k = 1; k <= x.size(); ++k) {
    ins.insert(x[k - 1], &path);
    if (k < m) continue;
    at = (k == m) ? path.front() : follow(at, path);
    out.steps.emplace_back(k, at);
  }
  return out;
}

std::optional<std::size_t> arrival_step(const Realization& x, std::size_t m) {
  require_index(x, m);
  return arrival_restricted(x, m);
}

bool run_min_check(const Realization& x) {
  RowInserter ins;
  double running = std::numeric_limits<double>::infinity();
  for (double v : x.values()) {
    ins.insert(v);
    running = std::min(running, v);
    if (ins.p_rows().front().front() != running) return false;
  }
  return true;
}

double sink_ratio(const Realization& x) {
  if (x.empty()) throw Error(ErrorCode::IndexOutOfRange, "empty realization");
  RowInserter ins;
  for (double v : x.values()) ins.insert(v);
  const auto& rows = ins.p_rows();
  // x_1 never leaves column 1, whose entries increase downwards
  auto it = std::partition_point(rows.begin(), rows.end(),
                                 [x1 = x[0]](const std::vector<double>& r) { return r.front() < x1; });
  const auto row = static_cast<double>(it - rows.begin()) + 1.0;
  return row / static_cast<double>(rows.size());
}

ExperimentResult run_decoding_experiment(const DecodeConfig& config) {
  require_sizes(config, 2);
  if (config.with_nerve && !(config.kappa > 0.0)) {
    throw Error(ErrorCode::ConfigError, "kappa must be positive");
  }
  const double root_n = std::sqrt(static_cast<double>(config.n));
  return run_trials(config, [&](std::size_t t, std::uint64_t key, std::size_t&) {
    const Realization x = sample_realization(key, config.n);
    TrialRecord rec = make_record(key, t, config.n);
    const double x1 = x[0];
    const double weyl = decode_first_weyl(encode_weyl(x));
    rec.set("x1", x1);
    rec.set("weyl_estimate", weyl);
    rec.set("weyl_abs_error", std::abs(weyl - x1));
    if (config.with_nerve) {
      RowInserter ins;
      for (double v : x.values()) ins.insert(v);
      const StandardTableau q = ins.q();
      const auto [a1, a2] = nerve_endpoint(q);
      const double est = decode_first_nerve(q, config.kappa);
      rec.set("a1", a1);
      rec.set("a2", a2);
      rec.set("nerve_raw", a1 / root_n);
      rec.set("nerve_estimate", est);
      rec.set("nerve_abs_error", std::abs(est - x1));

      const auto& rows = ins.p_rows();
      auto it = std::partition_point(rows.begin(), rows.end(),
                                     [x1](const std::vector<double>& r) { return r.front() < x1; });
      const double sink = (static_cast<double>(it - rows.begin()) + 1.0) / static_cast<double>(rows.size());
      rec.set("sink_ratio", sink);
      rec.set("sink_abs_error", std::abs(sink - x1));

      // Spot check of the shift/Q conjugacy on one trial in a hundred.
      const bool spot = t % 100 == 0;
      if (spot && sch_shift(q) != rsk(x.drop_first()).q) {
        throw Error(ErrorCode::InvariantViolation, "Schuetzenberger conjugacy failed in trial " + std::to_string(t));
      }
      rec.set("conjugacy_checked", spot ? 1.0 : 0.0);
    }
    return std::vector<TrialRecord>{std::move(rec)};
  });
}

ExperimentResult run_shape_experiment(const ExperimentConfig& config) {
  require_sizes(config, 1);
  const double root_n = std::sqrt(static_cast<double>(config.n));
  return run_trials(config, [&](std::size_t t, std::uint64_t key, std::size_t&) {
    const Realization x = sample_realization(key, config.n);
    RowInserter ins;
    for (double v : x.values()) ins.insert(v);
    const YoungDiagram shape = ins.shape();
    TrialRecord rec = make_record(key, t, config.n);
    rec.set("profile_distance", profile_distance(shape, config.n));
    rec.set("row_ratio", shape.row_length(1) / root_n);
    rec.set("col_ratio", shape.num_rows() / root_n);
    return std::vector<TrialRecord>{std::move(rec)};
  });
}

ExperimentResult run_arch_experiment(const ArchConfig& config) {
  require_sizes(config, 1);
  if (config.grid.empty()) throw Error(ErrorCode::ConfigError, "arch grid is empty");
  std::vector<double> arch_values;
  for (const auto& g : config.grid) {
    if (!(g.theta > 0.0 && g.theta < kPi / 2.0) || g.r < 0.0 || g.r > r_theta(g.theta)) {
      throw Error(ErrorCode::ConfigError, "grid points must lie inside the limit triangle");
    }
    arch_values.push_back(arch(g));
  }
  return run_trials(config, [&](std::size_t t, std::uint64_t key, std::size_t& skipped) {
    const Realization x = sample_realization(key, config.n);
    RowInserter ins;
    for (double v : x.values()) ins.insert(v);
    const RealTableau p = ins.p();
    const StandardTableau q = ins.q();
    std::vector<TrialRecord> out;
    for (std::size_t g = 0; g < config.grid.size(); ++g) {
      const ScaledPoint pt = config.grid[g].to_scaled();
      if (!q.contains(cell_at(config.n, pt))) {
        ++skipped;
        continue;
      }
      const double phi = phi_eval(p, config.n, pt);
      const double psi = psi_eval(q, config.n, pt);
      TrialRecord rec = make_record(key, t, config.n);
      rec.set("grid_point", static_cast<double>(g));
      rec.set("r", config.grid[g].r);
      rec.set("theta", config.grid[g].theta);
      rec.set("arch", arch_values[g]);
      rec.set("phi", phi);
      rec.set("psi", psi);
      rec.set("phi_abs_error", std::abs(phi - arch_values[g]));
      rec.set("psi_abs_error", std::abs(psi - arch_values[g]));
      out.push_back(std::move(rec));
    }
    return out;
  });
}

ExperimentResult run_fluctuation_sampling(const FluctuationConfig& config) {
  require_sizes(config, 1);
  if (config.thetas.empty()) throw Error(ErrorCode::ConfigError, "no angles given");
  for (double th : config.thetas) {
    if (!(th > 0.0 && th < kPi / 2.0)) throw Error(ErrorCode::ConfigError, "angles must lie in (0, pi/2)");
  }
  const double root_n = std::sqrt(static_cast<double>(config.n));
  return run_trials(config, [&](std::size_t t, std::uint64_t key, std::size_t& skipped) {
    const Realization x = sample_realization(key, config.n);
    RowInserter ins;
    for (double v : x.values()) ins.insert(v);
    const StandardTableau q = ins.q();
    const YoungDiagram shape = ins.shape();
    std::vector<TrialRecord> out;
    for (double theta : config.thetas) {
      const double r = boundary_radius(shape, config.n, theta);
      const ScaledPoint pt = PolarPoint{r, theta}.to_scaled();
      if (!q.contains(cell_at(config.n, pt))) {
        ++skipped;
        continue;
      }
      const double psi = psi_eval(q, config.n, pt);
      TrialRecord rec = make_record(key, t, config.n);
      rec.set("theta", theta);
      rec.set("r", r);
      rec.set("psi", psi);
      rec.set("sample", root_n * (1.0 - psi));
      out.push_back(std::move(rec));
    }
    return out;
  });
}

ExperimentResult run_arrival_experiment(const ArrivalConfig& config) {
  require_sizes(config, 1);
  if (config.ms.empty()) throw Error(ErrorCode::ConfigError, "no tracked indices given");
  for (std::size_t m : config.ms) {
    if (m < 1 || m > config.n) throw Error(ErrorCode::ConfigError, "tracked index must lie in 1..n");
  }
  return run_trials(config, [&](std::size_t t, std::uint64_t key, std::size_t&) {
    const Realization x = sample_realization(key, config.n);
    std::vector<TrialRecord> out;
    for (std::size_t m : config.ms) {
      const auto k = arrival_restricted(x, m);
      TrialRecord rec = make_record(key, t, config.n);
      rec.set("m", static_cast<double>(m));
      rec.set("x_m", x[m - 1]);
      rec.set("arrived", k ? 1.0 : 0.0);
      rec.set("arrival_step", k ? static_cast<double>(*k) : -1.0);
      out.push_back(std::move(rec));
    }
    return out;
  });
}

DecodingSummary summarize_decoding(const ExperimentResult& result) {
  DecodingSummary s;
  s.median_weyl_error = median(result.column("weyl_abs_error"));
  const bool nerve = !result.records.empty() && [&] {
    for (const auto& [k, v] : result.records.front().measurements) {
      if (k == "nerve_abs_error") return true;
    }
    return false;
  }();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  s.median_nerve_error = nerve ? median(result.column("nerve_abs_error")) : nan;
  s.median_sink_error = nerve ? median(result.column("sink_abs_error")) : nan;
  return s;
}

std::vector<PolarPoint> default_arch_grid() {
  std::vector<PolarPoint> grid;
  for (int a = 1; a <= 5; ++a) {
    const double theta = a * kPi / 12.0;
    const double rt = r_theta(theta);
    for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) grid.push_back({frac * rt, theta});
  }
  return grid;
}

std::vector<double> default_fluctuation_thetas() {
  return {kPi / 12.0, kPi / 6.0, kPi / 4.0, kPi / 3.0, 5.0 * kPi / 12.0};
}

std::vector<std::size_t> default_arrival_ms() { return {5, 10, 20, 40}; }

std::vector<InvariantCheck> run_invariant_suite(std::uint64_t seed) {
  constexpr std::size_t kSamples = 50;
  bool round_trip = true, conjugacy = true, weyl_conj = true, running_min = true;
  bool monotone_path = true, arrival_agrees = true, shapes_match = true;
  for (std::size_t i = 0; i < kSamples; ++i) {
    const std::uint64_t key = derive_key(seed, i);
    const std::size_t n = 2 + static_cast<std::size_t>(CounterStream(key).at(1 << 20) % 60);
    const Realization x = sample_realization(key, n);
    const RskPair pq = rsk(x);
    shapes_match = shapes_match && pq.p.shape() == pq.q.shape();
    round_trip = round_trip && inverse_rsk(pq) == x;
    conjugacy = conjugacy && sch_shift(pq.q) == rsk(x.drop_first()).q;
    weyl_conj = weyl_conj && shift_w(encode_weyl(x)) == encode_weyl(x.drop_first());
    running_min = running_min && run_min_check(x);
    const std::size_t m = 1 + i % n;
    const EntryPath path = trace_entry(x, m);
    std::optional<std::size_t> traced;
    for (std::size_t s = 0; s < path.steps.size(); ++s) {
      const Cell c = path.steps[s].second;
      if (s > 0) {
        const Cell prev = path.steps[s - 1].second;
        monotone_path = monotone_path && c.col <= prev.col && c.row >= prev.row;
      }
      if (!traced && c.col == 1) traced = path.steps[s].first;
    }
    arrival_agrees = arrival_agrees && traced == arrival_step(x, m);
  }
  return {
      {"rsk_shapes_match", shapes_match},
      {"rsk_round_trip", round_trip},
      {"schuetzenberger_conjugacy", conjugacy},
      {"weyl_shift_conjugacy", weyl_conj},
      {"running_min_corner", running_min},
      {"entry_path_monotone", monotone_path},
      {"arrival_matches_trace", arrival_agrees},
  };
}

}  // namespace bcodec
