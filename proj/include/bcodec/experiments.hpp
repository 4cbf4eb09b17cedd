#ifndef BCODEC_EXPERIMENTS_HPP_
#define BCODEC_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcodec/limit_shape.hpp"
#include "bcodec/tableau.hpp"

namespace bcodec {

// One row of experiment output. Measurements keep insertion order so the
// CSV header is stable.
struct TrialRecord {
  std::uint64_t seed = 0;  // key of the trial's random stream
  std::size_t trial = 0;
  std::size_t n = 0;
  std::vector<std::pair<std::string, double>> measurements;

  void set(std::string name, double value) { measurements.emplace_back(std::move(name), value); }
  // Throws Error(IndexOutOfRange) for an unknown name.
  double get(std::string_view name) const;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::size_t skipped = 0;  // grid points that fell outside the realized diagram

  std::vector<double> column(std::string_view name) const;
};

// Where a tracked value sits in P after each insertion, from its own step on.
struct EntryPath {
  std::vector<std::pair<std::size_t, Cell>> steps;  // (prefix length k, cell)
};

// n i.i.d. uniform (0,1) values from the counter stream keyed by seed.
Realization sample_realization(std::uint64_t seed, std::size_t n);

// Throws IndexOutOfRange unless 1 <= m <= x.size().
EntryPath trace_entry(const Realization& x, std::size_t m);

// Smallest prefix length k with x_m in column 1 of P(x^k); nullopt if that
// never happens within x.
std::optional<std::size_t> arrival_step(const Realization& x, std::size_t m);

// P(x^k)[1,1] == min(x_1..x_k) for every k.
bool run_min_check(const Realization& x);

// Row of x_1 in P(x) divided by the length of the first column.
double sink_ratio(const Realization& x);

struct ExperimentConfig {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct DecodeConfig : ExperimentConfig {
  double kappa = 1.0;
  bool with_nerve = true;
};

struct ArchConfig : ExperimentConfig {
  std::vector<PolarPoint> grid;
};

struct FluctuationConfig : ExperimentConfig {
  std::vector<double> thetas;
};

struct ArrivalConfig : ExperimentConfig {
  std::vector<std::size_t> ms;
};

// All runners throw Error(ConfigError) on nonpositive sizes or malformed grids.
ExperimentResult run_decoding_experiment(const DecodeConfig& config);
ExperimentResult run_shape_experiment(const ExperimentConfig& config);
ExperimentResult run_arch_experiment(const ArchConfig& config);
ExperimentResult run_fluctuation_sampling(const FluctuationConfig& config);
ExperimentResult run_arrival_experiment(const ArrivalConfig& config);

struct DecodingSummary {
  double median_weyl_error = 0.0;
  double median_nerve_error = 0.0;  // NaN when the nerve was not measured
  double median_sink_error = 0.0;
};

DecodingSummary summarize_decoding(const ExperimentResult& result);

// Five angles times five radial fractions (0.1..0.9 of r_theta).
std::vector<PolarPoint> default_arch_grid();
std::vector<double> default_fluctuation_thetas();
std::vector<std::size_t> default_arrival_ms();

struct InvariantCheck {
  std::string name;
  bool passed = false;
};

// The embedded invariant suite behind the CLI --check flag.
std::vector<InvariantCheck> run_invariant_suite(std::uint64_t seed);

double median(std::vector<double> values);

}  // namespace bcodec

#endif  // BCODEC_EXPERIMENTS_HPP_
