#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bcodec/experiments.hpp"
#include "bcodec/rng.hpp"
#include "bcodec/rsk.hpp"
#include "oracles.hpp"

using namespace bcodec;

TEST_SUITE("experiments") {

TEST_CASE("counter stream is a pure function of key and counter") {
  CounterStream a(123), b(123);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  CHECK(CounterStream(123).at(7) == a.at(7));
  CHECK(derive_key(1, 0) != derive_key(1, 1));
  CHECK(derive_key(1, 0) != derive_key(2, 0));
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sample_realization") {
  CHECK(sample_realization(9, 1000) == sample_realization(9, 1000));
  CHECK_FALSE(sample_realization(9, 1000) == sample_realization(10, 1000));
  const Realization x = sample_realization(9, 5000);
  auto v = x.values();
  for (double e : v) {
    CHECK(e > 0.0);
    CHECK(e < 1.0);
  }
  std::sort(v.begin(), v.end());
  CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
}

TEST_CASE("sample_realization passes Kolmogorov-Smirnov at the 1% level") {
  constexpr std::size_t n = 100000;
  auto v = sample_realization(2024, n).values();
  std::sort(v.begin(), v.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ks = std::max({ks, (i + 1.0) / n - v[i], v[i] - static_cast<double>(i) / n});
  }
  // asymptotic 1% critical value 1.628 / sqrt(n)
  CHECK(ks < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("trace_entry") {
  const Realization x = sample_realization(77, 300);
  const EntryPath first = trace_entry(x, 1);
  CHECK(first.steps.front() == std::pair<std::size_t, Cell>{1, Cell{1, 1}});
  for (const auto& [k, c] : first.steps) CHECK(c.col == 1);

  // x decreasing: each new value bumps x_1 one row down column 1
  const EntryPath dec = trace_entry(Realization({0.4, 0.3, 0.2, 0.1}), 1);
  REQUIRE(dec.steps.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(dec.steps[k].second == Cell{static_cast<int>(k) + 1, 1});

  std::mt19937_64 gen(79);
  for (int trial = 0; trial < 100; ++trial) {
    const Realization w(oracle::uniform_word(gen, 120));
    const std::size_t m = 1 + static_cast<std::size_t>(trial);
    const EntryPath path = trace_entry(w, m);
    CHECK(path.steps.size() == w.size() - m + 1);
    for (std::size_t s = 0; s < path.steps.size(); ++s) {
      const auto [k, c] = path.steps[s];
      // oracle: the tracked cell really holds x_m in P(x^k)
      const RskPair pq = rsk(w.prefix(k));
      CHECK(pq.p.at(c) == w[m - 1]);
      if (s > 0) {
        CHECK(c.col <= path.steps[s - 1].second.col);
        CHECK(c.row >= path.steps[s - 1].second.row);
      }
      if (s >= 3) break;  // the full rebuild is quadratic; spot-check early steps
    }
    const auto [k_last, c_last] = path.steps.back();
    CHECK(rsk(w).p.at(c_last) == w[m - 1]);
    CHECK(k_last == w.size());
  }
  try {
    trace_entry(x, 0);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  CHECK_THROWS_AS(trace_entry(x, 301), Error);
}

TEST_CASE("arrival_step") {
  const Realization x = sample_realization(81, 500);
  CHECK(arrival_step(x, 1) == std::optional<std::size_t>{1});
  std::vector<double> inc;
  for (int i = 1; i <= 30; ++i) inc.push_back(i / 31.0);
  CHECK_FALSE(arrival_step(Realization(inc), 30).has_value());
  CHECK_THROWS_AS(arrival_step(x, 501), Error);

  // the restricted tracker matches the full trace
  std::mt19937_64 gen(83);
  for (int trial = 0; trial < 200; ++trial) {
    const Realization w(oracle::uniform_word(gen, 200));
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 50);
    std::optional<std::size_t> traced;
    for (const auto& [k, c] : trace_entry(w, m).steps) {
      if (c.col == 1) {
        traced = k;
        break;
      }
    }
    CHECK(arrival_step(w, m) == traced);
  }
}

TEST_CASE("run_min_check") {
  CHECK(run_min_check(Realization({0.6, 0.2, 0.9})));
  CHECK(run_min_check(Realization({0.9, 0.5, 0.1})));
  CHECK(run_min_check(Realization({0.1, 0.5, 0.9})));
  for (const auto& perm : oracle::all_permutations(3)) CHECK(run_min_check(from_permutation(perm)));
  for (std::uint64_t s = 0; s < 200; ++s) CHECK(run_min_check(sample_realization(s, 300)));
  CHECK(run_min_check(Realization{}));
}

TEST_CASE("sink_ratio bounds") {
  CHECK(sink_ratio(Realization({0.5})) == 1.0);
  CHECK(sink_ratio(Realization({0.1, 0.2, 0.3})) == 1.0);  // one row
  CHECK(sink_ratio(Realization({0.9, 0.5, 0.1})) == 1.0);  // x1 at the bottom of a column
  CHECK(sink_ratio(Realization({0.1, 0.9, 0.5})) == 0.5);
}

TEST_CASE("decoding experiment") {
  DecodeConfig cfg;
  cfg.n = 2000;
  cfg.trials = 20;
  cfg.seed = 5;
  const auto a = run_decoding_experiment(cfg);
  CHECK(a.records.size() == 20);
  cfg.threads = 3;
  CHECK(run_decoding_experiment(cfg).records == a.records);
  for (const auto& r : a.records) {
    CHECK(r.get("weyl_abs_error") == std::abs(r.get("weyl_estimate") - r.get("x1")));
    CHECK(r.get("nerve_estimate") >= 0.0);
    CHECK(r.get("nerve_estimate") <= 1.0);
  }
  CHECK(a.records[0].get("conjugacy_checked") == 1.0);
  CHECK(a.records[1].get("conjugacy_checked") == 0.0);

  DecodeConfig small;
  small.n = 100;
  small.trials = 200;
  small.seed = 8;
  small.with_nerve = false;
  DecodeConfig large = small;
  large.n = 10000;
  const double err_small = summarize_decoding(run_decoding_experiment(small)).median_weyl_error;
  const double err_large = summarize_decoding(run_decoding_experiment(large)).median_weyl_error;
  CHECK(err_large < err_small);
  CHECK(err_large <= 0.02);
  CHECK(std::isnan(summarize_decoding(run_decoding_experiment(small)).median_nerve_error));

  DecodeConfig bad;
  bad.n = 1;
  bad.trials = 1;
  try {
    run_decoding_experiment(bad);
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
  bad.n = 10;
  bad.trials = 0;
  CHECK_THROWS_AS(run_decoding_experiment(bad), Error);
}

TEST_CASE("shape experiment") {
  ExperimentConfig cfg{2500, 10, 12, 0};
  const auto res = run_shape_experiment(cfg);
  CHECK(res.records.size() == 10);
  for (const auto& r : res.records) {
    CHECK(r.get("row_ratio") > 1.5);
    CHECK(r.get("row_ratio") < 2.2);
    CHECK(r.get("profile_distance") < 0.2);
  }
  CHECK(run_shape_experiment(cfg).records == res.records);
}

TEST_CASE("arch experiment") {
  ArchConfig cfg;
  static_cast<ExperimentConfig&>(cfg) = {2500, 4, 13, 0};
  cfg.grid = default_arch_grid();
  CHECK(cfg.grid.size() == 25);
  const auto res = run_arch_experiment(cfg);
  CHECK(res.records.size() + res.skipped == 4 * 25);
  for (const auto& r : res.records) {
    CHECK(r.get("psi") > 0.0);
    CHECK(r.get("psi") <= 1.0);
    CHECK(r.get("arch") == doctest::Approx(arch({r.get("r"), r.get("theta")})));
  }
  cfg.grid.push_back({3.0, 0.5});
  try {
    run_arch_experiment(cfg);
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
}

TEST_CASE("fluctuation sampling") {
  FluctuationConfig cfg;
  static_cast<ExperimentConfig&>(cfg) = {3000, 6, 17, 0};
  cfg.thetas = default_fluctuation_thetas();
  const auto res = run_fluctuation_sampling(cfg);
  CHECK(res.records.size() + res.skipped == cfg.trials * cfg.thetas.size());
  for (const auto& r : res.records) CHECK(r.get("sample") >= 0.0);
  CHECK(run_fluctuation_sampling(cfg).records == res.records);
  cfg.thetas = {0.0};
  CHECK_THROWS_AS(run_fluctuation_sampling(cfg), Error);
}

TEST_CASE("arrival experiment") {
  ArrivalConfig cfg;
  static_cast<ExperimentConfig&>(cfg) = {2000, 5, 19, 0};
  cfg.ms = {1, 5};
  const auto res = run_arrival_experiment(cfg);
  CHECK(res.records.size() == 10);
  for (const auto& r : res.records) {
    if (r.get("m") == 1.0) CHECK(r.get("arrival_step") == 1.0);
    if (r.get("arrived") == 0.0) CHECK(r.get("arrival_step") == -1.0);
    else CHECK(r.get("arrival_step") >= r.get("m"));
  }
  cfg.ms = {2001};
  CHECK_THROWS_AS(run_arrival_experiment(cfg), Error);
}

TEST_CASE("invariant suite") {
  for (const auto& c : run_invariant_suite(3)) {
    INFO(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(std::isnan(median({})));
}

}  // TEST_SUITE
