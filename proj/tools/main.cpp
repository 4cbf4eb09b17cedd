// bcodec: command line front end for the RSK / Weyl codecs, the limit-shape
// analytics and the Monte Carlo experiments.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcodec/experiments.hpp"
#include "bcodec/io.hpp"
#include "bcodec/limit_shape.hpp"
#include "bcodec/rsk.hpp"
#include "bcodec/schuetzenberger.hpp"
#include "bcodec/weyl.hpp"

namespace {

using namespace bcodec;

constexpr int kExitConfigError = 2;
constexpr int kExitCheckFailed = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Realization read_realization(const std::string& path) {
  std::istringstream in(slurp(path));
  return Realization(io::read_reals(in));
}

// Destination chosen by --out; stdout when empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::ConfigError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CommonExperimentOptions {
  std::size_t n = 10000;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;
  std::string format = "csv";
  bool check = false;
  double kappa = 1.0;
};

void add_size_options(CLI::App* cmd, CommonExperimentOptions& o) {
  cmd->add_option("--n", o.n, "Realization length")->capture_default_str();
  cmd->add_option("--trials", o.trials, "Number of independent trials")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();
}

void emit(const ExperimentResult& result, const CommonExperimentOptions& o) {
  Sink sink(o.out);
  if (o.format == "json") {
    io::write_json(sink.stream(), result);
  } else {
    io::write_csv(sink.stream(), result);
  }
  if (result.skipped > 0) std::cerr << "skipped grid points: " << result.skipped << '\n';
}

int run_checks(std::uint64_t seed) {
  bool ok = true;
  for (const auto& c : run_invariant_suite(seed)) {
    std::cerr << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << '\n';
    ok = ok && c.passed;
  }
  return ok ? 0 : kExitCheckFailed;
}

void write_selected(std::ostream& out, const ExperimentResult& result,
                    const std::vector<std::pair<std::string, std::string>>& columns) {
  out << "trial";
  for (const auto& [header, name] : columns) out << ',' << header;
  out << '\n';
  for (const auto& rec : result.records) {
    out << rec.trial;
    for (const auto& [header, name] : columns) out << ',' << io::format_real(rec.get(name));
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial encodings of Bernoulli schemes: RSK and Weyl-simplex codecs"};
  app.require_subcommand(1);

  // rsk encode
  auto* rsk_cmd = app.add_subcommand("rsk", "RSK correspondence")->require_subcommand(1);
  auto* rsk_encode = rsk_cmd->add_subcommand("encode", "Print the P and/or Q tableau of a word");
  std::string rsk_input = "-";
  std::string rsk_emit = "p,q";
  rsk_encode->add_option("--input", rsk_input, "File of whitespace-separated reals, or - for stdin");
  rsk_encode->add_option("--emit", rsk_emit, "Comma-separated subset of p,q")->capture_default_str();

  // weyl encode / decode
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl-simplex codec")->require_subcommand(1);
  auto* weyl_encode = weyl_cmd->add_subcommand("encode", "Print the rank sequence z of a word");
  std::string weyl_input = "-";
  weyl_encode->add_option("--input", weyl_input, "File of whitespace-separated reals, or - for stdin");
  auto* weyl_decode = weyl_cmd->add_subcommand("decode", "Estimate x1 by d_n/n on sampled realizations");
  CommonExperimentOptions weyl_opts;
  weyl_opts.trials = 1;
  add_size_options(weyl_decode, weyl_opts);

  // nerve show
  auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a standard tableau")->require_subcommand(1);
  auto* nerve_show = nerve_cmd->add_subcommand("show", "Print the nerve of a tableau given as JSON");
  std::string nerve_input;
  nerve_show->add_option("--tableau", nerve_input, "JSON tableau file, or - for stdin")->required();

  // decode nerve
  auto* decode_cmd = app.add_subcommand("decode", "Decoders")->require_subcommand(1);
  auto* decode_nerve = decode_cmd->add_subcommand("nerve", "Nerve-endpoint decoder on sampled realizations");
  CommonExperimentOptions nerve_opts;
  add_size_options(decode_nerve, nerve_opts);
  decode_nerve->add_option("--kappa", nerve_opts.kappa, "Calibration constant")->capture_default_str();

  // shape omega / arch
  auto* shape_cmd = app.add_subcommand("shape", "Limit-shape analytics")->require_subcommand(1);
  auto* shape_omega = shape_cmd->add_subcommand("omega", "Tabulate the limit curve");
  int omega_samples = 201;
  shape_omega->add_option("--samples", omega_samples, "Number of points on [-1,1]")->capture_default_str();
  auto* shape_arch = shape_cmd->add_subcommand("arch", "Tabulate the arch on a polar grid");
  std::vector<int> arch_grid{5, 5};
  shape_arch->add_option("--grid", arch_grid, "Radial and angular point counts R,T")
      ->delimiter(',')
      ->expected(2);

  // experiment ...
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiments")->require_subcommand(1);
  CommonExperimentOptions exp_opts;
  std::vector<std::size_t> arrival_ms;
  std::vector<CLI::App*> experiments;
  for (const char* name : {"decode", "shape", "arch", "arrival", "fluct"}) {
    auto* sub = exp_cmd->add_subcommand(name);
    add_size_options(sub, exp_opts);
    sub->add_option("--out", exp_opts.out, "Output path (stdout when omitted)");
    sub->add_option("--format", exp_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_flag("--check", exp_opts.check, "Run the invariant suite first; exit nonzero on violation");
    experiments.push_back(sub);
  }
  experiments[0]->description("Weyl and nerve decoding errors");
  experiments[0]->add_option("--kappa", exp_opts.kappa, "Nerve calibration constant")->capture_default_str();
  experiments[1]->description("Limit-shape distance and first row/column ratios");
  experiments[2]->description("Scaled P and Q tableaux against the arch");
  experiments[3]->description("Steps until x_m reaches the first column of P");
  experiments[3]->add_option("--m", arrival_ms, "Tracked indices (default 5,10,20,40)")->delimiter(',');
  experiments[4]->description("sqrt(n)(1 - psi_n) at the boundary cell of each ray");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (rsk_encode->parsed()) {
      const RskPair pq = rsk(read_realization(rsk_input));
      std::stringstream fields(rsk_emit);
      std::string field;
      while (std::getline(fields, field, ',')) {
        if (field == "p") {
          std::cout << io::to_json(pq.p) << '\n';
        } else if (field == "q") {
          std::cout << io::to_json(pq.q) << '\n';
        } else {
          throw Error(ErrorCode::ConfigError, "--emit accepts p and q, got " + field);
        }
      }
    } else if (weyl_encode->parsed()) {
      const ZSequence z = encode_weyl(read_realization(weyl_input));
      for (std::size_t k = 0; k < z.size(); ++k) std::cout << (k ? " " : "") << z[k];
      std::cout << '\n';
    } else if (weyl_decode->parsed()) {
      DecodeConfig cfg;
      static_cast<ExperimentConfig&>(cfg) = {weyl_opts.n, weyl_opts.trials, weyl_opts.seed, weyl_opts.threads};
      cfg.with_nerve = false;
      write_selected(std::cout, run_decoding_experiment(cfg),
                     {{"x1", "x1"}, {"estimate", "weyl_estimate"}, {"abs_error", "weyl_abs_error"}});
    } else if (nerve_show->parsed()) {
      std::cout << io::to_json(nerve(io::parse_standard_tableau(slurp(nerve_input)))) << '\n';
    } else if (decode_nerve->parsed()) {
      DecodeConfig cfg;
      static_cast<ExperimentConfig&>(cfg) = {nerve_opts.n, nerve_opts.trials, nerve_opts.seed, nerve_opts.threads};
      cfg.kappa = nerve_opts.kappa;
      write_selected(std::cout, run_decoding_experiment(cfg),
                     {{"x1", "x1"}, {"a1", "a1"}, {"a2", "a2"}, {"estimate", "nerve_estimate"}});
    } else if (shape_omega->parsed()) {
      if (omega_samples < 2) throw Error(ErrorCode::ConfigError, "--samples must be at least 2");
      std::cout << "s,omega\n";
      for (int i = 0; i < omega_samples; ++i) {
        const double s = -1.0 + 2.0 * i / (omega_samples - 1);
        std::cout << io::format_real(s) << ',' << io::format_real(omega(s)) << '\n';
      }
    } else if (shape_arch->parsed()) {
      const int radial = arch_grid.at(0), angular = arch_grid.at(1);
      if (radial < 2 || angular < 1) throw Error(ErrorCode::ConfigError, "--grid needs R >= 2 and T >= 1");
      std::cout << "r,theta,arch\n";
      for (int j = 0; j < angular; ++j) {
        const double theta = (j + 1) * kPi / (2.0 * (angular + 1));
        const double rt = r_theta(theta);
        for (int i = 0; i < radial; ++i) {
          const double r = rt * i / (radial - 1);
          std::cout << io::format_real(r) << ',' << io::format_real(theta) << ','
                    << io::format_real(arch({r, theta})) << '\n';
        }
      }
    } else {
      if (exp_opts.check) {
        if (const int rc = run_checks(exp_opts.seed); rc != 0) return rc;
      }
      const ExperimentConfig base{exp_opts.n, exp_opts.trials, exp_opts.seed, exp_opts.threads};
      if (experiments[0]->parsed()) {
        DecodeConfig cfg;
        static_cast<ExperimentConfig&>(cfg) = base;
        cfg.kappa = exp_opts.kappa;
        emit(run_decoding_experiment(cfg), exp_opts);
      } else if (experiments[1]->parsed()) {
        emit(run_shape_experiment(base), exp_opts);
      } else if (experiments[2]->parsed()) {
        ArchConfig cfg;
        static_cast<ExperimentConfig&>(cfg) = base;
        cfg.grid = default_arch_grid();
        emit(run_arch_experiment(cfg), exp_opts);
      } else if (experiments[3]->parsed()) {
        ArrivalConfig cfg;
        static_cast<ExperimentConfig&>(cfg) = base;
        cfg.ms = arrival_ms.empty() ? default_arrival_ms() : arrival_ms;
        emit(run_arrival_experiment(cfg), exp_opts);
      } else if (experiments[4]->parsed()) {
        FluctuationConfig cfg;
        static_cast<ExperimentConfig&>(cfg) = base;
        cfg.thetas = default_fluctuation_thetas();
        emit(run_fluctuation_sampling(cfg), exp_opts);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ConfigError ? kExitConfigError : 1;
  }
  return 0;
}
